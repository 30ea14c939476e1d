#include <doctest.h>

#include <random>

#include "dyncol/errors.hpp"
#include "dyncol/generators.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/graph_io.hpp"
#include "oracles.hpp"

using namespace dyncol;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("graph basics")
{
    Graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.has_edge(1, 0));
    CHECK(g.size() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.remove_edge(0, 1));
    CHECK_FALSE(g.remove_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidGraph);
    CHECK_THROWS_AS(g.add_edge(0, 9), InvalidGraph);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, dup), InvalidGraph);
}

TEST_CASE("square")
{
    CHECK(square(fig1_graph()).size() == 21);
    CHECK(square(path_graph(3)) == complete_graph(3));
    CHECK(square(Graph(5)).size() == 0);
    CHECK(square(petersen()).size() == 45);

    for (const auto& g : oracle::atlas()) {
        const auto d = oracle::distances(g);
        const Graph sq = square(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) REQUIRE(sq.has_edge(u, v) == (d[u][v] == 1 || d[u][v] == 2));
    }
}

TEST_CASE("W classes and weak neighbors")
{
    const Graph h = fig1_graph();
    auto w = classify_w(h);
    CHECK(w[0] == WClass::W3);
    for (int v : {2, 4, 6}) CHECK(w[v] == WClass::W1);
    for (int v : {1, 3, 5}) CHECK(w[v] == WClass::NotA3Vertex);
    for (auto c : classify_w(complete_graph(4))) CHECK(c == WClass::W0);
    for (auto c : classify_w(cycle_graph(5))) CHECK(c == WClass::NotA3Vertex);

    CHECK(weak_neighbors(h, 0) == std::vector<Vertex>{2, 4, 6});
    CHECK(weak_neighbors(complete_graph(4), 1).empty());
    CHECK(weak_neighbors(path_graph(3), 0) == std::vector<Vertex>{2});

    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(9, 0.3, rng);
        oracle::Local L(g);
        auto cls = classify_w(g);
        for (int v = 0; v < g.order(); ++v) {
            int expect = L.w(v);
            REQUIRE(cls[v] == (expect < 0 ? WClass::NotA3Vertex : static_cast<WClass>(expect)));
        }
    }
}

TEST_CASE("induced subgraphs")
{
    auto k4 = induced_subgraph(complete_graph(4), std::vector<Vertex>{1, 3});
    CHECK(k4.graph.order() == 2);
    CHECK(k4.graph.size() == 1);
    CHECK(k4.to_parent == std::vector<Vertex>{1, 3});
    auto p = induced_subgraph(cycle_graph(5), std::vector<Vertex>{0, 1, 2});
    CHECK(p.graph.size() == 2);
    auto h = induced_subgraph(fig1_graph(), std::vector<Vertex>{0, 1, 2});
    CHECK(h.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    auto r = remove_vertices(fig1_graph(), std::vector<Vertex>{0});
    CHECK(r.graph.order() == 6);
    CHECK(r.graph.size() == 6);
    CHECK(r.to_parent == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("r-dynamic validity")
{
    CHECK(is_valid_r_dynamic(complete_graph(4), 3, Coloring{0, 1, 2, 3}).valid);
    auto bad = is_valid_r_dynamic(cycle_graph(5), 3, Coloring{1, 2, 1, 2, 3});
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.violation);
    CHECK(bad.violation->kind == ViolationKind::TooFewNeighborColors);
    CHECK(bad.violation->vertex == 1);
    CHECK(is_valid_r_dynamic(fig1_graph(), 3, Coloring{0, 1, 2, 3, 4, 5, 6}).valid);
    CHECK_THROWS_AS(is_valid_r_dynamic(path_graph(2), 1, Coloring{0, kUncolored}), UncoloredVertex);

    auto improper = is_valid_r_dynamic(path_graph(3), 1, Coloring{0, 0, 1});
    REQUIRE(improper.violation);
    CHECK(improper.violation->kind == ViolationKind::Improper);
    CHECK(improper.violation->vertex == 0);

    ListAssignment lists{{0}, {1}, {0, 2}};
    auto off = is_valid_r_dynamic(path_graph(3), 1, Coloring{0, 1, 3}, &lists);
    REQUIRE(off.violation);
    CHECK(off.violation->kind == ViolationKind::NotInList);
}

TEST_CASE("r = 1 validity is properness")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(7, 0.35, rng);
        Coloring phi(7);
        for (auto& c : phi) c = static_cast<Color>(rng() % 3);
        bool proper = true;
        for (auto [u, v] : g.edges()) proper &= phi[u] != phi[v];
        REQUIRE(is_valid_r_dynamic(g, 1, phi).valid == proper);
    }
}

TEST_CASE("subcubic: 3-dynamic iff proper on the square")
{
    for (const auto& g : oracle::atlas()) {
        if (g.max_degree() > 3 || g.order() > 6) continue;
        const Graph sq = square(g);
        oracle::for_each_partition(g.order(), [&](const std::vector<int>& phi, int) {
            bool proper = true;
            for (auto [u, v] : sq.edges()) proper &= phi[u] != phi[v];
            REQUIRE(is_valid_r_dynamic(g, 3, phi).valid == proper);
        });
    }
}

TEST_CASE("graph6 and edge lists")
{
    for (const auto& g : oracle::atlas()) REQUIRE(from_graph6(to_graph6(g)) == g);
    Graph big = double_petersen_path(50);
    CHECK(big.order() > 62);
    CHECK(from_graph6(to_graph6(big)) == big);
    CHECK(from_edge_list(to_edge_list(fig1_graph())) == fig1_graph());
    CHECK(from_graph6(">>graph6<<" + to_graph6(petersen()) + "\n") == petersen());
    CHECK(detect_format("F?B~w") == GraphFormat::Graph6);
    CHECK(detect_format("3\n0 1\n") == GraphFormat::EdgeList);
    CHECK(parse_graph("# comment\n0 1\n1 2\n").size() == 2);
    CHECK_THROWS_AS(from_edge_list("0 0\n"), InvalidGraph);
    CHECK_THROWS_AS(from_edge_list("0 x\n"), InputError);
    CHECK_THROWS_AS(from_graph6("A"), InputError);
}
