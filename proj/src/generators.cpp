#include "dyncol/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "dyncol/errors.hpp"
#include "dyncol/mad.hpp"
#include "dyncol/random.hpp"

namespace dyncol {

namespace {

bool mad_below(const Graph& g, const Rational& bound)
{
    return mad_exact(g).mad < bound;
}

// Relabel so the result does not reveal construction order.
Graph shuffled(const Graph& g, Rng& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

Graph fig1_graph()
{
    const std::array<Edge, 9> e{{{0, 1}, {0, 3}, {0, 5}, {1, 2}, {2, 4}, {2, 6}, {3, 4}, {4, 6}, {5, 6}}};
    return Graph::from_edges(7, e);
}

Graph petersen()
{
    std::vector<std::pair<int, int>> sets;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) sets.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = sets[i];
            auto [c, d] = sets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

Graph petersen_minus_edge()
{
    Graph g = petersen();
    g.remove_edge(0, 7);
    return g;
}

Graph double_petersen_path(int ell)
{
    if (ell < 3) throw PathTooShort("the joining path must have length at least 3");
    JoinSpec spec{JoinFamily::Bound3, {{0, 0, ell}}};
    return join_with_paths(petersen(), petersen(), spec);
}

Graph cycle_graph(int n)
{
    if (n < 3) throw InvalidSpec("a cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    if (n < 1) throw InvalidSpec("a path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n)
{
    if (n < 1) throw InvalidSpec("a complete graph needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves)
{
    if (leaves < 0) throw InvalidSpec("negative leaf count");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

int join_min_length(JoinFamily f)
{
    switch (f) {
    case JoinFamily::None: return 1;
    case JoinFamily::Bound18_7: return 5;
    case JoinFamily::Bound14_5: return 4;
    case JoinFamily::Bound3: return 3;
    }
    return 1;
}

Graph join_with_paths(const Graph& h, const Graph& h2, const JoinSpec& spec)
{
    const int n1 = h.order();
    const int min_len = join_min_length(spec.family);
    if (spec.family == JoinFamily::Bound3 && spec.paths.size() != 1)
        throw InvalidSpec("this construction joins by exactly one path");
    std::vector<int> extra(static_cast<std::size_t>(n1), 0);
    for (auto [a, b, len] : spec.paths) {
        if (a < 0 || a >= n1 || b < 0 || b >= h2.order()) throw InvalidSpec("path endpoint out of range");
        if (len < min_len)
            throw InvalidSpec("path length " + std::to_string(len) + " below the minimum " + std::to_string(min_len));
        ++extra[a];
    }
    for (Vertex v = 0; v < n1; ++v) {
        if (extra[v] == 0) continue;
        if (spec.family == JoinFamily::Bound18_7 && (h.degree(v) != 2 || extra[v] > 1))
            throw InvalidSpec("paths must start at distinct 2-vertices of the first graph");
        if (spec.family == JoinFamily::Bound14_5 && h.degree(v) + extra[v] > 3)
            throw InvalidSpec("a vertex of the first graph would exceed degree 3");
    }

    Graph g(n1 + h2.order());
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    for (auto [u, v] : h2.edges()) g.add_edge(n1 + u, n1 + v);
    for (auto [a, b, len] : spec.paths) {
        Vertex prev = a;
        for (int i = 1; i < len; ++i) {
            Vertex nv = g.add_vertex();
            g.add_edge(prev, nv);
            prev = nv;
        }
        if (!g.add_edge(prev, n1 + b)) throw InvalidSpec("a path of length 1 repeats an edge");
    }
    return g;
}

Graph random_graph_mad_below(int n, const Rational& bound, std::uint64_t seed)
{
    if (n < 1) throw InvalidSpec("n must be positive");
    Rng rng(seed);
    Graph g(1);
    for (int i = 1; i < n; ++i) {
        Vertex parent = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.order())));
        Vertex v = g.add_vertex();
        g.add_edge(parent, v);
        if (!mad_below(g, bound)) {
            g = remove_vertices(g, std::vector<Vertex>{v}).graph;
            break;
        }
    }
    const int tries = 3 * g.order();
    for (int t = 0; t < tries && g.order() >= 3; ++t) {
        Vertex u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.order())));
        Vertex v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.order())));
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        if (!mad_below(g, bound)) g.remove_edge(u, v);
    }
    return shuffled(g, rng);
}

Graph random_subdivided_graph_mad_below(int n, const Rational& bound, std::uint64_t seed)
{
    Rng rng(seed);
    if (n < 3) return path_graph(std::max(n, 1));
    for (int attempt = 0; attempt < 50; ++attempt) {
        // Core of 3- and 4-vertices by random pairing of half-edges.
        int core = std::max(2, uniform_int(rng, 2, std::max(2, 2 * n / 5)));
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < core; ++v) {
            int d = uniform_below(rng, 4) == 0 ? 4 : 3;
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        }
        if (stubs.size() % 2) stubs.push_back(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(core))));
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        // Loops are dropped; a repeated pair is subdivided once.
        Graph g(core);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            Vertex a = stubs[i], b = stubs[i + 1];
            if (a == b) continue;
            if (!g.has_edge(a, b)) {
                g.add_edge(a, b);
            } else {
                Vertex m = g.add_vertex();
                g.add_edge(a, m);
                g.add_edge(m, b);
            }
        }
        while (g.order() <= n && !mad_below(g, bound)) {
            // Subdivide a random edge between two 3+-vertices when possible.
            auto edges = g.edges();
            std::vector<Edge> heavy;
            for (auto e : edges)
                if (g.degree(e.first) >= 3 && g.degree(e.second) >= 3) heavy.push_back(e);
            const auto& pool = heavy.empty() ? edges : heavy;
            auto [a, b] = pool[uniform_below(rng, pool.size())];
            g.remove_edge(a, b);
            Vertex m = g.add_vertex();
            g.add_edge(a, m);
            g.add_edge(m, b);
        }
        if (g.order() <= n && mad_below(g, bound)) return shuffled(g, rng);
    }
    return cycle_graph(std::max(3, std::min(n, 5)));
}

Graph random_core_graph(int core, int min_degree, int max_degree, int max_subdivisions, std::uint64_t seed)
{
    if (core < 1 || min_degree < 0 || max_degree < min_degree || max_subdivisions < 0)
        throw InvalidSpec("bad core parameters");
    Rng rng(seed);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < core; ++v) {
        int d = uniform_int(rng, min_degree, max_degree);
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    }
    if (stubs.size() % 2) stubs.pop_back();
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
    Graph g(core);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex a = stubs[i], b = stubs[i + 1];
        if (a == b) continue;
        int sub = uniform_int(rng, 0, max_subdivisions);
        if (sub == 0 && g.has_edge(a, b)) sub = 1;
        Vertex prev = a;
        for (int k = 0; k < sub; ++k) {
            Vertex m = g.add_vertex();
            g.add_edge(prev, m);
            prev = m;
        }
        g.add_edge(prev, b);
    }
    return g;
}

ListAssignment random_lists(int n, int size, int universe, std::uint64_t seed)
{
    if (size > universe) throw InvalidSpec("list size exceeds the color universe");
    Rng rng(seed);
    ListAssignment out(static_cast<std::size_t>(n));
    std::vector<Color> pool(static_cast<std::size_t>(universe));
    for (auto& list : out) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < size; ++i)
            std::swap(pool[static_cast<std::size_t>(i)],
                      pool[static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(universe - i))]);
        list.assign(pool.begin(), pool.begin() + size);
        std::sort(list.begin(), list.end());
    }
    return out;
}

Graph h1_graph()
{
    Graph g = complete_graph(4);
    g.remove_edge(0, 3);
    return g;
}

Graph h2_graph()
{
    // v1 v2 v3 v4 x1 x2 x w
    enum { v1, v2, v3, v4, x1, x2, x, w };
    const std::array<Edge, 16> e{{{x, v1}, {x, v2}, {x, v3}, {x, v4}, {x, x1}, {x, x2}, {x, w}, {x1, v1},
                                  {x1, v2}, {x1, w}, {x2, v3}, {x2, v4}, {x2, w}, {v1, v2}, {v3, v4}, {x1, x2}}};
    return Graph::from_edges(8, e);
}

Graph h3_graph()
{
    Graph g = h2_graph();
    g.add_edge(0, 2);
    return g;
}

DemandFunction h1_demand()
{
    return {2, 3, 2, 2};
}

DemandFunction h2_demand()
{
    return {3, 3, 3, 2, 4, 4, 5, 3};
}

DemandFunction h3_demand()
{
    return {4, 3, 3, 2, 4, 4, 5, 3};
}

GreedyCertificate h2_certificate()
{
    enum { v1, v2, v3, v4, x1, x2, x, w };
    return {{x, v4, v3, x2, w, x1, v2, v1}, {{x, v1}}};
}

} // namespace dyncol
