#include "dyncol/graph.hpp"

#include <algorithm>

#include "dyncol/errors.hpp"

namespace dyncol {

Graph::Graph(int n)
    : adj_(static_cast<std::size_t>(n))
{
    if (n < 0) throw InvalidGraph("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (!g.add_edge(u, v))
            throw InvalidGraph("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order()) throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidGraph("self-loop at " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) return false;
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edge_count_;
    return true;
}

Vertex Graph::add_vertex()
{
    adj_.emplace_back();
    if (!labels_.empty()) labels_.push_back(std::to_string(order() - 1));
    return order() - 1;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const char* to_string(WClass c)
{
    switch (c) {
    case WClass::W0: return "W0";
    case WClass::W1: return "W1";
    case WClass::W2: return "W2";
    case WClass::W3: return "W3";
    case WClass::NotA3Vertex: return "NotA3Vertex";
    }
    return "?";
}

Graph square(const Graph& g)
{
    Graph sq = g;
    for (Vertex w = 0; w < g.order(); ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) sq.add_edge(nb[i], nb[j]);
    }
    return sq;
}

std::vector<WClass> classify_w(const Graph& g)
{
    std::vector<WClass> out(static_cast<std::size_t>(g.order()), WClass::NotA3Vertex);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        int twos = 0;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 2) ++twos;
        out[v] = static_cast<WClass>(twos);
    }
    return out;
}

std::vector<Vertex> weak_neighbors(const Graph& g, Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) != 2) continue;
        for (Vertex u : g.neighbors(w))
            if (u != v) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order())
            throw InvalidGraph("vertex " + std::to_string(keep[i]) + " out of range");
        local[keep[i]] = static_cast<Vertex>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex u : g.neighbors(keep[i]))
            if (local[u] > static_cast<Vertex>(i)) h.add_edge(static_cast<Vertex>(i), local[u]);
    if (!g.labels().empty()) {
        for (Vertex v : keep) h.labels().push_back(g.labels()[v]);
    }
    return {std::move(h), std::move(keep)};
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed)
{
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

const char* to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::NotInList: return "not_in_list";
    case ViolationKind::Improper: return "improper";
    case ViolationKind::TooFewNeighborColors: return "too_few_neighbor_colors";
    }
    return "?";
}

int distinct_neighbor_colors(const Graph& g, std::span<const Color> phi, Vertex v)
{
    std::vector<Color> seen;
    for (Vertex u : g.neighbors(v))
        if (phi[u] != kUncolored) seen.push_back(phi[u]);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

ValidityReport is_valid_r_dynamic(const Graph& g, int r, std::span<const Color> phi, const ListAssignment* lists)
{
    if (static_cast<int>(phi.size()) != g.order())
        throw UncoloredVertex("coloring covers " + std::to_string(phi.size()) + " of " +
                              std::to_string(g.order()) + " vertices");
    for (Vertex v = 0; v < g.order(); ++v)
        if (phi[v] == kUncolored) throw UncoloredVertex("vertex " + std::to_string(v) + " is uncolored");

    for (Vertex v = 0; v < g.order(); ++v) {
        if (lists) {
            const auto& l = (*lists)[v];
            if (!std::binary_search(l.begin(), l.end(), phi[v]))
                return {false, Violation{v, ViolationKind::NotInList, phi[v]}};
        }
        for (Vertex u : g.neighbors(v))
            if (phi[u] == phi[v]) return {false, Violation{v, ViolationKind::Improper, u}};
        int seen = distinct_neighbor_colors(g, phi, v);
        if (seen < std::min(r, g.degree(v))) return {false, Violation{v, ViolationKind::TooFewNeighborColors, seen}};
    }
    return {};
}

} // namespace dyncol
