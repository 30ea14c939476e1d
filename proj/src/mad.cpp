#include "dyncol/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "dyncol/errors.hpp"

namespace dyncol {

namespace {

// Dinic on an explicit residual graph. Small and allocation-local: one
// instance per closure query.
class MaxFlow {
public:
    explicit MaxFlow(int nodes)
        : head_(static_cast<std::size_t>(nodes), -1), level_(static_cast<std::size_t>(nodes)),
          iter_(static_cast<std::size_t>(nodes))
    {}

    void add_arc(int from, int to, std::int64_t cap)
    {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t run(int s, int t)
    {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
        }
        return total;
    }

    // After run(): nodes reachable from s in the residual graph.
    std::vector<char> source_side(int s) const
    {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t limit)
    {
        if (u == t) return limit;
        for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
            if (std::int64_t f = dfs(arc.to, t, std::min(limit, arc.cap))) {
                arc.cap -= f;
                arcs_[a ^ 1].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

struct Closure {
    std::int64_t value = 0; // max over A of edge_weight*|E(A)| - vertex_weight*|A|
    std::vector<Vertex> set; // the minimal maximizing set (possibly empty)
};

// Maximum-weight closure of the edge/vertex incidence network: every edge
// node is worth edge_weight and requires both endpoints, each costing
// vertex_weight.
Closure max_closure(const Graph& g, std::int64_t edge_weight, std::int64_t vertex_weight)
{
    const int n = g.order();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int s = n + m;
    const int t = s + 1;
    const std::int64_t inf = edge_weight * (m + 1) + 1;
    MaxFlow flow(n + m + 2);
    for (int e = 0; e < m; ++e) {
        flow.add_arc(s, n + e, edge_weight);
        flow.add_arc(n + e, edges[e].first, inf);
        flow.add_arc(n + e, edges[e].second, inf);
    }
    for (Vertex v = 0; v < n; ++v) flow.add_arc(v, t, vertex_weight);
    std::int64_t cut = flow.run(s, t);
    Closure out;
    out.value = edge_weight * m - cut;
    auto side = flow.source_side(s);
    for (Vertex v = 0; v < n; ++v)
        if (side[v]) out.set.push_back(v);
    return out;
}

} // namespace

int induced_edge_count(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : vertices) in.at(static_cast<std::size_t>(v)) = 1;
    int count = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in[v]) continue;
        for (Vertex u : g.neighbors(v))
            if (u > v && in[u]) ++count;
    }
    return count;
}

MadResult mad_exact(const Graph& g)
{
    if (g.order() == 0) throw EmptyGraph("mad of the empty graph is undefined");
    if (g.size() == 0) return {Rational(0), {0}};

    std::vector<Vertex> best(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) best[v] = v;
    std::int64_t edges = g.size();
    std::int64_t verts = g.order();
    // Dinkelbach: each improving closure strictly raises the density, and
    // densities take finitely many values.
    for (;;) {
        Closure c = max_closure(g, verts, edges);
        if (c.value <= 0) break;
        best = std::move(c.set);
        edges = induced_edge_count(g, best);
        verts = static_cast<std::int64_t>(best.size());
    }
    return {Rational(2 * edges, verts), std::move(best)};
}

MadBound mad_at_most(const Graph& g, const Rational& bound)
{
    if (bound <= Rational(0)) throw std::invalid_argument("mad_at_most: bound must be positive");
    if (g.size() == 0) return {};
    // 2|E(A)|/|A| > p/q  <=>  2q|E(A)| - p|A| > 0
    Closure c = max_closure(g, 2 * bound.den(), bound.num());
    if (c.value <= 0) return {};
    return {false, std::move(c.set)};
}

long rho(const Graph& g, std::span<const Vertex> a_set, PotentialParams params)
{
    return static_cast<long>(params.a) * static_cast<long>(a_set.size()) -
           static_cast<long>(params.b) * induced_edge_count(g, a_set);
}

Graph add_path(const Graph& f, Vertex x, Vertex y, int ell)
{
    if (ell < 1) throw PathTooShort("path length must be at least 1");
    Graph out = f;
    Vertex prev = x;
    for (int i = 1; i < ell; ++i) {
        Vertex v = out.add_vertex();
        out.add_edge(prev, v);
        prev = v;
    }
    if (!out.add_edge(prev, y)) throw InvalidSpec("path of length 1 duplicates an existing edge");
    return out;
}

PathAugmentation check_path_augmentation(const Graph& f, Vertex x, Vertex y, int ell, const Rational& bound,
                                         int min_length)
{
    if (ell < min_length)
        throw PathTooShort("path length " + std::to_string(ell) + " below the minimum " + std::to_string(min_length));
    if (x == y) throw InvalidSpec("path endpoints must be distinct");
    if (x < 0 || y < 0 || x >= f.order() || y >= f.order()) throw InvalidSpec("path endpoint out of range");
    if (!mad_at_most(f, bound).holds) throw PreconditionMad("mad(F) exceeds " + bound.str());
    PathAugmentation out;
    out.augmented = add_path(f, x, y, ell);
    out.mad_within_bound = mad_exact(out.augmented).mad <= bound;
    return out;
}

} // namespace dyncol
