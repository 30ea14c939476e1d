#pragma once

// Brute-force references. Nothing here calls into the library's algorithms:
// graphs are read through Graph's accessors only.

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyncol/configurations.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/graph_io.hpp"
#include "dyncol/rational.hpp"

#ifndef DYNCOL_TEST_DATA
#define DYNCOL_TEST_DATA "tests/data"
#endif

namespace oracle {

using dyncol::Graph;
using dyncol::Rational;
using dyncol::Vertex;
using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const Graph& g)
{
    Matrix a(g.order(), std::vector<char>(g.order(), 0));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) a[u][v] = 1;
    return a;
}

inline std::vector<int> degrees(const Matrix& a)
{
    std::vector<int> d(a.size(), 0);
    for (std::size_t u = 0; u < a.size(); ++u)
        for (char x : a[u]) d[u] += x;
    return d;
}

// Every graph on 1..7 vertices up to isomorphism.
inline const std::vector<Graph>& atlas()
{
    static const std::vector<Graph> graphs = [] {
        std::ifstream in(std::string(DYNCOL_TEST_DATA) + "/atlas7.g6");
        if (!in) throw std::runtime_error("missing atlas7.g6");
        std::vector<Graph> out;
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) out.push_back(dyncol::from_graph6(line));
        return out;
    }();
    return graphs;
}

inline std::vector<Graph> atlas_up_to(int n)
{
    std::vector<Graph> out;
    for (const auto& g : atlas())
        if (g.order() <= n) out.push_back(g);
    return out;
}

// Each 7-vertex graph plus a new vertex joined to every subset: covers all
// 8-vertex graphs up to isomorphism, with repeats.
inline void for_each_eight_vertex_graph(const std::function<void(const Graph&)>& f, int stride = 1)
{
    int counter = 0;
    for (const auto& base : atlas()) {
        if (base.order() != 7) continue;
        for (int mask = 0; mask < 128; ++mask) {
            if (counter++ % stride) continue;
            Graph g = base;
            Vertex x = g.add_vertex();
            for (int i = 0; i < 7; ++i)
                if (mask >> i & 1) g.add_edge(i, x);
            f(g);
        }
    }
}

// Largest 2|E(A)|/|A| over nonempty subsets A.
inline Rational mad(const Graph& g)
{
    const int n = g.order();
    const Matrix a = adjacency(g);
    Rational best(0);
    for (unsigned s = 1; s < (1u << n); ++s) {
        int verts = 0, edges = 0;
        for (int u = 0; u < n; ++u) {
            if (!(s >> u & 1)) continue;
            ++verts;
            for (int v = u + 1; v < n; ++v)
                if ((s >> v & 1) && a[u][v]) ++edges;
        }
        Rational d(2 * edges, verts);
        if (d > best) best = d;
    }
    return best;
}

// Minimum of 9|A| - 7|E(A)| over all subsets A.
inline long min_rho(const Graph& g)
{
    const int n = g.order();
    const Matrix a = adjacency(g);
    long best = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        long verts = 0, edges = 0;
        for (int u = 0; u < n; ++u) {
            if (!(s >> u & 1)) continue;
            ++verts;
            for (int v = u + 1; v < n; ++v)
                if ((s >> v & 1) && a[u][v]) ++edges;
        }
        best = std::min(best, 9 * verts - 7 * edges);
    }
    return best;
}

inline std::vector<std::vector<int>> distances(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        d[s][s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u))
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

inline bool r_dynamic_ok(const Matrix& a, int r, const std::vector<int>& phi)
{
    const int n = static_cast<int>(a.size());
    for (int v = 0; v < n; ++v) {
        std::vector<int> seen;
        int deg = 0;
        for (int u = 0; u < n; ++u) {
            if (!a[v][u]) continue;
            ++deg;
            if (phi[u] == phi[v]) return false;
            if (std::find(seen.begin(), seen.end(), phi[u]) == seen.end()) seen.push_back(phi[u]);
        }
        if (static_cast<int>(seen.size()) < std::min(r, deg)) return false;
    }
    return true;
}

// Visits every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& f)
{
    std::vector<int> phi(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            f(phi, blocks);
            return;
        }
        for (int c = 0; c <= blocks && c < n; ++c) {
            phi[i] = c;
            rec(i + 1, std::max(blocks, c + 1));
        }
    };
    if (n == 0) f(phi, 0);
    else rec(0, 0);
}

// Least number of colors of an r-dynamic coloring, over all set partitions.
inline int chi_r_dynamic(const Graph& g, int r)
{
    const Matrix a = adjacency(g);
    int best = g.order();
    for_each_partition(g.order(), [&](const std::vector<int>& phi, int blocks) {
        if (blocks < best && r_dynamic_ok(a, r, phi)) best = blocks;
    });
    return best;
}

// Chromatic number of the distance-<=2 graph, via breadth-first distances.
inline int chi_square(const Graph& g)
{
    const auto d = distances(g);
    const int n = g.order();
    int best = n;
    for_each_partition(n, [&](const std::vector<int>& phi, int blocks) {
        if (blocks >= best) return;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (phi[u] == phi[v] && d[u][v] >= 1 && d[u][v] <= 2) return;
        best = blocks;
    });
    return best;
}

// Proper L-colorability by full enumeration.
inline bool list_colorable(const Matrix& a, const std::vector<std::vector<int>>& lists)
{
    const int n = static_cast<int>(a.size());
    std::vector<int> phi(n, -1);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) return true;
        for (int c : lists[i]) {
            bool ok = true;
            for (int u = 0; u < i; ++u)
                if (a[i][u] && phi[u] == c) ok = false;
            if (!ok) continue;
            phi[i] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// f-choosability by trying every assignment of f(v)-subsets of
// {0..sum f - 1}. Only for tiny instances.
inline bool f_choosable(const Graph& g, const std::vector<int>& f)
{
    const int n = g.order();
    const int universe = std::accumulate(f.begin(), f.end(), 0);
    const Matrix a = adjacency(g);
    std::vector<std::vector<std::vector<int>>> subsets(n);
    for (int v = 0; v < n; ++v)
        for (unsigned s = 0; s < (1u << universe); ++s)
            if (std::popcount(s) == f[v]) {
                std::vector<int> l;
                for (int c = 0; c < universe; ++c)
                    if (s >> c & 1) l.push_back(c);
                subsets[v].push_back(l);
            }
    std::vector<std::vector<int>> lists(n);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) return list_colorable(a, lists);
        for (const auto& l : subsets[i]) {
            lists[i] = l;
            if (!rec(i + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

// ---- Configuration predicates, by nested loops over the adjacency matrix.

struct Local {
    Matrix a;
    std::vector<int> d;
    int n;
    explicit Local(const Graph& g) : a(adjacency(g)), d(degrees(a)), n(g.order()) {}

    std::vector<int> nbrs(int v) const
    {
        std::vector<int> out;
        for (int u = 0; u < n; ++u)
            if (a[v][u]) out.push_back(u);
        return out;
    }
    int twos(int v) const
    {
        int c = 0;
        for (int u : nbrs(v)) c += d[u] == 2;
        return c;
    }
    // -1 unless v is a 3-vertex; else its number of 2-neighbors.
    int w(int v) const { return d[v] == 3 ? twos(v) : -1; }
    int other(int two, int from) const
    {
        for (int u : nbrs(two))
            if (u != from) return u;
        return -1;
    }
};

inline bool has_c1(const Local& L)
{
    for (int v = 0; v < L.n; ++v)
        if (L.d[v] <= 1) return true;
    return false;
}

inline bool has_c2(const Local& L)
{
    for (int u = 0; u < L.n; ++u)
        for (int v = 0; v < L.n; ++v)
            if (L.a[u][v] && L.d[u] == 2 && L.d[v] == 2) return true;
    return false;
}

inline bool has_l1_3(const Local& L)
{
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            for (int w = 0; w < L.n; ++w)
                if (L.a[x][y] && L.a[x][w] && L.a[y][w] && L.d[w] == 2) return true;
    return false;
}

inline bool has_l1_4(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.w(x) < 2) continue;
        for (int w1 = 0; w1 < L.n; ++w1)
            for (int w2 = 0; w2 < L.n; ++w2)
                for (int y = 0; y < L.n; ++y)
                    if (w1 != w2 && y != x && L.a[x][w1] && L.a[x][w2] && L.d[w1] == 2 && L.d[w2] == 2 &&
                        L.a[w1][y] && L.a[w2][y])
                        return true;
    }
    return false;
}

// Exhaustive injective embedding of a labeled pattern: exact degree for
// solid labels, degree >= 3 for hollow ones, pattern edges present, and no
// further edges among labeled vertices except hollow-hollow.
inline bool embeds(const Local& L, int k, const std::vector<std::pair<int, int>>& edges,
                   const std::vector<int>& solid_degree)
{
    std::vector<std::vector<char>> pat(k, std::vector<char>(k, 0));
    for (auto [i, j] : edges) pat[i][j] = pat[j][i] = 1;
    std::vector<int> map(k, -1);
    std::vector<char> used(L.n, 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == k) return true;
        for (int v = 0; v < L.n; ++v) {
            if (used[v]) continue;
            if (solid_degree[i] > 0 ? L.d[v] != solid_degree[i] : L.d[v] < 3) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                bool e = L.a[v][map[j]];
                if (pat[i][j] && !e) ok = false;
                if (!pat[i][j] && e && !(solid_degree[i] == 0 && solid_degree[j] == 0)) ok = false;
            }
            if (!ok) continue;
            map[i] = v;
            used[v] = 1;
            if (rec(i + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return rec(0);
}

inline bool has_fig4a(const Local& L)
{
    // v1 v2 v3 v4 v5 w u
    return embeds(L, 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}}, {3, 3, 2, 0, 2, 2, 0});
}

inline bool has_fig4b(const Local& L)
{
    if (L.n < 12) return false;
    return embeds(L, 12,
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {1, 7}, {2, 8}, {6, 9}, {7, 10}, {8, 11}},
                  {3, 3, 3, 2, 0, 2, 2, 2, 2, 0, 0, 0});
}

inline bool has_c3(const Local& L)
{
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            if (L.a[x][y] && L.w(x) == 2 && L.w(y) == 2) return true;
    return false;
}

// Weak neighbors of x through its 2-neighbors, as (2-neighbor, far end).
inline std::vector<std::pair<int, int>> weak(const Local& L, int x)
{
    std::vector<std::pair<int, int>> out;
    for (int t : L.nbrs(x))
        if (L.d[t] == 2) out.emplace_back(t, L.other(t, x));
    return out;
}

inline bool has_c4i(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.w(x) != 3) continue;
        for (auto [t, u] : weak(L, x))
            if (L.d[u] >= 4) return true;
    }
    return false;
}

inline bool has_c4ii(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.w(x) != 3) continue;
        for (auto [t, u] : weak(L, x))
            if (L.d[u] == 3 && L.twos(u) >= 2) return true;
    }
    return false;
}

inline bool has_c5(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.w(x) != 1) continue;
        int w2 = 0;
        for (int y : L.nbrs(x)) w2 += L.w(y) == 2;
        if (w2 >= 2) return true;
    }
    return false;
}

inline bool has_c6(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.d[x] != 3) continue;
        bool w1 = false, w2 = false, w3 = false;
        for (int y : L.nbrs(x)) {
            w1 |= L.w(y) == 1;
            w2 |= L.w(y) == 2;
        }
        for (auto [t, u] : weak(L, x)) w3 |= L.w(u) == 3;
        if (w1 && w2 && w3) return true;
    }
    return false;
}

inline bool has_kvertex(const Local& L, int kmin, int kmax)
{
    for (int v = 0; v < L.n; ++v)
        if (L.d[v] >= kmin && L.d[v] <= kmax && L.twos(v) >= L.d[v] - 1) return true;
    return false;
}

inline bool has_adjacent_w1(const Local& L)
{
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            if (L.a[x][y] && L.w(x) == 1 && L.w(y) == 1) return true;
    return false;
}

inline bool has_three_w1(const Local& L)
{
    for (int x = 0; x < L.n; ++x) {
        if (L.d[x] != 3) continue;
        int c = 0;
        for (int y : L.nbrs(x)) c += L.w(y) == 1;
        if (c == 3) return true;
    }
    return false;
}

inline bool has_low_vertex(const Local& L)
{
    for (int x = 0; x < L.n; ++x)
        if (L.d[x] <= 3 && L.twos(x) > 0) return true;
    return false;
}

inline bool has(const Graph& g, dyncol::ConfigKind k)
{
    using K = dyncol::ConfigKind;
    const Local L(g);
    switch (k) {
    case K::C1: return has_c1(L);
    case K::C2: return has_c2(L);
    case K::L1_3: return has_l1_3(L);
    case K::L1_4: return has_l1_4(L);
    case K::Fig4a: return has_fig4a(L);
    case K::Fig4b: return has_fig4b(L);
    case K::C3: return has_c3(L);
    case K::C4i: return has_c4i(L);
    case K::C4ii: return has_c4ii(L);
    case K::C5: return has_c5(L);
    case K::C6: return has_c6(L);
    case K::KVertex7: return has_kvertex(L, 3, 4);
    case K::AdjacentW1: return has_adjacent_w1(L);
    case K::ThreeW1: return has_three_w1(L);
    case K::LowVertex8: return has_low_vertex(L);
    case K::KVertex8: return has_kvertex(L, 4, 5);
    }
    return false;
}

inline const std::vector<dyncol::ConfigKind>& priority(dyncol::Theorem t)
{
    using K = dyncol::ConfigKind;
    static const std::vector<K> t3{K::C1, K::C2, K::L1_3, K::L1_4, K::Fig4a, K::Fig4b,
                                   K::C3, K::C4i, K::C4ii, K::C5, K::C6};
    static const std::vector<K> t4{K::C1, K::C2, K::L1_3, K::L1_4, K::KVertex7, K::AdjacentW1, K::ThreeW1};
    static const std::vector<K> t5{K::C1, K::C2, K::L1_3, K::L1_4, K::LowVertex8, K::KVertex8};
    return t == dyncol::Theorem::Thm3 ? t3 : t == dyncol::Theorem::Thm4 ? t4 : t5;
}

// First kind present in the theorem's order, or nothing.
inline std::optional<dyncol::ConfigKind> first_kind(const Graph& g, dyncol::Theorem t)
{
    for (auto k : priority(t))
        if (has(g, k)) return k;
    return std::nullopt;
}

} // namespace oracle
