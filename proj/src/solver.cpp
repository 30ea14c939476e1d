#include "dyncol/solver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "dyncol/errors.hpp"
#include "dyncol/random.hpp"
#include "dyncol/search.hpp"

namespace dyncol {

namespace {

std::vector<std::vector<char>> forced_pairs(const Graph& g, int r)
{
    const int n = g.order();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) > r) continue;
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
    }
    return adj;
}

// Bron-Kerbosch with pivoting; returns the clique number.
int clique_number(const std::vector<std::vector<char>>& adj)
{
    const int n = static_cast<int>(adj.size());
    int best = 0;
    std::function<void(int, std::vector<int>&, std::vector<int>&)> expand = [&](int size, std::vector<int>& p,
                                                                                 std::vector<int>& x) {
        if (p.empty()) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<int>(p.size()) <= best) return;
        int pivot = p.front();
        std::size_t pivot_deg = 0;
        for (int u : p) {
            std::size_t d = 0;
            for (int v : p) d += adj[u][v];
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        }
        std::vector<int> branch;
        for (int v : p)
            if (!adj[pivot][v]) branch.push_back(v);
        for (int v : branch) {
            std::vector<int> p2, x2;
            for (int u : p)
                if (adj[v][u]) p2.push_back(u);
            for (int u : x)
                if (adj[v][u]) x2.push_back(u);
            expand(size + 1, p2, x2);
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> x;
    expand(0, p, x);
    return best;
}

search::Problem make_problem(const Graph& g, int r, ListAssignment domains, SearchBudget budget)
{
    search::Problem p;
    p.graph = &g;
    p.r = r;
    p.domains = std::move(domains);
    p.node_limit = budget.node_limit;
    p.threads = budget.threads;
    return p;
}

void check_demand(const Graph& g, const DemandFunction& f)
{
    if (static_cast<int>(f.size()) != g.order()) throw InputError("demand function size does not match the graph");
    for (int d : f)
        if (d < 1) throw InputError("demand values must be at least 1");
}

} // namespace

int forced_clique_bound(const Graph& g, int r)
{
    return clique_number(forced_pairs(g, r));
}

Coloring greedy_square_coloring(const Graph& g)
{
    Graph sq = square(g);
    Coloring out(static_cast<std::size_t>(g.order()), kUncolored);
    std::vector<char> used;
    for (Vertex v = 0; v < g.order(); ++v) {
        used.assign(static_cast<std::size_t>(sq.degree(v)) + 1, 0);
        for (Vertex u : sq.neighbors(v))
            if (out[u] != kUncolored && out[u] < static_cast<int>(used.size())) used[out[u]] = 1;
        out[v] = static_cast<Color>(std::find(used.begin(), used.end(), 0) - used.begin());
    }
    return out;
}

ChiResult chi_r_dynamic(const Graph& g, int r, SearchBudget budget)
{
    if (g.order() == 0) throw EmptyGraph("chromatic number of the empty graph is undefined");
    if (r < 1) throw std::invalid_argument("r must be positive");

    ChiResult out;
    out.witness = greedy_square_coloring(g);
    out.upper = *std::max_element(out.witness.begin(), out.witness.end()) + 1;
    int lower = std::max(1, forced_clique_bound(g, r));
    if (g.max_degree() > 0) lower = std::max(lower, std::min(r, g.max_degree()) + 1);
    out.lower = std::min(lower, out.upper);

    for (int k = out.lower; k < out.upper; ++k) {
        std::vector<Color> all(static_cast<std::size_t>(k));
        std::iota(all.begin(), all.end(), 0);
        auto p = make_problem(g, r, ListAssignment(static_cast<std::size_t>(g.order()), all), budget);
        p.interchangeable_colors = true;
        auto res = search::solve(p);
        out.nodes += res.nodes;
        if (res.status == search::Status::Sat) {
            out.lower = out.upper = k;
            out.witness = std::move(res.coloring);
            return out;
        }
        if (res.status == search::Status::BudgetExceeded) {
            out.status = ChiStatus::BudgetExceeded;
            out.lower = k;
            return out;
        }
        out.lower = k + 1;
    }
    out.lower = out.upper;
    return out;
}

ListColoringResult color_with_lists(const Graph& g, int r, const ListAssignment& lists, SearchBudget budget)
{
    if (static_cast<int>(lists.size()) != g.order()) throw InputError("list assignment does not cover the graph");
    auto res = search::solve(make_problem(g, r, lists, budget));
    ListColoringResult out;
    switch (res.status) {
    case search::Status::Sat:
        out.status = ListStatus::Sat;
        out.coloring = std::move(res.coloring);
        break;
    case search::Status::Unsat:
        out.status = ListStatus::Unsat;
        break;
    case search::Status::BudgetExceeded:
        out.status = ListStatus::BudgetExceeded;
        break;
    }
    return out;
}

ChoosabilityResult is_f_choosable_exact(const Graph& g, const DemandFunction& f, int threshold)
{
    check_demand(g, f);
    const int total = std::accumulate(f.begin(), f.end(), 0);
    if (total > threshold)
        throw ThresholdExceeded("sum of demands " + std::to_string(total) + " exceeds threshold " +
                                std::to_string(threshold));

    const int n = g.order();
    ChoosabilityResult out;
    ListAssignment lists(static_cast<std::size_t>(n));

    // Lists are generated so that colors first appear in increasing order;
    // every assignment is equivalent to one of these under renaming.
    std::function<bool(int, int)> rec = [&](int v, int introduced) -> bool {
        if (v == n) {
            ++out.assignments;
            if (color_with_lists(g, 1, lists)) return true;
            out.choosable = false;
            out.counterexample = lists;
            return false;
        }
        const int d = f[v];
        for (int old = std::min(d, introduced); old >= 0; --old) {
            const int fresh = d - old;
            std::vector<int> pick(static_cast<std::size_t>(old));
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                auto& list = lists[v];
                list.assign(pick.begin(), pick.end());
                for (int i = 0; i < fresh; ++i) list.push_back(introduced + i);
                if (!rec(v + 1, introduced + fresh)) return false;
                // next combination of `old` elements from [0, introduced)
                int i = old - 1;
                while (i >= 0 && pick[i] == introduced - old + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    };
    rec(0, 0);
    return out;
}

SampleResult choosability_sample(const Graph& g, const DemandFunction& f, int trials, std::uint64_t seed)
{
    check_demand(g, f);
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    const int universe = std::accumulate(f.begin(), f.end(), 0);
    Rng rng(seed);
    std::vector<Color> pool(static_cast<std::size_t>(universe));
    SampleResult out;
    ListAssignment lists(static_cast<std::size_t>(g.order()));
    for (int t = 0; t < trials; ++t) {
        for (Vertex v = 0; v < g.order(); ++v) {
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 0; i < f[v]; ++i) {
                auto j = static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(universe - i));
                std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            }
            lists[v].assign(pool.begin(), pool.begin() + f[v]);
            std::sort(lists[v].begin(), lists[v].end());
        }
        out.trials_run = t + 1;
        if (!color_with_lists(g, 1, lists)) {
            out.counterexample_found = true;
            out.counterexample = lists;
            return out;
        }
    }
    return out;
}

CertificateCheck verify_greedy_certificate(const Graph& g, const DemandFunction& f, const GreedyCertificate& cert)
{
    check_demand(g, f);
    const int n = g.order();
    if (static_cast<int>(cert.ordering.size()) != n) throw MalformedCertificate("ordering is not a permutation");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = cert.ordering[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw MalformedCertificate("ordering is not a permutation");
        pos[v] = i;
    }
    std::vector<std::vector<Vertex>> avoids(static_cast<std::size_t>(n)); // early -> lates
    std::vector<std::vector<Vertex>> credited_by(static_cast<std::size_t>(n)); // late -> earlies
    for (auto [e, u] : cert.avoidance_moves) {
        if (e < 0 || u < 0 || e >= n || u >= n || e == u)
            throw MalformedCertificate("avoidance move names an invalid vertex");
        if (pos[e] >= pos[u]) throw MalformedCertificate("avoidance move: early vertex does not precede late vertex");
        avoids[e].push_back(u);
        if (g.has_edge(e, u) && std::find(credited_by[u].begin(), credited_by[u].end(), e) == credited_by[u].end())
            credited_by[u].push_back(e);
    }
    for (Vertex u : cert.ordering) {
        int earlier = 0;
        for (Vertex w : g.neighbors(u))
            if (pos[w] < pos[u]) ++earlier;
        long room = static_cast<long>(f[u]) - earlier + static_cast<long>(credited_by[u].size());
        for (Vertex late : avoids[u]) room -= f[late];
        if (room < 1) return {false, u};
    }
    return {};
}

} // namespace dyncol
