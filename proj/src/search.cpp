#include "dyncol/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "dyncol/errors.hpp"

namespace dyncol::search {

namespace {

using Path = std::vector<std::pair<Vertex, int>>;

struct Shared {
    std::uint64_t node_limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> budget_hit{false};
};

// Incremental state: colors are dense indices into `palette`.
class State {
public:
    State(const Problem& p, const std::vector<Color>& palette, const std::vector<std::vector<int>>& domains)
        : g_(*p.graph), n_(p.graph->order()), k_(static_cast<int>(palette.size())), symmetric_(p.interchangeable_colors),
          domains_(domains), col_(static_cast<std::size_t>(n_), -1),
          cnt_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(k_, 1)), 0),
          distinct_(static_cast<std::size_t>(n_), 0), uncolored_(static_cast<std::size_t>(n_), 0),
          need_(static_cast<std::size_t>(n_), 0)
    {
        for (Vertex v = 0; v < n_; ++v) {
            need_[v] = std::min(p.r, g_.degree(v));
            uncolored_[v] = g_.degree(v);
        }
    }

    // Places a color without feasibility checks (used for pre-colored vertices).
    void place(Vertex v, int c)
    {
        col_[v] = c;
        max_used_ = std::max(max_used_, c);
        for (Vertex w : g_.neighbors(v)) {
            --uncolored_[w];
            if (cnt_[idx(w, c)]++ == 0) ++distinct_[w];
        }
    }

    void unplace(Vertex v, int c, int old_max)
    {
        col_[v] = -1;
        max_used_ = old_max;
        for (Vertex w : g_.neighbors(v)) {
            ++uncolored_[w];
            if (--cnt_[idx(w, c)] == 0) --distinct_[w];
        }
    }

    bool consistent() const
    {
        for (Vertex v = 0; v < n_; ++v) {
            if (distinct_[v] + uncolored_[v] < need_[v]) return false;
            if (col_[v] >= 0 && cnt_[idx(v, col_[v])] > 0) return false;
        }
        return true;
    }

    bool tight(Vertex w) const { return distinct_[w] + uncolored_[w] == need_[w]; }

    // Colors u can take without an immediate violation.
    void available(Vertex u, std::vector<int>& out) const
    {
        out.clear();
        bool fresh_tried = false;
        for (int c : domains_[u]) {
            if (cnt_[idx(u, c)] > 0) continue;
            if (symmetric_ && c > max_used_) {
                if (fresh_tried) continue;
            }
            bool ok = true;
            for (Vertex w : g_.neighbors(u))
                if (cnt_[idx(w, c)] > 0 && tight(w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (symmetric_ && c > max_used_) fresh_tried = true;
            out.push_back(c);
        }
    }

    // Most constrained free vertex; -1 when none is left, and `avail` empty
    // with a valid vertex on a dead end.
    Vertex select(std::vector<int>& avail) const
    {
        Vertex best = -1;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        int best_sat = -1;
        std::vector<int> tmp;
        for (Vertex u = 0; u < n_; ++u) {
            if (col_[u] >= 0) continue;
            available(u, tmp);
            int sat = distinct_[u];
            if (tmp.size() < best_size || (tmp.size() == best_size && sat > best_sat)) {
                best = u;
                best_size = tmp.size();
                best_sat = sat;
                avail = tmp;
                if (best_size == 0) break;
            }
        }
        return best;
    }

    int max_used() const { return max_used_; }
    int color_of(Vertex v) const { return col_[v]; }
    int order() const { return n_; }

private:
    std::size_t idx(Vertex v, int c) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c); }

    const Graph& g_;
    int n_;
    int k_;
    bool symmetric_;
    const std::vector<std::vector<int>>& domains_;
    std::vector<int> col_;
    std::vector<int> cnt_;
    std::vector<int> distinct_;
    std::vector<int> uncolored_;
    std::vector<int> need_;
    int max_used_ = -1;
};

enum class Dfs { Found, Exhausted, Stopped };

class Searcher {
public:
    Searcher(State& s, Shared& shared, const std::atomic<long>* stop_below, long my_index)
        : s_(s), shared_(shared), stop_below_(stop_below), my_index_(my_index)
    {}

    Dfs run()
    {
        if (shared_.node_limit && shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.node_limit) {
            shared_.budget_hit = true;
            return Dfs::Stopped;
        }
        if (!shared_.node_limit) shared_.nodes.fetch_add(1, std::memory_order_relaxed);
        if (stop_below_ && stop_below_->load(std::memory_order_relaxed) < my_index_) return Dfs::Stopped;

        std::vector<int> avail;
        Vertex u = s_.select(avail);
        if (u < 0) return Dfs::Found;
        for (int c : avail) {
            int old_max = s_.max_used();
            s_.place(u, c);
            Dfs r = run();
            if (r == Dfs::Found) return r;
            s_.unplace(u, c, old_max);
            if (r == Dfs::Stopped) return r;
        }
        return Dfs::Exhausted;
    }

private:
    State& s_;
    Shared& shared_;
    const std::atomic<long>* stop_below_;
    long my_index_;
};

Coloring extract(const State& s, const std::vector<Color>& palette)
{
    Coloring out(static_cast<std::size_t>(s.order()), kUncolored);
    for (Vertex v = 0; v < s.order(); ++v) out[v] = palette[s.color_of(v)];
    return out;
}

struct Frontier {
    Path path;
    bool solved = false;
};

// Breadth-first expansion that keeps depth-first order, so the first
// satisfiable item holds the serial search's answer.
std::vector<Frontier> split(const State& root, int target, std::uint64_t& nodes)
{
    std::vector<Frontier> level{{}};
    for (int depth = 0; depth < 64 && static_cast<int>(level.size()) < target; ++depth) {
        std::vector<Frontier> next;
        bool grew = false;
        for (auto& item : level) {
            if (item.solved) {
                next.push_back(std::move(item));
                continue;
            }
            State s = root;
            for (auto [v, c] : item.path) s.place(v, c);
            std::vector<int> avail;
            ++nodes;
            Vertex u = s.select(avail);
            if (u < 0) {
                next.push_back({item.path, true});
                continue;
            }
            for (int c : avail) {
                Path p = item.path;
                p.emplace_back(u, c);
                next.push_back({std::move(p), false});
            }
            grew = true;
        }
        level = std::move(next);
        if (!grew) break;
    }
    return level;
}

} // namespace

Outcome solve(const Problem& problem)
{
    if (!problem.graph) throw std::invalid_argument("search: no graph");
    const Graph& g = *problem.graph;
    const int n = g.order();
    if (static_cast<int>(problem.domains.size()) != n) throw std::invalid_argument("search: domain count mismatch");
    if (!problem.fixed.empty() && static_cast<int>(problem.fixed.size()) != n)
        throw std::invalid_argument("search: partial coloring size mismatch");

    auto is_fixed = [&](Vertex v) { return !problem.fixed.empty() && problem.fixed[v] != kUncolored; };

    std::vector<Color> palette;
    for (Vertex v = 0; v < n; ++v) {
        if (is_fixed(v))
            palette.push_back(problem.fixed[v]);
        else
            palette.insert(palette.end(), problem.domains[v].begin(), problem.domains[v].end());
    }
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::unordered_map<Color, int> index;
    for (int i = 0; i < static_cast<int>(palette.size()); ++i) index[palette[i]] = i;

    std::vector<std::vector<int>> domains(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (is_fixed(v)) continue;
        for (Color c : problem.domains[v]) domains[v].push_back(index[c]);
        std::sort(domains[v].begin(), domains[v].end());
        domains[v].erase(std::unique(domains[v].begin(), domains[v].end()), domains[v].end());
    }

    State root(problem, palette, domains);
    for (Vertex v = 0; v < n; ++v)
        if (is_fixed(v)) root.place(v, index[problem.fixed[v]]);

    Outcome out;
    if (!root.consistent()) {
        out.status = Status::Unsat;
        return out;
    }

    Shared shared;
    shared.node_limit = problem.node_limit;

    if (problem.threads <= 1) {
        State s = root;
        Searcher searcher(s, shared, nullptr, 0);
        Dfs r = searcher.run();
        out.nodes = shared.nodes;
        if (r == Dfs::Found) {
            out.status = Status::Sat;
            out.coloring = extract(s, palette);
        } else {
            out.status = shared.budget_hit ? Status::BudgetExceeded : Status::Unsat;
        }
        return out;
    }

    std::uint64_t split_nodes = 0;
    auto frontier = split(root, 8 * problem.threads, split_nodes);
    shared.nodes += split_nodes;
    const long count = static_cast<long>(frontier.size());
    std::vector<Dfs> results(frontier.size(), Dfs::Exhausted);
    std::vector<Coloring> colorings(frontier.size());
    std::atomic<long> first_found{count};

#pragma omp parallel for schedule(dynamic, 1) num_threads(problem.threads)
    for (long i = 0; i < count; ++i) {
        if (first_found.load() < i) {
            results[i] = Dfs::Stopped;
            continue;
        }
        State s = root;
        for (auto [v, c] : frontier[i].path) s.place(v, c);
        Dfs r = Dfs::Found;
        if (!frontier[i].solved) {
            Searcher searcher(s, shared, &first_found, i);
            r = searcher.run();
        }
        results[i] = r;
        if (r == Dfs::Found) {
            colorings[i] = extract(s, palette);
            long cur = first_found.load();
            while (i < cur && !first_found.compare_exchange_weak(cur, i)) {}
        }
    }

    out.nodes = shared.nodes;
    for (long i = 0; i < count; ++i) {
        if (results[i] == Dfs::Found) {
            out.status = Status::Sat;
            out.coloring = std::move(colorings[i]);
            return out;
        }
        if (results[i] == Dfs::Stopped) {
            out.status = Status::BudgetExceeded;
            return out;
        }
    }
    out.status = Status::Unsat;
    return out;
}

} // namespace dyncol::search
