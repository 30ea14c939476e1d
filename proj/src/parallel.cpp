#include "dyncol/parallel.hpp"

#include <omp.h>

#include "dyncol/constructive.hpp"
#include "dyncol/discharging.hpp"
#include "dyncol/errors.hpp"

namespace dyncol {

namespace {

int resolve(int threads)
{
    return threads > 0 ? threads : omp_get_max_threads();
}

SweepRecord sweep_one(const Graph& g, Theorem t)
{
    SweepRecord rec;
    auto report = certify_contradiction(g, t);
    rec.mad_below_bound = report.mad_below_bound;
    if (report.config) rec.config = report.config->kind;
    rec.all_at_least_bound = report.charges.all_at_least_bound;
    rec.consistent = report.consistent;
    Rational total;
    for (const auto& c : discharge(g, t).final) total += c;
    rec.conserved = total == Rational(2 * g.size());
    return rec;
}

ColoringRecord color_one(const Graph& g, const ListAssignment& lists, Theorem t)
{
    ColoringRecord rec;
    try {
        auto res = list_color(g, lists, t);
        rec.valid = is_valid_r_dynamic(g, 3, res.coloring, &lists).valid;
        rec.steps = static_cast<int>(res.trace.steps.size());
        rec.gaps = static_cast<int>(res.trace.gaps.size());
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

// Exceptions must not cross the OpenMP region boundary.
template <class Out, class F>
std::vector<Out> run_parallel(std::size_t n, int threads, F&& f)
{
    std::vector<Out> out(n);
    std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(threads))
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw Error(e);
    return out;
}

} // namespace

std::vector<MadResult> mad_batch(const std::vector<Graph>& graphs, int threads)
{
    return run_parallel<MadResult>(graphs.size(), threads, [&](std::size_t i) { return mad_exact(graphs[i]); });
}

std::vector<MadResult> mad_batch_serial(const std::vector<Graph>& graphs)
{
    std::vector<MadResult> out;
    for (const auto& g : graphs) out.push_back(mad_exact(g));
    return out;
}

std::vector<SweepRecord> theorem_sweep(const std::vector<Graph>& graphs, Theorem t, int threads)
{
    return run_parallel<SweepRecord>(graphs.size(), threads, [&](std::size_t i) { return sweep_one(graphs[i], t); });
}

std::vector<SweepRecord> theorem_sweep_serial(const std::vector<Graph>& graphs, Theorem t)
{
    std::vector<SweepRecord> out;
    for (const auto& g : graphs) out.push_back(sweep_one(g, t));
    return out;
}

std::vector<ColoringRecord> constructive_batch(const std::vector<Graph>& graphs,
                                               const std::vector<ListAssignment>& lists, Theorem t, int threads)
{
    if (graphs.size() != lists.size()) throw InputError("one list assignment per graph is required");
    return run_parallel<ColoringRecord>(graphs.size(), threads,
                                        [&](std::size_t i) { return color_one(graphs[i], lists[i], t); });
}

std::vector<ColoringRecord> constructive_batch_serial(const std::vector<Graph>& graphs,
                                                      const std::vector<ListAssignment>& lists, Theorem t)
{
    if (graphs.size() != lists.size()) throw InputError("one list assignment per graph is required");
    std::vector<ColoringRecord> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back(color_one(graphs[i], lists[i], t));
    return out;
}

} // namespace dyncol
