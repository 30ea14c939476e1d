// Serial reference vs OpenMP kernels on fixed random corpora.
// usage: bench_kernels [threads] [scale]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "dyncol/discharging.hpp"
#include "dyncol/generators.hpp"
#include "dyncol/parallel.hpp"
#include "dyncol/solver.hpp"

using namespace dyncol;

namespace {

double time_ms(const std::function<void()>& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same)
{
    std::printf("%-22s %12.1f %12.1f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    const int scale = argc > 2 ? std::atoi(argv[2]) : 1;

    std::vector<Graph> graphs;
    std::vector<ListAssignment> lists;
    for (int i = 0; i < 400 * scale; ++i) {
        Graph g = random_subdivided_graph_mad_below(30 + i % 50, {18, 7}, static_cast<std::uint64_t>(i));
        lists.push_back(random_lists(g.order(), 6, 9, static_cast<std::uint64_t>(i)));
        graphs.push_back(std::move(g));
    }

    std::printf("threads %d, %zu graphs\n", threads, graphs.size());
    std::printf("%-22s %12s %12s %9s\n", "kernel", "serial ms", "openmp ms", "speedup");

    std::vector<MadResult> ms, mp;
    double a = time_ms([&] { ms = mad_batch_serial(graphs); });
    double b = time_ms([&] { mp = mad_batch(graphs, threads); });
    bool same = ms.size() == mp.size();
    for (std::size_t i = 0; same && i < ms.size(); ++i) same = ms[i].mad == mp[i].mad;
    row("mad_batch", a, b, same);

    std::vector<SweepRecord> ss, sp;
    a = time_ms([&] { ss = theorem_sweep_serial(graphs, Theorem::Thm3); });
    b = time_ms([&] { sp = theorem_sweep(graphs, Theorem::Thm3, threads); });
    row("theorem_sweep", a, b, ss == sp);

    std::vector<ColoringRecord> cs, cp;
    a = time_ms([&] { cs = constructive_batch_serial(graphs, lists, Theorem::Thm3); });
    b = time_ms([&] { cp = constructive_batch(graphs, lists, Theorem::Thm3, threads); });
    row("constructive_batch", a, b, cs == cp);

    for (Graph g : {petersen(), double_petersen_path(3)}) {
        ChiResult c1, cn;
        a = time_ms([&] { c1 = chi_r_dynamic(g, 3, {0, 1}); });
        b = time_ms([&] { cn = chi_r_dynamic(g, 3, {0, threads}); });
        row(g.order() == 10 ? "chi petersen" : "chi double petersen", a, b,
            c1.value() == cn.value() && c1.witness == cn.witness);
    }
    return 0;
}
