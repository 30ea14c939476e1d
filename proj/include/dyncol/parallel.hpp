#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyncol/configurations.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/mad.hpp"

namespace dyncol {

// Batch kernels over independent graphs. Each has a serial reference with
// identical output; threads <= 0 means the OpenMP default.

std::vector<MadResult> mad_batch(const std::vector<Graph>& graphs, int threads);
std::vector<MadResult> mad_batch_serial(const std::vector<Graph>& graphs);

// Per-graph outcome of mad, configuration search and discharging.
struct SweepRecord {
    bool mad_below_bound = false;
    std::optional<ConfigKind> config;
    bool all_at_least_bound = false;
    bool conserved = false; // sum of final charges equals 2|E|
    bool consistent = true;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

std::vector<SweepRecord> theorem_sweep(const std::vector<Graph>& graphs, Theorem t, int threads);
std::vector<SweepRecord> theorem_sweep_serial(const std::vector<Graph>& graphs, Theorem t);

// Outcome of the constructive algorithm on one (graph, lists) pair.
struct ColoringRecord {
    bool valid = false;
    int steps = 0;
    int gaps = 0;
    std::string error; // empty on success

    friend bool operator==(const ColoringRecord&, const ColoringRecord&) = default;
};

std::vector<ColoringRecord> constructive_batch(const std::vector<Graph>& graphs,
                                               const std::vector<ListAssignment>& lists, Theorem t, int threads);
std::vector<ColoringRecord> constructive_batch_serial(const std::vector<Graph>& graphs,
                                                      const std::vector<ListAssignment>& lists, Theorem t);

} // namespace dyncol
