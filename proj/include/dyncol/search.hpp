#pragma once

#include <cstdint>

#include "dyncol/graph.hpp"

namespace dyncol::search {

// Complete the partial coloring `fixed` to an r-dynamic coloring of g, taking
// each free vertex's color from its domain. Pre-colored vertices never change.
struct Problem {
    const Graph* graph = nullptr;
    int r = 3;
    // Domains of free vertices (entries of pre-colored vertices are ignored).
    ListAssignment domains;
    // kUncolored marks a free vertex; empty means all vertices are free.
    Coloring fixed;
    // All domains are the same color set and nothing is pre-colored: colors
    // are interchangeable and only one unused color is tried per node.
    bool interchangeable_colors = false;
    // 0 means unlimited.
    std::uint64_t node_limit = 0;
    // > 1 splits the top of the search tree across OpenMP threads. The
    // returned coloring is the one the serial search would return.
    int threads = 1;
};

enum class Status { Sat, Unsat, BudgetExceeded };

struct Outcome {
    Status status = Status::Unsat;
    Coloring coloring;
    std::uint64_t nodes = 0;
};

Outcome solve(const Problem& problem);

} // namespace dyncol::search
