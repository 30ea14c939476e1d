#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyncol/configurations.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/rational.hpp"

namespace dyncol {

struct ReductionStep {
    ConfigMatch match; // ids of the graph the match was found in
    // The reduced graph, with its ids mapped to the original graph.
    int reduced_order = 0;
    int reduced_size = 0;
    std::vector<Vertex> original_ids; // match-graph id -> original id
    // Original ids whose colors were chosen by this step's extension.
    std::vector<Vertex> extended;
};

// Emitted when a graph below the bound has no configuration. The step is
// then colored by exhaustive search.
struct ProofGapReport {
    int depth = 0;
    std::string graph6;
    Rational mad;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<ProofGapReport> gaps;
    // Vertices of the final base graph (original ids), colored directly.
    std::vector<Vertex> base;
    Coloring coloring;
};

struct ConstructiveResult {
    Coloring coloring;
    ReductionTrace trace;
};

// 3-dynamic L-coloring along the reductions of the matching proof.
// Throws PreconditionMad, ListTooShort or InternalExtensionFailure.
ConstructiveResult list_color_thm3(const Graph& g, const ListAssignment& lists); // mad < 18/7, |L| >= 6
ConstructiveResult list_color_thm4(const Graph& g, const ListAssignment& lists); // mad < 14/5, |L| >= 7
ConstructiveResult list_color_thm5(const Graph& g, const ListAssignment& lists); // mad < 3,    |L| >= 8
ConstructiveResult list_color(const Graph& g, const ListAssignment& lists, Theorem t);

int theorem_list_size(Theorem t);

// Reduced lists for the uncolored set s, given phi on V(g) - s:
//   (1) drop colors of neighbors in V(g) - s;
//   (2) for such a neighbor u with exactly one neighbor u' outside s, drop phi(u');
//   (3) for such a neighbor u with two or more neighbors outside s, drop two
//       distinct colors seen at those neighbors (those outside L(a) first);
//   (4) drop phi(u) for colored u sharing with a a neighbor in s of degree <= 3,
//       or a common 2-neighbor.
// Entry i is the list of s[i]. Throws InvalidPartial unless phi colors
// exactly V(g) - s.
ListAssignment restrict_lists(const Graph& g, const std::vector<Vertex>& s, const Coloring& phi,
                              const ListAssignment& lists);

// Recolors x in the reduced graph of the C6 reduction, changing at most
// y, z, y1, y2, z1 besides x, so that the new color of x differs from
// phi(x). Context labels x, y, z, y1, y2, z1 refer to ids of h. Throws
// InvalidSpec on a malformed context and InternalExtensionFailure if no
// recoloring exists.
Coloring recolor_claim1(const Graph& h, const Coloring& phi, const ListAssignment& lists, const ConfigMatch& context);

} // namespace dyncol
