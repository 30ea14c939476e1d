#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "dyncol/graph.hpp"
#include "dyncol/rational.hpp"
#include "dyncol/solver.hpp"

namespace dyncol {

// Tight example for 6-lists: edges 01 03 05 12 24 26 34 46 56.
Graph fig1_graph();

// Vertices are the 2-subsets of {1..5} in lexicographic order (0 = {1,2},
// ..., 9 = {4,5}); adjacent when disjoint.
Graph petersen();
// Petersen minus its lexicographically first edge (0, 7).
Graph petersen_minus_edge();
// Two Petersen copies (0..9 and 10..19) joined by a path of length ell
// from vertex 0 to vertex 10. Throws PathTooShort when ell < 3.
Graph double_petersen_path(int ell);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

enum class JoinFamily {
    None,    // only lengths >= 1 are enforced
    Bound18_7, // length >= 5, endpoints in h are distinct 2-vertices of h
    Bound14_5, // length >= 4, every vertex of h keeps degree <= 3
    Bound3,  // length >= 3, exactly one path
};

struct JoinSpec {
    JoinFamily family = JoinFamily::None;
    // (vertex of h, vertex of h2, path length)
    std::vector<std::tuple<Vertex, Vertex, int>> paths;
};

int join_min_length(JoinFamily f);

// Disjoint union (h2 shifted by |h|) plus internally disjoint paths.
// Throws InvalidSpec.
Graph join_with_paths(const Graph& h, const Graph& h2, const JoinSpec& spec);

// Connected graph on at most n vertices with mad < bound: random tree growth
// and random extra edges, each kept only if the bound still holds.
Graph random_graph_mad_below(int n, const Rational& bound, std::uint64_t seed);

// Graph with mad < bound on at most n vertices, built from a random core of
// 3- and 4-vertices whose edges are subdivided until the bound holds. Few
// vertices of degree below 2 and few adjacent 2-vertices, so the deeper
// configurations show up. Falls back to a short cycle or path.
Graph random_subdivided_graph_mad_below(int n, const Rational& bound, std::uint64_t seed);

// Random multigraph core on `core` vertices with degrees drawn from
// [min_degree, max_degree]; each core edge is subdivided 0..max_subdivisions
// times and repeated pairs at least once. Loops are dropped. No mad filter.
Graph random_core_graph(int core, int min_degree, int max_degree, int max_subdivisions, std::uint64_t seed);

// Random lists of the given size drawn from {0..universe-1}.
ListAssignment random_lists(int n, int size, int universe, std::uint64_t seed);

// Graphs of the small choosability facts, with vertex order
// (v1, v2, v3, v4) and (v1, v2, v3, v4, x1, x2, x, w).
Graph h1_graph();
Graph h2_graph();
Graph h3_graph();
DemandFunction h1_demand();
DemandFunction h2_demand();
DemandFunction h3_demand();
// Color x outside L(v1), then x, v4, v3, x2, w, x1, v2, v1.
GreedyCertificate h2_certificate();

} // namespace dyncol
