#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dyncol/graph.hpp"
#include "dyncol/rational.hpp"

namespace dyncol {

struct MadResult {
    Rational mad;
    // A nonempty vertex set whose induced subgraph attains mad.
    std::vector<Vertex> maximizer;
};

// Exact maximum average degree, via parametric max-flow (Dinkelbach
// iteration on the densest-subgraph closure problem). Throws EmptyGraph.
MadResult mad_exact(const Graph& g);

struct MadBound {
    bool holds = true;
    // Present when holds == false: a vertex set of average degree > bound.
    std::optional<std::vector<Vertex>> certificate;
};

// One max-flow: is mad(g) <= bound? bound must be positive.
MadBound mad_at_most(const Graph& g, const Rational& bound);

// rho(A) = a|A| - b|E(G[A])|; the (9, 7) instance is nonnegative on every A
// exactly when mad(G) <= 18/7.
struct PotentialParams {
    int a = 9;
    int b = 7;
};

long rho(const Graph& g, std::span<const Vertex> a_set, PotentialParams params = {});

// Edges of g with both endpoints in the set.
int induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

// f plus a path of length ell from x to y whose ell-1 inner vertices are new.
Graph add_path(const Graph& f, Vertex x, Vertex y, int ell);

struct PathAugmentation {
    Graph augmented;
    bool mad_within_bound = false;
};

// Adds a path of length ell >= min_length between distinct x, y of f and
// reports whether mad(F') <= bound, computed independently with mad_exact.
// Throws PathTooShort, InvalidSpec (x == y or out of range) and
// PreconditionMad (mad(f) > bound).
PathAugmentation check_path_augmentation(const Graph& f, Vertex x, Vertex y, int ell,
                                         const Rational& bound = Rational(18, 7), int min_length = 5);

} // namespace dyncol
