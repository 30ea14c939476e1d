#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyncol/graph.hpp"

namespace dyncol {

enum class ConfigKind {
    C1,         // 1- vertex
    C2,         // adjacent 2-vertices
    L1_3,       // adjacent x, y with a common 2-neighbor
    L1_4,       // x in W2 or W3 whose two 2-neighbors end at the same y
    Fig4a,
    Fig4b,
    C3,         // adjacent W2 vertices
    C4i,        // W3 vertex with a weak neighbor of degree >= 4
    C4ii,       // W3 vertex whose 3-vertex weak neighbor has a second 2-neighbor
    C5,         // W1 vertex with two W2 neighbors
    C6,         // 3-vertex with a W1 neighbor, a W2 neighbor and a W3 weak neighbor
    KVertex7,   // k-vertex (k = 3, 4) with >= k-1 two-neighbors, 7-list proof
    AdjacentW1, // adjacent W1 vertices
    ThreeW1,    // 3-vertex with three W1 neighbors
    LowVertex8, // 3- vertex with a 2-neighbor
    KVertex8,   // k-vertex (k = 4, 5) with >= k-1 two-neighbors, 8-list proof
};

const char* to_string(ConfigKind k);
std::optional<ConfigKind> config_kind_from_string(std::string_view s);

struct ReductionAction {
    enum class Type { RemoveVertices, RemoveEdge };
    Type type = Type::RemoveVertices;
    std::vector<Vertex> vertices; // sorted, for RemoveVertices
    Edge edge{-1, -1};            // for RemoveEdge
};

struct ConfigMatch {
    ConfigKind kind = ConfigKind::C1;
    // Labels in pattern order.
    std::vector<std::pair<std::string, Vertex>> witness;
    ReductionAction action;
    // Vertices kept by the reduction whose colors the extension may change.
    std::vector<Vertex> recolor;

    Vertex at(std::string_view label) const;
    // Removed vertices (or edge endpoints) together with `recolor`, sorted.
    std::vector<Vertex> extension_set() const;
};

enum class Theorem { Thm3 = 3, Thm4 = 4, Thm5 = 5 };

// First match in the theorem's priority order; within a kind, the
// lexicographically smallest witness tuple. nullopt means NotFound.
std::optional<ConfigMatch> find_config_thm3(const Graph& g);
std::optional<ConfigMatch> find_config_thm4(const Graph& g);
std::optional<ConfigMatch> find_config_thm5(const Graph& g);
std::optional<ConfigMatch> find_config(const Graph& g, Theorem t);

enum class Fig4 { A, B };

// Induced embedding of the 5-cycle (A) or 6-cycle (B) pattern: labeled vertices distinct,
// solid vertices of exact degree, hollow vertices of degree >= 3, no edges
// among labeled vertices beyond the pattern except between two hollow ones.
std::optional<ConfigMatch> match_fig4(const Graph& g, Fig4 which);

// Every match of one kind (all witness tuples), in lexicographic order.
std::vector<ConfigMatch> find_all(const Graph& g, ConfigKind kind);

} // namespace dyncol
