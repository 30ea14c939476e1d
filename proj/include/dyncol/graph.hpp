#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dyncol {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Color kUncolored = -1;

// vertex -> color, kUncolored for vertices not yet colored.
using Coloring = std::vector<Color>;
// vertex -> sorted, duplicate-free list of admissible colors.
using ListAssignment = std::vector<std::vector<Color>>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency sets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws InvalidGraph on self-loops or out-of-range endpoints; repeated
    // edges are rejected as parallel edges.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    int max_degree() const;

    // Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    // Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v);
    Vertex add_vertex();

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Optional external names; empty when none were supplied.
    std::vector<std::string>& labels() { return labels_; }
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
    std::vector<std::string> labels_;
};

// Membership in W_i: a 3-vertex with exactly i neighbors of degree 2.
enum class WClass { W0, W1, W2, W3, NotA3Vertex };

const char* to_string(WClass c);

Graph square(const Graph& g);

std::vector<WClass> classify_w(const Graph& g);

// Vertices u != v sharing a common degree-2 neighbor with v, sorted.
std::vector<Vertex> weak_neighbors(const Graph& g, Vertex v);

struct InducedSubgraph {
    Graph graph;
    // local id -> id in the parent graph (ascending)
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// g minus a vertex set, with the parent map of the survivors.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

enum class ViolationKind { NotInList, Improper, TooFewNeighborColors };

const char* to_string(ViolationKind k);

struct Violation {
    Vertex vertex = -1;
    ViolationKind kind = ViolationKind::Improper;
    // For Improper: the conflicting neighbor. For TooFewNeighborColors: the
    // number of distinct neighbor colors seen.
    int detail = -1;
};

struct ValidityReport {
    bool valid = true;
    std::optional<Violation> violation;
    explicit operator bool() const { return valid; }
};

// Checks, vertex by vertex in id order, list membership, properness and
// |phi(N(v))| >= min(r, deg v). Throws UncoloredVertex if phi is partial.
ValidityReport is_valid_r_dynamic(const Graph& g, int r, std::span<const Color> phi,
                                  const ListAssignment* lists = nullptr);

// Distinct colors in N(v), ignoring uncolored neighbors.
int distinct_neighbor_colors(const Graph& g, std::span<const Color> phi, Vertex v);

} // namespace dyncol
