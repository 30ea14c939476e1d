#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dyncol/graph.hpp"

namespace dyncol {

// vertex -> required list size (>= 1)
using DemandFunction = std::vector<int>;

struct SearchBudget {
    // Search nodes per decision query; 0 means unlimited.
    std::uint64_t node_limit = 0;
    int threads = 1;
};

enum class ChiStatus { Exact, BudgetExceeded };

struct ChiResult {
    ChiStatus status = ChiStatus::Exact;
    // Equal when exact. Otherwise chi lies in [lower, upper].
    int lower = 0;
    int upper = 0;
    // Colors 0..upper-1; valid r-dynamic coloring.
    Coloring witness;
    std::uint64_t nodes = 0;

    int value() const { return upper; }
};

// Exact r-dynamic chromatic number. Throws EmptyGraph.
ChiResult chi_r_dynamic(const Graph& g, int r, SearchBudget budget = {});

// Greedy proper coloring of square(g): a valid r-dynamic coloring for every r.
Coloring greedy_square_coloring(const Graph& g);

// Clique number of the graph whose pairs must get distinct colors in every
// r-dynamic coloring: edges of g plus pairs sharing a neighbor of degree <= r.
int forced_clique_bound(const Graph& g, int r);

enum class ListStatus { Sat, Unsat, BudgetExceeded };

struct ListColoringResult {
    ListStatus status = ListStatus::Unsat;
    Coloring coloring;
    explicit operator bool() const { return status == ListStatus::Sat; }
};

// Complete search; Unsat is never reported for an unfinished search.
ListColoringResult color_with_lists(const Graph& g, int r, const ListAssignment& lists, SearchBudget budget = {});

struct ChoosabilityResult {
    bool choosable = true;
    std::optional<ListAssignment> counterexample;
    // Assignments examined.
    std::uint64_t assignments = 0;
};

inline constexpr int kDefaultChoosabilityThreshold = 12;

// Every list assignment with |L(v)| = f(v) over a universe of sum(f) colors,
// up to renaming colors. Throws ThresholdExceeded when sum(f) > threshold.
ChoosabilityResult is_f_choosable_exact(const Graph& g, const DemandFunction& f,
                                        int threshold = kDefaultChoosabilityThreshold);

struct SampleResult {
    bool counterexample_found = false;
    std::optional<ListAssignment> counterexample;
    int trials_run = 0;
};

// Random list assignments (|L(v)| = f(v), universe sum(f)); deterministic
// for a given seed.
SampleResult choosability_sample(const Graph& g, const DemandFunction& f, int trials, std::uint64_t seed);

struct GreedyCertificate {
    std::vector<Vertex> ordering;
    // (early, late): the early vertex is colored outside L(late).
    std::vector<std::pair<Vertex, Vertex>> avoidance_moves;
};

struct CertificateCheck {
    bool ok = true;
    std::optional<Vertex> failing_vertex;
    explicit operator bool() const { return ok; }
};

// Replays the counting argument of a greedy strategy. Throws
// MalformedCertificate.
CertificateCheck verify_greedy_certificate(const Graph& g, const DemandFunction& f, const GreedyCertificate& cert);

} // namespace dyncol
