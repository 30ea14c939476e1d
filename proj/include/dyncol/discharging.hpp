#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyncol/configurations.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/rational.hpp"

namespace dyncol {

struct Transfer {
    Vertex from = -1;
    Vertex to = -1;
    Rational amount;
    std::string rule; // "R1".."R4"
};

struct ChargeLedger {
    std::vector<Rational> initial; // degrees
    std::vector<Rational> final;
    std::vector<Transfer> transfers;
};

// Charge bound each rule set is designed to reach: 18/7, 14/5, 3.
Rational theorem_bound(Theorem t);

// All rule instances fire once, decided on the input graph's structure.
ChargeLedger discharge(const Graph& g, Theorem t);

struct DischargeCheck {
    bool all_at_least_bound = true;
    // (vertex, final charge) for every vertex below the bound.
    std::vector<std::pair<Vertex, Rational>> deficient;
    std::optional<Rational> minimum;
};

DischargeCheck verify_discharge(const ChargeLedger& ledger, const Rational& bound);
DischargeCheck verify_discharge(const Graph& g, Theorem t, const Rational& bound);

struct ConsistencyReport {
    bool mad_below_bound = false;
    std::optional<ConfigMatch> config;
    DischargeCheck charges;
    // False exactly for mad < bound, no configuration and no deficit.
    bool consistent = true;
};

ConsistencyReport certify_contradiction(const Graph& g, Theorem t);

} // namespace dyncol
