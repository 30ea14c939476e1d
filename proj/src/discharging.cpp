#include "dyncol/discharging.hpp"

#include "dyncol/mad.hpp"

namespace dyncol {

namespace {

bool has_neighbor_in(const Graph& g, const std::vector<WClass>& w, Vertex x, WClass c)
{
    for (Vertex q : g.neighbors(x))
        if (w[q] == c) return true;
    return false;
}

bool has_weak_neighbor_in(const Graph& g, const std::vector<WClass>& w, Vertex x, WClass c)
{
    for (Vertex q : weak_neighbors(g, x))
        if (w[q] == c) return true;
    return false;
}

} // namespace

Rational theorem_bound(Theorem t)
{
    switch (t) {
    case Theorem::Thm3: return {18, 7};
    case Theorem::Thm4: return {14, 5};
    case Theorem::Thm5: return {3};
    }
    return {};
}

ChargeLedger discharge(const Graph& g, Theorem t)
{
    const int n = g.order();
    const auto w = classify_w(g);
    ChargeLedger ledger;
    for (Vertex v = 0; v < n; ++v) ledger.initial.emplace_back(g.degree(v));
    auto give = [&](Vertex from, Vertex to, Rational amount, const char* rule) {
        ledger.transfers.push_back({from, to, amount, rule});
    };

    switch (t) {
    case Theorem::Thm3:
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            for (Vertex q : g.neighbors(u))
                if (g.degree(q) == 2) give(u, q, {2, 7}, "R1");
        }
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            for (Vertex q : weak_neighbors(g, u))
                if (w[q] == WClass::W3) give(u, q, {1, 7}, "R2");
        }
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            for (Vertex q : g.neighbors(u))
                if (w[q] == WClass::W2) give(u, q, {1, 7}, "R3");
        }
        for (Vertex u = 0; u < n; ++u) {
            if (w[u] != WClass::W0) continue;
            for (Vertex x : g.neighbors(u))
                if (w[x] == WClass::W1 && has_neighbor_in(g, w, x, WClass::W2) &&
                    has_weak_neighbor_in(g, w, x, WClass::W3))
                    give(u, x, {1, 7}, "R4");
        }
        break;
    case Theorem::Thm4:
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            for (Vertex q : g.neighbors(u))
                if (g.degree(q) == 2) give(u, q, {2, 5}, "R1");
        }
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            for (Vertex q : g.neighbors(u))
                if (w[q] == WClass::W1) give(u, q, {1, 10}, "R2");
        }
        break;
    case Theorem::Thm5:
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) < 4) continue;
            for (Vertex q : g.neighbors(u))
                if (g.degree(q) == 2) give(u, q, {1, 2}, "R1");
        }
        break;
    }

    ledger.final = ledger.initial;
    for (const auto& tr : ledger.transfers) {
        ledger.final[tr.from] -= tr.amount;
        ledger.final[tr.to] += tr.amount;
    }
    return ledger;
}

DischargeCheck verify_discharge(const ChargeLedger& ledger, const Rational& bound)
{
    DischargeCheck out;
    for (Vertex v = 0; v < static_cast<Vertex>(ledger.final.size()); ++v) {
        const Rational& c = ledger.final[v];
        if (!out.minimum || c < *out.minimum) out.minimum = c;
        if (c < bound) out.deficient.emplace_back(v, c);
    }
    out.all_at_least_bound = out.deficient.empty();
    return out;
}

DischargeCheck verify_discharge(const Graph& g, Theorem t, const Rational& bound)
{
    return verify_discharge(discharge(g, t), bound);
}

ConsistencyReport certify_contradiction(const Graph& g, Theorem t)
{
    const Rational bound = theorem_bound(t);
    ConsistencyReport out;
    out.mad_below_bound = g.order() > 0 && mad_exact(g).mad < bound;
    out.config = find_config(g, t);
    out.charges = verify_discharge(g, t, bound);
    out.consistent = !(out.mad_below_bound && !out.config && out.charges.all_at_least_bound);
    return out;
}

} // namespace dyncol
