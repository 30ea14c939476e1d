#include "dyncol/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyncol/errors.hpp"

namespace dyncol {

namespace {

Vertex vertex_key(const std::string& key, int n)
{
    std::size_t pos = 0;
    int v = -1;
    try {
        v = std::stoi(key, &pos);
    } catch (const std::exception&) {
        throw InputError("bad vertex key \"" + key + "\"");
    }
    if (pos != key.size() || v < 0 || v >= n) throw InputError("bad vertex key \"" + key + "\"");
    return v;
}

// Visits (vertex, value) pairs of an object keyed by id or of an array.
template <class F>
void for_each_vertex(const Json& j, int n, F&& f)
{
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != n) throw InputError("array length does not match the vertex count");
        for (int v = 0; v < n; ++v) f(v, j[static_cast<std::size_t>(v)]);
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) f(vertex_key(it.key(), n), it.value());
    } else {
        throw InputError("expected an object keyed by vertex or an array");
    }
}

Json witness_json(const ConfigMatch& m)
{
    Json w = Json::object();
    for (const auto& [label, v] : m.witness) w[label] = v;
    return w;
}

} // namespace

Json to_json(const Rational& r)
{
    return r.str();
}

Rational rational_from_json(const Json& j)
{
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(std::string("bad rational: ") + e.what());
    }
    throw InputError("a rational must be an integer or a \"p/q\" string");
}

Json lists_to_json(const ListAssignment& lists)
{
    Json out = Json::object();
    for (std::size_t v = 0; v < lists.size(); ++v) out[std::to_string(v)] = lists[v];
    return out;
}

ListAssignment lists_from_json(const Json& j, int n)
{
    ListAssignment out(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    try {
        for_each_vertex(j, n, [&](Vertex v, const Json& val) {
            out[v] = val.get<std::vector<Color>>();
            std::sort(out[v].begin(), out[v].end());
            out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
            seen[v] = 1;
        });
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("bad list assignment: ") + e.what());
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw InputError("no list for vertex " + std::to_string(v));
    return out;
}

Json coloring_to_json(const Coloring& phi)
{
    Json out = Json::object();
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] != kUncolored) out[std::to_string(v)] = phi[v];
    return out;
}

Coloring coloring_from_json(const Json& j, int n)
{
    Coloring out(static_cast<std::size_t>(n), kUncolored);
    try {
        for_each_vertex(j, n, [&](Vertex v, const Json& val) {
            if (val.is_null()) return;
            out[v] = val.get<Color>();
            if (out[v] < 0) throw InputError("colors must be nonnegative");
        });
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("bad coloring: ") + e.what());
    }
    return out;
}

DemandFunction demand_from_json(const Json& j, int n)
{
    DemandFunction out(static_cast<std::size_t>(n), 0);
    try {
        for_each_vertex(j, n, [&](Vertex v, const Json& val) { out[v] = val.get<int>(); });
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("bad demand function: ") + e.what());
    }
    for (int v = 0; v < n; ++v)
        if (out[v] < 1) throw InputError("demand of vertex " + std::to_string(v) + " must be at least 1");
    return out;
}

GreedyCertificate certificate_from_json(const Json& j)
{
    GreedyCertificate c;
    try {
        c.ordering = j.at("ordering").get<std::vector<Vertex>>();
        if (j.contains("avoid"))
            for (const auto& pair : j.at("avoid")) c.avoidance_moves.emplace_back(pair.at(0), pair.at(1));
    } catch (const nlohmann::ordered_json::exception& e) {
        throw MalformedCertificate(std::string("bad certificate: ") + e.what());
    }
    return c;
}

Json to_json(const GreedyCertificate& c)
{
    Json avoid = Json::array();
    for (auto [a, b] : c.avoidance_moves) avoid.push_back({a, b});
    return {{"ordering", c.ordering}, {"avoid", avoid}};
}

Json to_json(const MadResult& m)
{
    return {{"mad", to_json(m.mad)}, {"maximizer", m.maximizer}};
}

Json to_json(const ConfigMatch& m)
{
    Json action;
    if (m.action.type == ReductionAction::Type::RemoveVertices)
        action = {{"remove_vertices", m.action.vertices}};
    else
        action = {{"remove_edge", {m.action.edge.first, m.action.edge.second}}};
    return {{"kind", to_string(m.kind)}, {"witness", witness_json(m)}, {"action", action}, {"recolor", m.recolor}};
}

Json to_json(const ChargeLedger& l)
{
    Json initial = Json::array(), final = Json::array(), transfers = Json::array();
    for (const auto& c : l.initial) initial.push_back(to_json(c));
    for (const auto& c : l.final) final.push_back(to_json(c));
    for (const auto& t : l.transfers)
        transfers.push_back({{"from", t.from}, {"to", t.to}, {"amount", to_json(t.amount)}, {"rule", t.rule}});
    return {{"initial", initial}, {"final", final}, {"transfers", transfers}};
}

Json to_json(const DischargeCheck& c)
{
    Json deficient = Json::array();
    for (const auto& [v, q] : c.deficient) deficient.push_back({{"vertex", v}, {"charge", to_json(q)}});
    Json out = {{"all_at_least_bound", c.all_at_least_bound}, {"deficient", deficient}};
    out["minimum"] = c.minimum ? to_json(*c.minimum) : Json(nullptr);
    return out;
}

Json to_json(const ConsistencyReport& r)
{
    Json out = {{"mad_below_bound", r.mad_below_bound}, {"charges", to_json(r.charges)}, {"consistent", r.consistent}};
    out["config"] = r.config ? to_json(*r.config) : Json(nullptr);
    return out;
}

Json to_json(const ReductionTrace& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        // Report every vertex in original ids.
        ConfigMatch m = s.match;
        auto orig = [&](Vertex v) { return s.original_ids[static_cast<std::size_t>(v)]; };
        for (auto& [label, v] : m.witness) v = orig(v);
        for (auto& v : m.action.vertices) v = orig(v);
        for (auto& v : m.recolor) v = orig(v);
        if (m.action.type == ReductionAction::Type::RemoveEdge)
            m.action.edge = {orig(m.action.edge.first), orig(m.action.edge.second)};
        Json match = to_json(m);
        steps.push_back({{"config", match},
                         {"reduced_order", s.reduced_order},
                         {"reduced_size", s.reduced_size},
                         {"extended", s.extended}});
    }
    Json gaps = Json::array();
    for (const auto& g : t.gaps) gaps.push_back({{"depth", g.depth}, {"graph6", g.graph6}, {"mad", to_json(g.mad)}});
    return {{"steps", steps}, {"gaps", gaps}, {"base", t.base}, {"coloring", coloring_to_json(t.coloring)}};
}

Json to_json(const ValidityReport& v)
{
    Json out = {{"valid", v.valid}};
    if (v.violation)
        out["violation"] = {{"vertex", v.violation->vertex},
                            {"kind", to_string(v.violation->kind)},
                            {"detail", v.violation->detail}};
    return out;
}

} // namespace dyncol
