#include "dyncol/constructive.hpp"

#include <algorithm>
#include <numeric>

#include "dyncol/discharging.hpp"
#include "dyncol/errors.hpp"
#include "dyncol/graph_io.hpp"
#include "dyncol/mad.hpp"
#include "dyncol/search.hpp"
#include "dyncol/solver.hpp"

namespace dyncol {

namespace {

struct Stage {
    Graph graph;
    std::vector<Vertex> orig; // local id -> original id
};

ListAssignment lists_for(const ListAssignment& lists, const std::vector<Vertex>& orig)
{
    ListAssignment out;
    out.reserve(orig.size());
    for (Vertex o : orig) out.push_back(lists[o]);
    return out;
}

// Completes phi (kUncolored on the vertices to choose) on g.
Coloring extend(const Graph& g, const Coloring& phi, const ListAssignment& lists)
{
    search::Problem p;
    p.graph = &g;
    p.r = 3;
    p.domains = lists;
    p.fixed = phi;
    auto res = search::solve(p);
    if (res.status != search::Status::Sat) throw InternalExtensionFailure("no extension of the reduced coloring");
    return res.coloring;
}

void normalize_lists(ListAssignment& lists)
{
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

} // namespace

int theorem_list_size(Theorem t)
{
    switch (t) {
    case Theorem::Thm3: return 6;
    case Theorem::Thm4: return 7;
    case Theorem::Thm5: return 8;
    }
    return 0;
}

ConstructiveResult list_color(const Graph& g, const ListAssignment& input_lists, Theorem t)
{
    if (static_cast<int>(input_lists.size()) != g.order()) throw InputError("list assignment does not cover the graph");
    ListAssignment lists = input_lists;
    normalize_lists(lists);
    const int need = theorem_list_size(t);
    for (Vertex v = 0; v < g.order(); ++v)
        if (static_cast<int>(lists[v].size()) < need)
            throw ListTooShort("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                               " colors, need " + std::to_string(need));
    const Rational bound = theorem_bound(t);
    if (g.order() > 0 && !(mad_exact(g).mad < bound)) throw PreconditionMad("mad must be below " + bound.str());

    ConstructiveResult out;
    std::vector<Stage> stages;
    {
        Stage s{g, std::vector<Vertex>(static_cast<std::size_t>(g.order()))};
        std::iota(s.orig.begin(), s.orig.end(), 0);
        stages.push_back(std::move(s));
    }

    // Reduce until the base case.
    for (;;) {
        const Stage& cur = stages.back();
        if (cur.graph.order() <= 2) break;
        auto match = find_config(cur.graph, t);
        if (!match) {
            out.trace.gaps.push_back({static_cast<int>(stages.size()) - 1, to_graph6(cur.graph),
                                      mad_exact(cur.graph).mad});
            break;
        }
        Stage next;
        if (match->action.type == ReductionAction::Type::RemoveVertices) {
            auto sub = remove_vertices(cur.graph, match->action.vertices);
            next.graph = std::move(sub.graph);
            for (Vertex local : sub.to_parent) next.orig.push_back(cur.orig[local]);
        } else {
            next.graph = cur.graph;
            next.graph.remove_edge(match->action.edge.first, match->action.edge.second);
            next.orig = cur.orig;
        }
        ReductionStep step;
        step.match = std::move(*match);
        step.reduced_order = next.graph.order();
        step.reduced_size = next.graph.size();
        step.original_ids = cur.orig;
        out.trace.steps.push_back(std::move(step));
        stages.push_back(std::move(next));
    }

    // Base: exhaustive search on what is left.
    const Stage& base = stages.back();
    out.trace.base = base.orig;
    Coloring local;
    if (base.graph.order() > 0) {
        auto res = color_with_lists(base.graph, 3, lists_for(lists, base.orig));
        if (!res) throw InternalExtensionFailure("base graph is not colorable from its lists");
        local = std::move(res.coloring);
    }

    // Unwind: lift, uncolor the step's extension set, re-extend.
    for (int i = static_cast<int>(out.trace.steps.size()) - 1; i >= 0; --i) {
        const Stage& parent = stages[static_cast<std::size_t>(i)];
        const Stage& child = stages[static_cast<std::size_t>(i) + 1];
        ReductionStep& step = out.trace.steps[static_cast<std::size_t>(i)];
        Coloring phi(static_cast<std::size_t>(parent.graph.order()), kUncolored);
        // Original ids are unique within a stage; map child ids through them.
        std::vector<Vertex> parent_of_orig(static_cast<std::size_t>(g.order()), -1);
        for (Vertex p = 0; p < parent.graph.order(); ++p) parent_of_orig[parent.orig[p]] = p;
        for (Vertex c = 0; c < child.graph.order(); ++c) phi[parent_of_orig[child.orig[c]]] = local[c];
        for (Vertex v : step.match.extension_set()) phi[v] = kUncolored;
        for (Vertex p = 0; p < parent.graph.order(); ++p)
            if (phi[p] == kUncolored) step.extended.push_back(parent.orig[p]);
        local = extend(parent.graph, phi, lists_for(lists, parent.orig));
    }

    out.coloring = local;
    out.trace.coloring = local;
    return out;
}

ConstructiveResult list_color_thm3(const Graph& g, const ListAssignment& lists)
{
    return list_color(g, lists, Theorem::Thm3);
}

ConstructiveResult list_color_thm4(const Graph& g, const ListAssignment& lists)
{
    return list_color(g, lists, Theorem::Thm4);
}

ConstructiveResult list_color_thm5(const Graph& g, const ListAssignment& lists)
{
    return list_color(g, lists, Theorem::Thm5);
}

ListAssignment restrict_lists(const Graph& g, const std::vector<Vertex>& s, const Coloring& phi,
                              const ListAssignment& lists)
{
    const int n = g.order();
    if (static_cast<int>(phi.size()) != n || static_cast<int>(lists.size()) != n)
        throw InvalidPartial("coloring or lists do not cover the graph");
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex a : s) {
        if (a < 0 || a >= n) throw InvalidPartial("vertex out of range");
        in_s[a] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if ((phi[v] == kUncolored) != static_cast<bool>(in_s[v]))
            throw InvalidPartial("phi must color exactly the vertices outside s");

    ListAssignment out;
    for (Vertex a : s) {
        std::vector<Color> drop;
        const auto& la = lists[a];
        auto in_list = [&](Color c) { return std::binary_search(la.begin(), la.end(), c); };
        for (Vertex u : g.neighbors(a)) {
            if (in_s[u]) {
                // (4): u is an uncolored neighbor whose own neighborhood must be rainbow.
                if (g.degree(u) <= 3)
                    for (Vertex q : g.neighbors(u))
                        if (q != a && !in_s[q]) drop.push_back(phi[q]);
                continue;
            }
            drop.push_back(phi[u]); // (1)
            std::vector<Vertex> outside;
            for (Vertex q : g.neighbors(u))
                if (!in_s[q]) outside.push_back(q);
            if (outside.size() == 1) {
                drop.push_back(phi[outside[0]]); // (2)
            } else if (outside.size() >= 2) {
                std::vector<Color> seen;
                for (Vertex q : outside) seen.push_back(phi[q]);
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                std::stable_partition(seen.begin(), seen.end(), [&](Color c) { return !in_list(c); });
                for (std::size_t i = 0; i < std::min<std::size_t>(2, seen.size()); ++i) drop.push_back(seen[i]); // (3)
            }
            if (g.degree(u) == 2)
                for (Vertex q : g.neighbors(u))
                    if (q != a && !in_s[q]) drop.push_back(phi[q]); // (4), common colored 2-neighbor
        }
        std::vector<Color> kept;
        for (Color c : la)
            if (std::find(drop.begin(), drop.end(), c) == drop.end()) kept.push_back(c);
        out.push_back(std::move(kept));
    }
    return out;
}

Coloring recolor_claim1(const Graph& h, const Coloring& phi, const ListAssignment& lists, const ConfigMatch& context)
{
    Vertex x, y, z, y1, y2, z1;
    try {
        x = context.at("x");
        y = context.at("y");
        z = context.at("z");
        y1 = context.at("y1");
        y2 = context.at("y2");
        z1 = context.at("z1");
    } catch (const std::out_of_range&) {
        throw InvalidSpec("claim context lacks the labels x, y, z, y1, y2, z1");
    }
    const int n = h.order();
    for (Vertex v : {x, y, z, y1, y2, z1})
        if (v < 0 || v >= n) throw InvalidSpec("claim context vertex out of range");
    if (static_cast<int>(phi.size()) != n || static_cast<int>(lists.size()) != n)
        throw InvalidSpec("coloring or lists do not cover the graph");
    const bool shape = h.has_edge(x, y) && h.has_edge(x, z) && h.degree(x) == 2 && h.degree(y) == 3 &&
                       h.has_edge(y, y1) && h.has_edge(y, y2) && y1 != y2 && h.degree(y1) == 2 &&
                       h.degree(y2) == 2 && h.degree(z) == 3 && h.has_edge(z, z1) && h.degree(z1) == 2 && z1 != x;
    if (!shape) throw InvalidSpec("claim context does not match the C6 local structure");

    Coloring partial = phi;
    for (Vertex v : {x, y, z, y1, y2, z1}) partial[v] = kUncolored;
    ListAssignment domains = lists;
    auto& lx = domains[x];
    lx.erase(std::remove(lx.begin(), lx.end(), phi[x]), lx.end());
    search::Problem p;
    p.graph = &h;
    p.r = 3;
    p.domains = std::move(domains);
    p.fixed = std::move(partial);
    auto res = search::solve(p);
    if (res.status != search::Status::Sat) throw InternalExtensionFailure("x cannot be recolored");
    return res.coloring;
}

} // namespace dyncol
