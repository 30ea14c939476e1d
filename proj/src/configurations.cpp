#include "dyncol/configurations.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace dyncol {

namespace {

struct KindName {
    ConfigKind kind;
    const char* name;
};

constexpr std::array<KindName, 16> kNames{{
    {ConfigKind::C1, "C1"},
    {ConfigKind::C2, "C2"},
    {ConfigKind::L1_3, "L1-3"},
    {ConfigKind::L1_4, "L1-4"},
    {ConfigKind::Fig4a, "Fig4a"},
    {ConfigKind::Fig4b, "Fig4b"},
    {ConfigKind::C3, "C3"},
    {ConfigKind::C4i, "C4(i)"},
    {ConfigKind::C4ii, "C4(ii)"},
    {ConfigKind::C5, "C5"},
    {ConfigKind::C6, "C6"},
    {ConfigKind::KVertex7, "kvertex-7"},
    {ConfigKind::AdjacentW1, "adjacent-W1"},
    {ConfigKind::ThreeW1, "three-W1"},
    {ConfigKind::LowVertex8, "low-vertex-8"},
    {ConfigKind::KVertex8, "kvertex-8"},
}};

using Labels = std::vector<const char*>;

// Local structure queries shared by the matchers.
class View {
public:
    explicit View(const Graph& g) : g_(g), w_(classify_w(g)) {}

    const Graph& g() const { return g_; }
    int deg(Vertex v) const { return g_.degree(v); }
    bool adj(Vertex a, Vertex b) const { return g_.has_edge(a, b); }
    WClass w(Vertex v) const { return w_[v]; }

    std::vector<Vertex> two_nbrs(Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex u : g_.neighbors(v))
            if (g_.degree(u) == 2) out.push_back(u);
        return out;
    }

    // The neighbor of 2-vertex t other than from.
    Vertex other(Vertex t, Vertex from) const
    {
        auto nb = g_.neighbors(t);
        return nb[0] == from ? nb[1] : nb[0];
    }

private:
    const Graph& g_;
    std::vector<WClass> w_;
};

bool distinct(std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

ConfigMatch make(ConfigKind kind, const Labels& labels, const std::vector<Vertex>& tuple)
{
    ConfigMatch m;
    m.kind = kind;
    for (std::size_t i = 0; i < labels.size(); ++i) m.witness.emplace_back(labels[i], tuple[i]);
    return m;
}

void remove_vertices(ConfigMatch& m, std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    m.action.type = ReductionAction::Type::RemoveVertices;
    m.action.vertices = std::move(vs);
}

void remove_edge(ConfigMatch& m, Vertex a, Vertex b)
{
    m.action.type = ReductionAction::Type::RemoveEdge;
    m.action.edge = {a, b};
}

void set_recolor(ConfigMatch& m, std::vector<Vertex> vs)
{
    std::sort(vs.begin(), vs.end());
    m.recolor = std::move(vs);
}

using Sink = std::function<void(ConfigMatch)>;

// Low-degree items shared by all three proofs.

void enum_c1(const View& v, const Sink& out)
{
    for (Vertex x = 0; x < v.g().order(); ++x) {
        if (v.deg(x) > 1) continue;
        auto m = make(ConfigKind::C1, {"v"}, {x});
        remove_vertices(m, {x});
        out(std::move(m));
    }
}

void enum_c2(const View& v, const Sink& out)
{
    for (auto [x, y] : v.g().edges()) {
        if (v.deg(x) != 2 || v.deg(y) != 2) continue;
        auto m = make(ConfigKind::C2, {"x", "y"}, {x, y});
        remove_vertices(m, {x, y});
        out(std::move(m));
    }
}

void enum_l1_3(const View& v, const Sink& out)
{
    for (auto [x, y] : v.g().edges())
        for (Vertex w : v.g().neighbors(x)) {
            if (v.deg(w) != 2 || !v.adj(w, y)) continue;
            auto m = make(ConfigKind::L1_3, {"x", "y", "w"}, {x, y, w});
            remove_vertices(m, {w});
            out(std::move(m));
        }
}

void enum_l1_4(const View& v, const Sink& out)
{
    for (Vertex x = 0; x < v.g().order(); ++x) {
        if (v.w(x) != WClass::W2 && v.w(x) != WClass::W3) continue;
        auto twos = v.two_nbrs(x);
        for (Vertex w1 : twos)
            for (Vertex w2 : twos) {
                if (w1 == w2) continue;
                Vertex y = v.other(w1, x);
                if (y == x || v.other(w2, x) != y) continue;
                auto m = make(ConfigKind::L1_4, {"x", "w1", "w2", "y"}, {x, w1, w2, y});
                remove_vertices(m, {w1});
                out(std::move(m));
            }
    }
}

// No edge between labeled vertices other than the pattern's own, except
// between two hollow vertices.
bool induced_ok(const View& v, const std::vector<Vertex>& t, const std::vector<Edge>& pattern,
                const std::vector<char>& hollow)
{
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (!v.adj(t[i], t[j])) continue;
            bool in_pattern = std::any_of(pattern.begin(), pattern.end(), [&](const Edge& e) {
                return (e.first == static_cast<int>(i) && e.second == static_cast<int>(j)) ||
                       (e.first == static_cast<int>(j) && e.second == static_cast<int>(i));
            });
            if (!in_pattern && !(hollow[i] && hollow[j])) return false;
        }
    return true;
}

// 5-cycle pattern: v1..v5 with v1, v2 solid 3-vertices, v3, v5, w solid
// 2-vertices, v4 and u hollow; w hangs off v1 and leads to u. The third
// neighbor of v2 is unlabeled and unconstrained.
void enum_fig4a(const View& v, const Sink& out)
{
    static const Labels labels{"v1", "v2", "v3", "v4", "v5", "w", "u"};
    static const std::vector<Edge> pattern{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}};
    static const std::vector<char> hollow{0, 0, 0, 1, 0, 0, 1};
    const Graph& g = v.g();
    for (Vertex v1 = 0; v1 < g.order(); ++v1) {
        if (v.deg(v1) != 3) continue;
        for (Vertex v2 : g.neighbors(v1)) {
            if (v.deg(v2) != 3) continue;
            for (Vertex v3 : g.neighbors(v2)) {
                if (v3 == v1 || v.deg(v3) != 2) continue;
                Vertex v4 = v.other(v3, v2);
                if (v.deg(v4) < 3) continue;
                for (Vertex v5 : g.neighbors(v1)) {
                    if (v5 == v2 || v.deg(v5) != 2 || v.other(v5, v1) != v4) continue;
                    for (Vertex w : g.neighbors(v1)) {
                        if (w == v2 || w == v5 || v.deg(w) != 2) continue;
                        Vertex u = v.other(w, v1);
                        if (v.deg(u) < 3) continue;
                        std::vector<Vertex> t{v1, v2, v3, v4, v5, w, u};
                        if (!distinct(t) || !induced_ok(v, t, pattern, hollow)) continue;
                        auto m = make(ConfigKind::Fig4a, labels, t);
                        remove_vertices(m, {v1, v3, v5, w});
                        set_recolor(m, {v2});
                        out(std::move(m));
                    }
                }
            }
        }
    }
}

// 6-cycle pattern: v1..v6 with v1, v2, v3 solid 3-vertices, v4, v6 solid
// 2-vertices, v5 hollow; each v_i (i <= 3) has a pendant 2-vertex w_i leading
// to a hollow u_i.
void enum_fig4b(const View& v, const Sink& out)
{
    static const Labels labels{"v1", "v2", "v3", "v4", "v5", "v6", "w1", "w2", "w3", "u1", "u2", "u3"};
    static const std::vector<Edge> pattern{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                           {0, 6}, {1, 7}, {2, 8}, {6, 9}, {7, 10}, {8, 11}};
    static const std::vector<char> hollow{0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1};
    const Graph& g = v.g();
    for (Vertex v1 = 0; v1 < g.order(); ++v1) {
        if (v.deg(v1) != 3) continue;
        for (Vertex v2 : g.neighbors(v1)) {
            if (v.deg(v2) != 3) continue;
            for (Vertex v3 : g.neighbors(v2)) {
                if (v3 == v1 || v.deg(v3) != 3) continue;
                for (Vertex w2 : g.neighbors(v2)) {
                    if (w2 == v1 || w2 == v3 || v.deg(w2) != 2) continue;
                    for (Vertex v6 : g.neighbors(v1)) {
                        if (v6 == v2 || v.deg(v6) != 2) continue;
                        Vertex v5 = v.other(v6, v1);
                        if (v.deg(v5) < 3) continue;
                        for (Vertex w1 : g.neighbors(v1)) {
                            if (w1 == v2 || w1 == v6 || v.deg(w1) != 2) continue;
                            for (Vertex v4 : g.neighbors(v3)) {
                                if (v4 == v2 || v.deg(v4) != 2 || v.other(v4, v3) != v5) continue;
                                for (Vertex w3 : g.neighbors(v3)) {
                                    if (w3 == v2 || w3 == v4 || v.deg(w3) != 2) continue;
                                    Vertex u1 = v.other(w1, v1);
                                    Vertex u2 = v.other(w2, v2);
                                    Vertex u3 = v.other(w3, v3);
                                    if (v.deg(u1) < 3 || v.deg(u2) < 3 || v.deg(u3) < 3) continue;
                                    std::vector<Vertex> t{v1, v2, v3, v4, v5, v6, w1, w2, w3, u1, u2, u3};
                                    if (!distinct(t) || !induced_ok(v, t, pattern, hollow)) continue;
                                    auto m = make(ConfigKind::Fig4b, labels, t);
                                    remove_vertices(m, {v1, v2, v3, v4, v6, w1, w2, w3});
                                    out(std::move(m));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

void enum_c3(const View& v, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.w(x) != WClass::W2) continue;
        for (Vertex y : g.neighbors(x)) {
            if (v.w(y) != WClass::W2) continue;
            auto tx = v.two_nbrs(x);
            auto ty = v.two_nbrs(y);
            for (int sx = 0; sx < 2; ++sx)
                for (int sy = 0; sy < 2; ++sy) {
                    Vertex v1 = tx[sx], v2 = tx[1 - sx], v3 = ty[sy], v4 = ty[1 - sy];
                    std::vector<Vertex> t{x, y, v1, v2, v3, v4, v.other(v1, x), v.other(v2, x), v.other(v3, y),
                                          v.other(v4, y)};
                    auto m = make(ConfigKind::C3, {"x", "y", "v1", "v2", "v3", "v4", "u1", "u2", "u3", "u4"}, t);
                    remove_vertices(m, {x, y, v1, v2, v3, v4});
                    out(std::move(m));
                }
        }
    }
}

void enum_c4(const View& v, bool case_i, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.w(x) != WClass::W3) continue;
        auto t = v.two_nbrs(x);
        for (int i = 0; i < 3; ++i) {
            Vertex v1 = t[i], v2 = t[(i + 1) % 3], v3 = t[(i + 2) % 3];
            if (v2 > v3) std::swap(v2, v3);
            Vertex u1 = v.other(v1, x);
            if (case_i) {
                if (v.deg(u1) < 4) continue;
                auto m = make(ConfigKind::C4i, {"x", "v1", "v2", "v3", "u1"}, {x, v1, v2, v3, u1});
                remove_vertices(m, {x, v1, v2, v3});
                out(std::move(m));
            } else {
                if (v.deg(u1) != 3) continue;
                for (Vertex w : g.neighbors(u1)) {
                    if (w == v1 || v.deg(w) != 2) continue;
                    auto m = make(ConfigKind::C4ii, {"x", "v1", "u1", "w", "v2", "v3"}, {x, v1, u1, w, v2, v3});
                    remove_vertices(m, {x, v1, u1, w});
                    // v2 and v3 keep independent colors in G - S but must differ at x.
                    set_recolor(m, {v2, v3});
                    out(std::move(m));
                }
            }
        }
    }
}

void enum_c5(const View& v, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.w(x) != WClass::W1) continue;
        Vertex w = v.two_nbrs(x).front();
        for (Vertex x1 : g.neighbors(x))
            for (Vertex x2 : g.neighbors(x)) {
                if (x1 == x2 || v.w(x1) != WClass::W2 || v.w(x2) != WClass::W2) continue;
                auto t1 = v.two_nbrs(x1);
                auto t2 = v.two_nbrs(x2);
                std::vector<Vertex> t{x, x1, x2, t1[0], t1[1], t2[0], t2[1], w};
                auto m = make(ConfigKind::C5, {"x", "x1", "x2", "v1", "v2", "v3", "v4", "w"}, t);
                remove_vertices(m, {x, x1, x2, t1[0], t1[1], t2[0], t2[1], w});
                out(std::move(m));
            }
    }
}

void enum_c6(const View& v, const Sink& out)
{
    const Graph& g = v.g();
    static const Labels labels{"x", "y", "z", "u", "v1", "v2", "v3", "y1", "y2", "z1", "z2"};
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.deg(x) != 3) continue;
        for (Vertex v1 : g.neighbors(x)) {
            if (v.deg(v1) != 2) continue;
            Vertex u = v.other(v1, x);
            if (v.w(u) != WClass::W3) continue;
            for (Vertex y : g.neighbors(x)) {
                if (v.w(y) != WClass::W2) continue;
                for (Vertex z : g.neighbors(x)) {
                    if (z == y || z == v1 || v.w(z) != WClass::W1) continue;
                    auto ty = v.two_nbrs(y);
                    Vertex z1 = v.two_nbrs(z).front();
                    Vertex z2 = -1;
                    for (Vertex q : g.neighbors(z))
                        if (q != x && q != z1) z2 = q;
                    auto tu = v.two_nbrs(u);
                    for (Vertex v2 : tu) {
                        if (v2 == v1) continue;
                        Vertex v3 = -1;
                        for (Vertex q : tu)
                            if (q != v1 && q != v2) v3 = q;
                        std::vector<Vertex> t{x, y, z, u, v1, v2, v3, ty[0], ty[1], z1, z2};
                        auto m = make(ConfigKind::C6, labels, t);
                        remove_vertices(m, {v1, v2, u});
                        set_recolor(m, {x, y, z, ty[0], ty[1], z1});
                        out(std::move(m));
                    }
                }
            }
        }
    }
}

// k-vertex with at least k-1 two-neighbors. The 7-list proof deletes the
// edge to the last neighbor (preferably not a 2-vertex), the 8-list proof
// the edge to the first 2-neighbor.
void enum_kvertex(const View& v, ConfigKind kind, int kmin, int kmax, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        int k = v.deg(x);
        if (k < kmin || k > kmax) continue;
        auto twos = v.two_nbrs(x);
        if (static_cast<int>(twos.size()) < k - 1) continue;
        std::vector<Vertex> order = twos;
        for (Vertex q : g.neighbors(x))
            if (v.deg(q) != 2) order.push_back(q);
        Labels labels{"v"};
        static const char* names[] = {"v1", "v2", "v3", "v4", "v5"};
        for (int i = 0; i < k; ++i) labels.push_back(names[i]);
        std::vector<Vertex> t{x};
        t.insert(t.end(), order.begin(), order.end());
        auto m = make(kind, labels, t);
        if (kind == ConfigKind::KVertex7)
            remove_edge(m, x, order.back());
        else
            remove_edge(m, x, order.front());
        std::vector<Vertex> rec{x};
        rec.insert(rec.end(), twos.begin(), twos.end());
        set_recolor(m, rec);
        out(std::move(m));
    }
}

void enum_adjacent_w1(const View& v, const Sink& out)
{
    for (auto [x, y] : v.g().edges()) {
        if (v.w(x) != WClass::W1 || v.w(y) != WClass::W1) continue;
        Vertex xp = v.two_nbrs(x).front();
        Vertex yp = v.two_nbrs(y).front();
        std::vector<Vertex> t{x, y, xp, yp, v.other(xp, x), v.other(yp, y)};
        auto m = make(ConfigKind::AdjacentW1, {"x", "y", "x'", "y'", "w1", "w2"}, t);
        remove_vertices(m, {xp, yp});
        set_recolor(m, {x, y});
        out(std::move(m));
    }
}

void enum_three_w1(const View& v, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.deg(x) != 3) continue;
        auto nb = g.neighbors(x);
        if (!std::all_of(nb.begin(), nb.end(), [&](Vertex q) { return v.w(q) == WClass::W1; })) continue;
        std::vector<Vertex> t{x, nb[0], nb[1], nb[2]};
        for (Vertex q : nb) t.push_back(v.two_nbrs(q).front());
        auto m = make(ConfigKind::ThreeW1, {"x", "x1", "x2", "x3", "x1'", "x2'", "x3'"}, t);
        remove_vertices(m, t);
        out(std::move(m));
    }
}

void enum_low_vertex(const View& v, const Sink& out)
{
    const Graph& g = v.g();
    for (Vertex x = 0; x < g.order(); ++x) {
        if (v.deg(x) > 3) continue;
        for (Vertex y : g.neighbors(x)) {
            if (v.deg(y) != 2) continue;
            auto m = make(ConfigKind::LowVertex8, {"x", "y"}, {x, y});
            remove_edge(m, x, y);
            set_recolor(m, {x, y});
            out(std::move(m));
        }
    }
}

void enumerate(const View& v, ConfigKind kind, const Sink& out)
{
    switch (kind) {
    case ConfigKind::C1: enum_c1(v, out); break;
    case ConfigKind::C2: enum_c2(v, out); break;
    case ConfigKind::L1_3: enum_l1_3(v, out); break;
    case ConfigKind::L1_4: enum_l1_4(v, out); break;
    case ConfigKind::Fig4a: enum_fig4a(v, out); break;
    case ConfigKind::Fig4b: enum_fig4b(v, out); break;
    case ConfigKind::C3: enum_c3(v, out); break;
    case ConfigKind::C4i: enum_c4(v, true, out); break;
    case ConfigKind::C4ii: enum_c4(v, false, out); break;
    case ConfigKind::C5: enum_c5(v, out); break;
    case ConfigKind::C6: enum_c6(v, out); break;
    case ConfigKind::KVertex7: enum_kvertex(v, kind, 3, 4, out); break;
    case ConfigKind::AdjacentW1: enum_adjacent_w1(v, out); break;
    case ConfigKind::ThreeW1: enum_three_w1(v, out); break;
    case ConfigKind::LowVertex8: enum_low_vertex(v, out); break;
    case ConfigKind::KVertex8: enum_kvertex(v, kind, 4, 5, out); break;
    }
}

std::vector<Vertex> tuple_of(const ConfigMatch& m)
{
    std::vector<Vertex> t;
    for (const auto& [label, id] : m.witness) t.push_back(id);
    return t;
}

std::optional<ConfigMatch> first_of(const View& v, ConfigKind kind)
{
    std::optional<ConfigMatch> best;
    std::vector<Vertex> best_tuple;
    enumerate(v, kind, [&](ConfigMatch m) {
        auto t = tuple_of(m);
        if (!best || t < best_tuple) {
            best_tuple = std::move(t);
            best = std::move(m);
        }
    });
    return best;
}

std::optional<ConfigMatch> first_in(const Graph& g, std::initializer_list<ConfigKind> order)
{
    View v(g);
    for (ConfigKind k : order)
        if (auto m = first_of(v, k)) return m;
    return std::nullopt;
}

} // namespace

const char* to_string(ConfigKind k)
{
    for (const auto& e : kNames)
        if (e.kind == k) return e.name;
    return "?";
}

std::optional<ConfigKind> config_kind_from_string(std::string_view s)
{
    for (const auto& e : kNames)
        if (s == e.name) return e.kind;
    return std::nullopt;
}

Vertex ConfigMatch::at(std::string_view label) const
{
    for (const auto& [l, id] : witness)
        if (l == label) return id;
    throw std::out_of_range("witness has no label '" + std::string(label) + "'");
}

std::vector<Vertex> ConfigMatch::extension_set() const
{
    std::vector<Vertex> out = recolor;
    if (action.type == ReductionAction::Type::RemoveVertices)
        out.insert(out.end(), action.vertices.begin(), action.vertices.end());
    else
        out.insert(out.end(), {action.edge.first, action.edge.second});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<ConfigMatch> find_config_thm3(const Graph& g)
{
    using K = ConfigKind;
    return first_in(g, {K::C1, K::C2, K::L1_3, K::L1_4, K::Fig4a, K::Fig4b, K::C3, K::C4i, K::C4ii, K::C5, K::C6});
}

std::optional<ConfigMatch> find_config_thm4(const Graph& g)
{
    using K = ConfigKind;
    return first_in(g, {K::C1, K::C2, K::L1_3, K::L1_4, K::KVertex7, K::AdjacentW1, K::ThreeW1});
}

std::optional<ConfigMatch> find_config_thm5(const Graph& g)
{
    using K = ConfigKind;
    return first_in(g, {K::C1, K::C2, K::L1_3, K::L1_4, K::LowVertex8, K::KVertex8});
}

std::optional<ConfigMatch> find_config(const Graph& g, Theorem t)
{
    switch (t) {
    case Theorem::Thm3: return find_config_thm3(g);
    case Theorem::Thm4: return find_config_thm4(g);
    case Theorem::Thm5: return find_config_thm5(g);
    }
    return std::nullopt;
}

std::optional<ConfigMatch> match_fig4(const Graph& g, Fig4 which)
{
    View v(g);
    return first_of(v, which == Fig4::A ? ConfigKind::Fig4a : ConfigKind::Fig4b);
}

std::vector<ConfigMatch> find_all(const Graph& g, ConfigKind kind)
{
    View v(g);
    std::vector<ConfigMatch> out;
    enumerate(v, kind, [&](ConfigMatch m) { out.push_back(std::move(m)); });
    std::stable_sort(out.begin(), out.end(),
                     [](const ConfigMatch& a, const ConfigMatch& b) { return tuple_of(a) < tuple_of(b); });
    return out;
}

} // namespace dyncol
