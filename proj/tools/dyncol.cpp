// dyncol: command-line front end. Reports are JSON on stdout.
//
// Exit codes: 0 success, 1 negative outcome (Unsat, NotFound, invalid,
// not choosable, deficit, inconsistency), 2 usage or input error,
// 3 search budget or enumeration threshold exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dyncol/configurations.hpp"
#include "dyncol/constructive.hpp"
#include "dyncol/discharging.hpp"
#include "dyncol/errors.hpp"
#include "dyncol/generators.hpp"
#include "dyncol/graph_io.hpp"
#include "dyncol/json_io.hpp"
#include "dyncol/mad.hpp"
#include "dyncol/solver.hpp"

using namespace dyncol;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct UsageError : Error {
    using Error::Error;
};

Json read_json_file(const std::string& path)
{
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

Theorem theorem_of(int t)
{
    if (t < 3 || t > 5) throw UsageError("--theorem must be 3, 4 or 5");
    return static_cast<Theorem>(t);
}

bool ci_mode()
{
    const char* v = std::getenv("DYNCOL_CI");
    return v && std::string(v) != "" && std::string(v) != "0";
}

void require_seed(const std::optional<std::uint64_t>& seed)
{
    if (!seed && ci_mode()) throw UsageError("DYNCOL_CI is set: randomized commands need --seed");
}

struct Options {
    std::string file = "-";
    int r = 3;
    int theorem = 0;
    int k = 0;
    int threads = 1;
    std::uint64_t node_limit = 0;
    std::string lists_file, coloring_file, f_file, certificate_file, bound;
    bool exact = false;
    int sample = 0;
    std::optional<std::uint64_t> seed;
    // gen
    std::string name, format = "graph6";
    int n = 10, ell = 3, core = 6, min_degree = 3, max_degree = 3, max_subdivisions = 1;
    std::string gen_bound = "18/7";
};

class Runner {
public:
    Runner(std::string command, const Options& o) : command_(std::move(command)), o_(o) {}

    int run()
    {
        const auto start = std::chrono::steady_clock::now();
        int code = kOk;
        Json out;
        try {
            code = dispatch(out);
        } catch (const UsageError& e) {
            return fail(kUsage, "usage", e.what());
        } catch (const ThresholdExceeded& e) {
            return fail(kBudget, "threshold_exceeded", e.what());
        } catch (const InternalExtensionFailure& e) {
            return fail(kNegative, "internal_failure", e.what());
        } catch (const Error& e) {
            return fail(kUsage, "input_error", e.what());
        } catch (const std::invalid_argument& e) {
            return fail(kUsage, "input_error", e.what());
        }
        if (raw_) return code;
        Json report = {{"command", command_}};
        if (graph_) report["graph"] = {{"order", graph_->order()}, {"size", graph_->size()}};
        for (auto& [key, value] : out.items()) report[key] = value;
        report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << report.dump() << "\n";
        return code;
    }

private:
    int fail(int code, const char* status, const std::string& message)
    {
        Json err = {{"command", command_}, {"status", status}, {"error", message}};
        std::cout << err.dump() << "\n";
        std::cerr << "dyncol " << command_ << ": " << message << "\n";
        return code;
    }

    const Graph& graph()
    {
        if (!graph_) graph_ = parse_graph(read_text(o_.file));
        return *graph_;
    }

    ListAssignment lists_option()
    {
        const Graph& g = graph();
        if (!o_.lists_file.empty()) return lists_from_json(read_json_file(o_.lists_file), g.order());
        if (o_.k > 0) {
            std::vector<Color> all(static_cast<std::size_t>(o_.k));
            std::iota(all.begin(), all.end(), 0);
            return ListAssignment(static_cast<std::size_t>(g.order()), all);
        }
        throw UsageError("give --lists FILE or --k K");
    }

    int dispatch(Json& out)
    {
        if (command_ == "mad") return cmd_mad(out);
        if (command_ == "chi") return cmd_chi(out);
        if (command_ == "color") return cmd_color(out);
        if (command_ == "check") return cmd_check(out);
        if (command_ == "choosable") return cmd_choosable(out);
        if (command_ == "find-config") return cmd_find_config(out);
        if (command_ == "discharge") return cmd_discharge(out);
        if (command_ == "certify") return cmd_certify(out);
        if (command_ == "gen") return cmd_gen();
        throw UsageError("unknown command " + command_);
    }

    int cmd_mad(Json& out)
    {
        const Graph& g = graph();
        auto m = mad_exact(g);
        out["mad"] = to_json(m.mad);
        out["maximizer"] = m.maximizer;
        return kOk;
    }

    int cmd_chi(Json& out)
    {
        const Graph& g = graph();
        auto res = chi_r_dynamic(g, o_.r, {o_.node_limit, o_.threads});
        out["r"] = o_.r;
        out["nodes"] = res.nodes;
        if (res.status == ChiStatus::BudgetExceeded) {
            out["status"] = "budget_exceeded";
            out["lower"] = res.lower;
            out["upper"] = res.upper;
            out["witness"] = coloring_to_json(res.witness);
            return kBudget;
        }
        out["chi_rd"] = res.value();
        out["witness"] = coloring_to_json(res.witness);
        return kOk;
    }

    int cmd_color(Json& out)
    {
        const Graph& g = graph();
        auto lists = lists_option();
        if (o_.exact == (o_.theorem != 0)) throw UsageError("give exactly one of --exact and --theorem");
        if (o_.exact) {
            auto res = color_with_lists(g, o_.r, lists, {o_.node_limit, o_.threads});
            switch (res.status) {
            case ListStatus::Sat:
                out["status"] = "sat";
                out["coloring"] = coloring_to_json(res.coloring);
                return kOk;
            case ListStatus::Unsat: out["status"] = "unsat"; return kNegative;
            case ListStatus::BudgetExceeded: out["status"] = "budget_exceeded"; return kBudget;
            }
        }
        if (o_.r != 3) throw UsageError("--theorem colorings are 3-dynamic; use -r 3");
        auto res = list_color(g, lists, theorem_of(o_.theorem));
        out["status"] = "sat";
        out["coloring"] = coloring_to_json(res.coloring);
        out["trace"] = to_json(res.trace);
        return kOk;
    }

    int cmd_check(Json& out)
    {
        const Graph& g = graph();
        if (o_.coloring_file.empty()) throw UsageError("--coloring is required");
        Coloring phi = coloring_from_json(read_json_file(o_.coloring_file), g.order());
        std::optional<ListAssignment> lists;
        if (!o_.lists_file.empty()) lists = lists_from_json(read_json_file(o_.lists_file), g.order());
        auto rep = is_valid_r_dynamic(g, o_.r, phi, lists ? &*lists : nullptr);
        out = to_json(rep);
        return rep.valid ? kOk : kNegative;
    }

    int cmd_choosable(Json& out)
    {
        const Graph& g = graph();
        if (o_.f_file.empty()) throw UsageError("--f is required");
        DemandFunction f = demand_from_json(read_json_file(o_.f_file), g.order());
        const int modes = int(o_.exact) + int(o_.sample > 0) + int(!o_.certificate_file.empty());
        if (modes != 1) throw UsageError("give exactly one of --exact, --sample N, --certificate FILE");
        if (o_.exact) {
            auto res = is_f_choosable_exact(g, f);
            out["choosable"] = res.choosable;
            out["assignments"] = res.assignments;
            if (res.counterexample) out["counterexample"] = lists_to_json(*res.counterexample);
            return res.choosable ? kOk : kNegative;
        }
        if (o_.sample > 0) {
            require_seed(o_.seed);
            auto res = choosability_sample(g, f, o_.sample, o_.seed.value_or(0));
            out["counterexample_found"] = res.counterexample_found;
            out["trials"] = res.trials_run;
            if (res.counterexample) out["counterexample"] = lists_to_json(*res.counterexample);
            return res.counterexample_found ? kNegative : kOk;
        }
        auto cert = certificate_from_json(read_json_file(o_.certificate_file));
        auto res = verify_greedy_certificate(g, f, cert);
        out["certificate_ok"] = res.ok;
        if (res.failing_vertex) out["failing_vertex"] = *res.failing_vertex;
        return res.ok ? kOk : kNegative;
    }

    int cmd_find_config(Json& out)
    {
        const Graph& g = graph();
        auto m = find_config(g, theorem_of(o_.theorem));
        out["status"] = m ? "found" : "not_found";
        out["config"] = m ? to_json(*m) : Json(nullptr);
        return m ? kOk : kNegative;
    }

    int cmd_discharge(Json& out)
    {
        const Graph& g = graph();
        Theorem t = theorem_of(o_.theorem);
        Rational bound = o_.bound.empty() ? theorem_bound(t) : Rational::parse(o_.bound);
        auto ledger = discharge(g, t);
        auto check = verify_discharge(ledger, bound);
        out["bound"] = to_json(bound);
        out["ledger"] = to_json(ledger);
        out["check"] = to_json(check);
        return check.all_at_least_bound ? kOk : kNegative;
    }

    int cmd_certify(Json& out)
    {
        const Graph& g = graph();
        auto rep = certify_contradiction(g, theorem_of(o_.theorem));
        out["bound"] = to_json(theorem_bound(theorem_of(o_.theorem)));
        out["report"] = to_json(rep);
        return rep.consistent ? kOk : kNegative;
    }

    int cmd_gen()
    {
        raw_ = true;
        Graph g;
        const std::string& nm = o_.name;
        if (nm == "fig1") g = fig1_graph();
        else if (nm == "petersen") g = petersen();
        else if (nm == "petersen-minus-edge") g = petersen_minus_edge();
        else if (nm == "double-petersen") g = double_petersen_path(o_.ell);
        else if (nm == "h1") g = h1_graph();
        else if (nm == "h2") g = h2_graph();
        else if (nm == "h3") g = h3_graph();
        else if (nm == "cycle") g = cycle_graph(o_.n);
        else if (nm == "path") g = path_graph(o_.n);
        else if (nm == "complete") g = complete_graph(o_.n);
        else if (nm == "random" || nm == "random-subdivided" || nm == "random-core") {
            require_seed(o_.seed);
            const std::uint64_t seed = o_.seed.value_or(0);
            if (nm == "random") g = random_graph_mad_below(o_.n, Rational::parse(o_.gen_bound), seed);
            else if (nm == "random-subdivided")
                g = random_subdivided_graph_mad_below(o_.n, Rational::parse(o_.gen_bound), seed);
            else g = random_core_graph(o_.core, o_.min_degree, o_.max_degree, o_.max_subdivisions, seed);
        } else {
            throw UsageError("unknown graph name " + nm);
        }
        if (o_.format == "graph6") std::cout << to_graph6(g) << "\n";
        else if (o_.format == "edges") std::cout << to_edge_list(g);
        else throw UsageError("--format must be graph6 or edges");
        return kOk;
    }

    std::string command_;
    const Options& o_;
    std::optional<Graph> graph_;
    bool raw_ = false;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"r-dynamic list coloring toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "graph file (graph6 or edge list), - for stdin"); };
    auto add_theorem = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--theorem", o.theorem, "3, 4 or 5");
        if (required) opt->required();
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--node-limit", o.node_limit, "search nodes per query, 0 = unlimited");
        sub->add_option("--threads", o.threads, "OpenMP threads for the search")->check(CLI::PositiveNumber);
    };

    auto* mad = app.add_subcommand("mad", "exact maximum average degree");
    add_file(mad);

    auto* chi = app.add_subcommand("chi", "r-dynamic chromatic number");
    add_file(chi);
    chi->add_option("-r", o.r, "dynamic parameter")->check(CLI::PositiveNumber);
    add_search(chi);

    auto* color = app.add_subcommand("color", "r-dynamic list coloring");
    add_file(color);
    color->add_option("-r", o.r, "dynamic parameter")->check(CLI::PositiveNumber);
    color->add_option("--lists", o.lists_file, "JSON list assignment");
    color->add_option("--k", o.k, "identical lists {0..k-1}")->check(CLI::PositiveNumber);
    add_theorem(color, false);
    color->add_flag("--exact", o.exact, "exhaustive search instead of the reduction algorithm");
    add_search(color);

    auto* check = app.add_subcommand("check", "validate a coloring");
    add_file(check);
    check->add_option("--coloring", o.coloring_file, "JSON coloring")->required();
    check->add_option("--lists", o.lists_file, "JSON list assignment");
    check->add_option("-r", o.r, "dynamic parameter")->check(CLI::PositiveNumber);

    auto* choosable = app.add_subcommand("choosable", "f-choosability at r = 1");
    add_file(choosable);
    choosable->add_option("--f", o.f_file, "JSON demand function")->required();
    choosable->add_flag("--exact", o.exact, "enumerate all assignments");
    choosable->add_option("--sample", o.sample, "random trials")->check(CLI::PositiveNumber);
    choosable->add_option("--seed", o.seed, "random seed");
    choosable->add_option("--certificate", o.certificate_file, "JSON greedy certificate");

    auto* find = app.add_subcommand("find-config", "first reducible configuration");
    add_file(find);
    add_theorem(find, true);

    auto* dis = app.add_subcommand("discharge", "apply a discharging rule set");
    add_file(dis);
    add_theorem(dis, true);
    dis->add_option("--bound", o.bound, "charge bound p/q (default: the rule set's)");

    auto* certify = app.add_subcommand("certify", "mad, configuration and charge consistency");
    add_file(certify);
    add_theorem(certify, true);

    auto* gen = app.add_subcommand("gen", "named and random graphs");
    gen->add_option("name", o.name,
                    "fig1 petersen petersen-minus-edge double-petersen h1 h2 h3 cycle path complete "
                    "random random-subdivided random-core")
        ->required();
    gen->add_option("--format", o.format, "graph6 or edges");
    gen->add_option("--n", o.n, "vertex count");
    gen->add_option("--ell", o.ell, "joining path length");
    gen->add_option("--bound", o.gen_bound, "strict mad bound p/q for random graphs");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--core", o.core, "core vertices for random-core");
    gen->add_option("--min-degree", o.min_degree, "core degree range for random-core");
    gen->add_option("--max-degree", o.max_degree, "core degree range for random-core");
    gen->add_option("--max-subdivisions", o.max_subdivisions, "subdivisions per core edge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    return Runner(app.get_subcommands().front()->get_name(), o).run();
}
