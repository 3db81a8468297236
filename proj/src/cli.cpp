#include "dbcover/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbcover/report.hpp"

namespace dbcover::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string braid_text;
    std::vector<std::string> family;
    std::string graph_path;
    bool json = false;
    bool full = false;
    int k_max = 2;
    Int budget = 1'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--braid", o.braid_text, "braid word in numeric tokens, e.g. \"1 2^-2 1 2^-4\"");
    cmd->add_option("--family", o.family,
                    "family input: even|odd followed by integer parameters")
        ->expected(-1);
    cmd->add_option("--graph", o.graph_path, "black-graph JSON file");
    cmd->add_flag("--json", o.json, "machine-readable report");
    cmd->add_flag("--full", o.full, "never elide the d-table");
    cmd->add_option("--kmax", o.k_max, "conjugation search depth")->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget", o.budget, "class-count budget")->check(CLI::PositiveNumber);
}

struct ResolvedInput {
    bool is_braid = false;
    braid::BraidWord word;
    std::optional<bounds::FamilyInput> family;
    graph::BlackGraph graph;
};

ResolvedInput resolve_input(const CommonOpts& o) {
    const int given = (!o.braid_text.empty() ? 1 : 0) + (!o.family.empty() ? 1 : 0) +
                      (!o.graph_path.empty() ? 1 : 0);
    if (given != 1)
        throw CLI::ValidationError("input", "give exactly one of --braid, --family, --graph");
    ResolvedInput in;
    if (!o.braid_text.empty()) {
        in.is_braid = true;
        in.word = braid::parse_braid(o.braid_text);
    } else if (!o.family.empty()) {
        in.is_braid = true;
        bounds::FamilyInput fam;
        if (o.family.front() == "even")
            fam.kind = braid::Family::Even;
        else if (o.family.front() == "odd")
            fam.kind = braid::Family::Odd;
        else
            throw CLI::ValidationError("--family", "kind must be 'even' or 'odd'");
        for (std::size_t i = 1; i < o.family.size(); ++i) {
            try {
                fam.params.push_back(std::stoll(o.family[i]));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--family", "parameters must be integers");
            }
        }
        in.word = braid::family_braid(fam.kind, fam.params);
        in.family = std::move(fam);
    } else {
        in.graph = graph::load_graph_file(o.graph_path);
    }
    return in;
}

report::Report analyze_input(const ResolvedInput& in, const CommonOpts& o) {
    report::AnalyzeOptions opts;
    opts.bounds.k_max = o.k_max;
    opts.bounds.budget = o.budget;
    opts.full_table = o.full;
    if (in.is_braid) return report::analyze(in.word, in.family, opts);
    return report::analyze(in.graph, opts);
}

int emit(const report::Report& rep, const CommonOpts& o,
         const std::vector<std::string>& sections, std::ostream& out) {
    if (o.json)
        out << report::to_json(rep) << "\n";
    else
        out << report::render(rep, sections);
    return kExitOk;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> run_checks(const ResolvedInput& in, const CommonOpts& o) {
    std::vector<CheckResult> results;
    const graph::BlackGraph g =
        in.is_braid ? graph::black_graph_of_braid(in.word) : in.graph;

    const auto tree = graph::spanning_tree(g);
    const auto circuits = graph::circuit_matrix(g, tree);
    const goeritz::GoeritzForm f = goeritz::gram_matrix(circuits);

    const IntMatrix gram = -(circuits.rows * circuits.rows.transpose());
    results.push_back({"gram identity Q = -N N^T", f.q == gram, ""});
    results.push_back({"negative definiteness", goeritz::is_negative_definite(f.q), ""});

    const spinc::HomologyGroup h = spinc::homology_group(f);
    const Int classes = h.order();
    std::string detail = std::to_string(classes) + " classes";
    if (classes > o.budget)
        throw dinv::BudgetExceeded("class count " + std::to_string(classes) +
                                   " exceeds budget " + std::to_string(o.budget));
    const auto all = spinc::enumerate_classes(f, h);
    results.push_back({"class count equals |det Q|",
                       static_cast<Int>(all.size()) == (f.det_q < 0 ? -f.det_q : f.det_q),
                       detail});

    bool oracle_ok = true;
    for (const spinc::SpincClass& c : all) {
        const Rational enumerated = dinv::max_kappa_norm_sq(f, c).value;
        const Rational boxed = dinv::brute_force_max(f, c, dinv::certified_radius(f, c));
        if (enumerated != boxed) {
            oracle_ok = false;
            break;
        }
    }
    results.push_back({"oracle equivalence (enumeration vs certified box)", oracle_ok, detail});

    bool conj_ok = true;
    const dinv::DInvariantTable tbl = dinv::d_table(f, h, o.budget);
    for (const spinc::SpincClass& c : all) {
        const spinc::SpincClass neg = spinc::class_of(f, h, (-c.representative).eval());
        if (tbl.at(c.id) != tbl.at(neg.id)) {
            conj_ok = false;
            break;
        }
    }
    results.push_back({"conjugation symmetry of d", conj_ok, ""});

    if (in.is_braid) {
        const openbook::CrossCheck cc = openbook::crosscheck_h1(in.word);
        std::string factors = "open book:";
        for (Int d : cc.open_book_factors) factors += " " + std::to_string(d);
        factors += ", cycle form:";
        for (Int d : cc.cycle_form_factors) factors += " " + std::to_string(d);
        results.push_back({"H1 cross-check (open book vs cycle form)", cc.consistent, factors});
    }
    return results;
}

int cmd_check(const ResolvedInput& in, const CommonOpts& o, std::ostream& out) {
    const std::vector<CheckResult> results = run_checks(in, o);
    bool all_pass = true;
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const CheckResult& r : results) {
            j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.detail.empty()) out << " (" << r.detail << ")";
            out << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"correction terms, genus and norm bounds, and layered "
                 "triangulations for double branched covers of alternating "
                 "3-braid closures"};
    app.name("dbcover");
    app.require_subcommand(1);

    CommonOpts dinv_o, norms_o, cx_o, layer_o, check_o;
    CLI::App* c_dinv = app.add_subcommand("dinv", "d-invariant table");
    CLI::App* c_norms = app.add_subcommand("norms", "genus bounds and Z2-norms");
    CLI::App* c_cx = app.add_subcommand("complexity", "triangulation complexity interval");
    CLI::App* c_layer = app.add_subcommand("layer", "layered-triangulation plan");
    CLI::App* c_check = app.add_subcommand("check", "self-checks on the given input");
    add_common(c_dinv, dinv_o);
    add_common(c_norms, norms_o);
    add_common(c_cx, cx_o);
    add_common(c_layer, layer_o);
    add_common(c_check, check_o);

    std::vector<const char*> argv;
    argv.push_back("dbcover");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_dinv->parsed()) {
            const ResolvedInput in = resolve_input(dinv_o);
            return emit(analyze_input(in, dinv_o), dinv_o, {"form", "dinv"}, out);
        }
        if (c_norms->parsed()) {
            const ResolvedInput in = resolve_input(norms_o);
            return emit(analyze_input(in, norms_o), norms_o, {"form", "bounds"}, out);
        }
        if (c_cx->parsed()) {
            const ResolvedInput in = resolve_input(cx_o);
            return emit(analyze_input(in, cx_o), cx_o, {"bounds", "complexity"}, out);
        }
        if (c_layer->parsed()) {
            const ResolvedInput in = resolve_input(layer_o);
            if (!in.is_braid)
                throw CLI::ValidationError("layer", "needs a braid or family input");
            return emit(analyze_input(in, layer_o), layer_o, {"layer"}, out);
        }
        if (c_check->parsed()) {
            const ResolvedInput in = resolve_input(check_o);
            return cmd_check(in, check_o, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const dinv::BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const braid::ParseError& e) {
        err << "braid parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const graph::GraphError& e) {
        err << "graph error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace dbcover::cli
