#include "dbcover/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace dbcover::report {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("rational needs 'p/q' form");
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json helem_to_json(const HElem& t) { return json(t); }

HElem helem_from_json(const json& j) { return j.get<HElem>(); }

json dentry_to_json(const DEntry& e) {
    return json{{"class", helem_to_json(e.id)}, {"d", rational_to_json(e.d)}};
}

DEntry dentry_from_json(const json& j) {
    return DEntry{helem_from_json(j.at("class")), rational_from_json(j.at("d"))};
}

json bound_list_to_json(const std::vector<std::pair<HElem, Rational>>& v) {
    json out = json::array();
    for (const auto& [t, r] : v)
        out.push_back(json{{"class", helem_to_json(t)}, {"bound", rational_to_json(r)}});
    return out;
}

std::vector<std::pair<HElem, Rational>> bound_list_from_json(const json& j) {
    std::vector<std::pair<HElem, Rational>> out;
    for (const auto& e : j)
        out.emplace_back(helem_from_json(e.at("class")), rational_from_json(e.at("bound")));
    return out;
}

// Designated characteristic vectors for a family input, in the printed order
// kappa0..kappa3.
std::vector<std::pair<std::string, IntRowVector>>
designated_characteristics(const goeritz::GoeritzForm& f, const FamilyInput& fam) {
    const Index b = f.rank;
    std::vector<std::pair<std::string, IntRowVector>> out;
    if (fam.kind == braid::Family::Even) {
        IntVector odd = IntVector::Zero(b), even = IntVector::Zero(b);
        for (Index i = 0; i < b; ++i) (i % 2 == 0 ? odd : even)(i) = 1;
        IntRowVector k0 = IntRowVector::Zero(b);
        IntRowVector k1 = (f.q * odd).transpose();
        IntRowVector k2 = (f.q * even).transpose();
        out.emplace_back("kappa0", k0);
        out.emplace_back("kappa1", k1);
        out.emplace_back("kappa2", k2);
        out.emplace_back("kappa3", k1 + k2);
    } else {
        IntRowVector k0(3);
        k0 << 1, -1, 1;
        auto shift = [&](Index i, Index j) {
            IntVector v = IntVector::Zero(3);
            v(i) = 1;
            v(j) = -1;
            return (k0 + (f.q * v).transpose()).eval();
        };
        out.emplace_back("kappa0", k0);
        out.emplace_back("kappa1", shift(0, 1));
        out.emplace_back("kappa2", shift(1, 2));
        out.emplace_back("kappa3", shift(2, 0));
    }
    return out;
}

Report analyze_impl(const graph::BlackGraph* g, const braid::BraidWord* w,
                    const std::optional<FamilyInput>& family, const AnalyzeOptions& opts) {
    Report rep;
    graph::BlackGraph graph_obj;
    std::optional<FamilyInput> fam = family;
    std::optional<Int> layering_upper;

    if (w) {
        const std::vector<Int> sides = graph::wheel_sides_of_braid(*w);
        graph_obj = graph::wheel_graph(sides);
        if (!fam) fam = bounds::recognize_family(sides);
        rep.input_kind = family ? "family" : "braid";
        rep.braid = braid::to_token_string(braid::free_reduce(*w));
        if (fam) {
            rep.family_kind = fam->kind == braid::Family::Even ? "even" : "odd";
            rep.family_params = fam->params;
        }
    } else {
        graph_obj = *g;
        rep.input_kind = "graph";
    }
    rep.graph_json = graph::graph_to_json(graph_obj);

    const goeritz::GoeritzForm f = goeritz::form_of_graph(graph_obj);
    const spinc::HomologyGroup h = spinc::homology_group(f);
    const dinv::DInvariantTable tbl = dinv::d_table(f, h, opts.bounds.budget);

    rep.q.resize(static_cast<std::size_t>(f.rank));
    for (Index i = 0; i < f.rank; ++i)
        for (Index j = 0; j < f.rank; ++j)
            rep.q[static_cast<std::size_t>(i)].push_back(f.q(i, j));
    rep.det_q = f.det_q;
    rep.class_count = h.order();
    for (Int d : h.factors)
        if (d > 1) rep.invariant_factors.push_back(d);

    rep.d_table_elided =
        !opts.full_table && static_cast<Int>(tbl.entries.size()) > opts.elide_threshold;
    if (!rep.d_table_elided)
        for (const auto& [id, d] : tbl.entries) rep.d_table.push_back(DEntry{id, d});
    // Lex-first extremes, recorded even when the table is shown.
    if (!tbl.entries.empty()) {
        const auto* min_e = &tbl.entries.front();
        const auto* max_e = &tbl.entries.front();
        for (const auto& e : tbl.entries) {
            if (e.second < min_e->second) min_e = &e;
            if (max_e->second < e.second) max_e = &e;
        }
        rep.d_extremes.push_back(DEntry{min_e->first, min_e->second});
        rep.d_extremes.push_back(DEntry{max_e->first, max_e->second});
    }
    if (fam) {
        for (const auto& [name, kappa] : designated_characteristics(f, *fam)) {
            const spinc::SpincClass c = spinc::class_of(f, h, kappa);
            std::vector<Int> kv(kappa.data(), kappa.data() + kappa.size());
            rep.designated.push_back(NamedClass{name, kv, c.id, tbl.at(c.id)});
        }
    }

    if (w) {
        const braid::STLengthBound st = braid::st_length_upper_bound(*w, opts.bounds.k_max);
        const openbook::LayeringPlan plan = openbook::compile_layering(st.witness);
        const openbook::OpenBookHomology h1 = openbook::h1_open_book(plan.monodromy);
        LayeringSection ls;
        ls.st_word = braid::to_string(st.witness);
        ls.conjugation_power = st.conjugation_power;
        ls.rotation = static_cast<Int>(st.rotation);
        for (openbook::Flip fl : plan.flips) ls.flips.emplace_back(openbook::flip_name(fl));
        ls.tetrahedra = plan.tetrahedron_count;
        ls.monodromy = [&] {
            std::string s;
            for (std::int8_t l : plan.monodromy.letters) {
                if (!s.empty()) s += ' ';
                s += (std::abs(l) == 1 ? "a" : "b");
                if (l < 0) s += "^-1";
            }
            return s;
        }();
        ls.matrix = {{{plan.matrix(0, 0), plan.matrix(0, 1)},
                      {plan.matrix(1, 0), plan.matrix(1, 1)}}};
        ls.h1_finite = h1.finite;
        ls.h1_free_rank = h1.free_rank;
        ls.h1_factors = h1.invariant_factors;
        ls.h1_order = h1.order;
        rep.layering = ls;
        layering_upper = static_cast<Int>(st.length);
    }

    const BoundsReport br =
        bounds::report_from_table(f, h, tbl, fam, layering_upper, opts.bounds);
    rep.theta_bounds = br.theta_bounds;
    rep.theta_elided = br.theta_elided;
    rep.genus_bounds = br.genus_bounds;
    rep.norms = br.norms;
    rep.complexity_lower = br.complexity_lower;
    rep.complexity_upper = br.complexity_upper;
    rep.flags = br.flags;
    return rep;
}

}  // namespace

Report analyze(const graph::BlackGraph& g, const AnalyzeOptions& opts) {
    return analyze_impl(&g, nullptr, std::nullopt, opts);
}

Report analyze(const braid::BraidWord& w, const std::optional<FamilyInput>& family,
               const AnalyzeOptions& opts) {
    return analyze_impl(nullptr, &w, family, opts);
}

std::string to_json(const Report& r) {
    json j;
    j["input"] = {{"kind", r.input_kind}};
    if (!r.braid.empty() || r.input_kind != "graph") j["input"]["braid"] = r.braid;
    if (!r.family_kind.empty()) {
        j["input"]["family"] = {{"kind", r.family_kind}, {"params", r.family_params}};
    }
    j["input"]["graph"] = json::parse(r.graph_json);

    j["q"] = r.q;
    j["det_q"] = r.det_q;
    j["class_count"] = r.class_count;
    j["invariant_factors"] = r.invariant_factors;

    j["d_table"] = {{"elided", r.d_table_elided}};
    if (!r.d_table_elided) {
        json entries = json::array();
        for (const DEntry& e : r.d_table) entries.push_back(dentry_to_json(e));
        j["d_table"]["entries"] = entries;
    }
    json extremes = json::array();
    for (const DEntry& e : r.d_extremes) extremes.push_back(dentry_to_json(e));
    j["d_table"]["extremes"] = extremes;
    if (!r.designated.empty()) {
        json des = json::array();
        for (const NamedClass& n : r.designated)
            des.push_back(json{{"name", n.name},
                               {"kappa", n.kappa},
                               {"class", helem_to_json(n.id)},
                               {"d", rational_to_json(n.d)}});
        j["d_table"]["designated"] = des;
    }

    j["theta"] = {{"elided", r.theta_elided}, {"bounds", bound_list_to_json(r.theta_bounds)}};
    j["genus_bounds"] = bound_list_to_json(r.genus_bounds);

    if (r.norms) {
        json n;
        json classes = json::array();
        for (const HElem& t : r.norms->torsion_classes) classes.push_back(helem_to_json(t));
        n["classes"] = classes;
        json genus = json::array();
        for (const Rational& g : r.norms->genus_bounds) genus.push_back(rational_to_json(g));
        n["genus"] = genus;
        if (r.norms->lower) {
            json lo = json::array();
            for (const Rational& x : *r.norms->lower) lo.push_back(rational_to_json(x));
            n["lower"] = lo;
        }
        if (r.norms->upper) n["upper"] = *r.norms->upper;
        n["exact"] = r.norms->exact;
        if (r.norms->failure)
            n["failed_inequality"] = {{"index", r.norms->failure->index},
                                      {"message", r.norms->failure->message}};
        j["norms"] = n;
    }

    json cx;
    if (r.complexity_lower) cx["lower"] = *r.complexity_lower;
    if (r.complexity_upper) cx["upper"] = *r.complexity_upper;
    if (!cx.is_null()) j["complexity"] = cx;

    if (r.layering) {
        const LayeringSection& ls = *r.layering;
        json l;
        l["st_word"] = ls.st_word;
        l["conjugation_power"] = ls.conjugation_power;
        l["rotation"] = ls.rotation;
        l["flips"] = ls.flips;
        l["tetrahedra"] = ls.tetrahedra;
        l["monodromy"] = ls.monodromy;
        l["matrix"] = {{ls.matrix[0][0], ls.matrix[0][1]}, {ls.matrix[1][0], ls.matrix[1][1]}};
        l["h1"] = {{"finite", ls.h1_finite},
                   {"free_rank", ls.h1_free_rank},
                   {"factors", ls.h1_factors},
                   {"order", ls.h1_order}};
        j["layering"] = l;
    }
    j["flags"] = r.flags;
    return j.dump(2);
}

Report from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.input_kind = j.at("input").at("kind").get<std::string>();
    if (j.at("input").contains("braid")) r.braid = j.at("input").at("braid").get<std::string>();
    if (j.at("input").contains("family")) {
        r.family_kind = j.at("input").at("family").at("kind").get<std::string>();
        r.family_params = j.at("input").at("family").at("params").get<std::vector<Int>>();
    }
    r.graph_json = j.at("input").at("graph").dump();

    r.q = j.at("q").get<std::vector<std::vector<Int>>>();
    r.det_q = j.at("det_q").get<Int>();
    r.class_count = j.at("class_count").get<Int>();
    r.invariant_factors = j.at("invariant_factors").get<std::vector<Int>>();

    r.d_table_elided = j.at("d_table").at("elided").get<bool>();
    if (j.at("d_table").contains("entries"))
        for (const auto& e : j.at("d_table").at("entries")) r.d_table.push_back(dentry_from_json(e));
    for (const auto& e : j.at("d_table").at("extremes"))
        r.d_extremes.push_back(dentry_from_json(e));
    if (j.at("d_table").contains("designated"))
        for (const auto& e : j.at("d_table").at("designated"))
            r.designated.push_back(NamedClass{e.at("name").get<std::string>(),
                                              e.at("kappa").get<std::vector<Int>>(),
                                              helem_from_json(e.at("class")),
                                              rational_from_json(e.at("d"))});

    r.theta_elided = j.at("theta").at("elided").get<bool>();
    r.theta_bounds = bound_list_from_json(j.at("theta").at("bounds"));
    r.genus_bounds = bound_list_from_json(j.at("genus_bounds"));

    if (j.contains("norms")) {
        bounds::NormSection ns;
        const json& n = j.at("norms");
        for (int i = 0; i < 3; ++i) {
            ns.torsion_classes[static_cast<std::size_t>(i)] =
                helem_from_json(n.at("classes").at(static_cast<std::size_t>(i)));
            ns.genus_bounds[static_cast<std::size_t>(i)] =
                rational_from_json(n.at("genus").at(static_cast<std::size_t>(i)));
        }
        if (n.contains("lower")) {
            std::array<Rational, 3> lo;
            for (int i = 0; i < 3; ++i)
                lo[static_cast<std::size_t>(i)] =
                    rational_from_json(n.at("lower").at(static_cast<std::size_t>(i)));
            ns.lower = lo;
        }
        if (n.contains("upper")) ns.upper = n.at("upper").get<std::array<Int, 3>>();
        ns.exact = n.at("exact").get<bool>();
        if (n.contains("failed_inequality"))
            ns.failure = bounds::InequalityFailure{
                n.at("failed_inequality").at("index").get<int>(),
                n.at("failed_inequality").at("message").get<std::string>()};
        r.norms = ns;
    }
    if (j.contains("complexity")) {
        if (j.at("complexity").contains("lower"))
            r.complexity_lower = j.at("complexity").at("lower").get<Int>();
        if (j.at("complexity").contains("upper"))
            r.complexity_upper = j.at("complexity").at("upper").get<Int>();
    }
    if (j.contains("layering")) {
        const json& l = j.at("layering");
        LayeringSection ls;
        ls.st_word = l.at("st_word").get<std::string>();
        ls.conjugation_power = l.at("conjugation_power").get<int>();
        ls.rotation = l.at("rotation").get<Int>();
        ls.flips = l.at("flips").get<std::vector<std::string>>();
        ls.tetrahedra = l.at("tetrahedra").get<Int>();
        ls.monodromy = l.at("monodromy").get<std::string>();
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                ls.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    l.at("matrix").at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)).get<Int>();
        ls.h1_finite = l.at("h1").at("finite").get<bool>();
        ls.h1_free_rank = l.at("h1").at("free_rank").get<Index>();
        ls.h1_factors = l.at("h1").at("factors").get<std::vector<Int>>();
        ls.h1_order = l.at("h1").at("order").get<Int>();
        r.layering = ls;
    }
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

std::string id_str(const HElem& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

bool wants(const std::vector<std::string>& sections, const std::string& name) {
    return std::find(sections.begin(), sections.end(), name) != sections.end();
}

}  // namespace

std::string render(const Report& r, const std::vector<std::string>& sections) {
    std::ostringstream os;
    os << "input: " << r.input_kind;
    if (!r.braid.empty()) os << " " << r.braid;
    if (!r.family_kind.empty()) {
        os << " (family " << r.family_kind;
        for (Int p : r.family_params) os << " " << p;
        os << ")";
    }
    os << "\n";
    if (r.input_kind == "graph") os << "graph: " << r.graph_json << "\n";

    if (wants(sections, "form")) {
        os << "Q = [";
        for (std::size_t i = 0; i < r.q.size(); ++i) {
            os << (i ? "; " : "");
            for (std::size_t k = 0; k < r.q[i].size(); ++k)
                os << (k ? " " : "") << r.q[i][k];
        }
        os << "]\n";
        os << "det Q = " << r.det_q << ", classes = " << r.class_count << "\n";
        os << "H1 invariant factors:";
        if (r.invariant_factors.empty()) os << " (trivial)";
        for (Int d : r.invariant_factors) os << " " << d;
        os << "\n";
    }

    if (wants(sections, "dinv")) {
        if (r.d_table_elided) {
            os << "d-table: " << r.class_count
               << " classes (elided; use --full), extremes:\n";
        } else {
            os << "d-table (" << r.class_count << " classes):\n";
            for (const DEntry& e : r.d_table)
                os << "  d" << id_str(e.id) << " = " << rational_str(e.d) << "\n";
        }
        if (r.d_table_elided)
            for (const DEntry& e : r.d_extremes)
                os << "  d" << id_str(e.id) << " = " << rational_str(e.d) << "\n";
        for (const NamedClass& n : r.designated) {
            os << "  " << n.name << " = (";
            for (std::size_t i = 0; i < n.kappa.size(); ++i)
                os << (i ? "," : "") << n.kappa[i];
            os << "), class " << id_str(n.id) << ", d = " << rational_str(n.d) << "\n";
        }
    }

    if (wants(sections, "bounds")) {
        os << "genus lower bounds (per nonzero order-2 class):\n";
        if (r.genus_bounds.empty()) os << "  (none: no 2-torsion)\n";
        for (const auto& [t, g] : r.genus_bounds)
            os << "  class " << id_str(t) << ": h >= " << rational_str(g) << "\n";
        if (r.norms) {
            if (r.norms->lower) {
                os << "Z2-norms";
                if (r.norms->exact)
                    os << " (exact):";
                else if (r.norms->upper)
                    os << " (lower..upper):";
                else
                    os << " (lower bounds):";
                for (int i = 0; i < 3; ++i) {
                    os << " " << rational_str((*r.norms->lower)[static_cast<std::size_t>(i)]);
                    if (r.norms->upper && !r.norms->exact)
                        os << ".." << (*r.norms->upper)[static_cast<std::size_t>(i)];
                }
                os << "\n";
            } else if (r.norms->failure) {
                os << "Z2-norms: unavailable (" << r.norms->failure->message << ")\n";
            }
        }
    }

    if (wants(sections, "complexity")) {
        os << "complexity: ";
        if (r.complexity_lower && r.complexity_upper)
            os << "C in [" << *r.complexity_lower << ", " << *r.complexity_upper << "]\n";
        else if (r.complexity_lower)
            os << "C >= " << *r.complexity_lower << "\n";
        else if (r.complexity_upper)
            os << "C <= " << *r.complexity_upper << "\n";
        else
            os << "no bound available\n";
    }

    if (wants(sections, "layer") && r.layering) {
        const LayeringSection& ls = *r.layering;
        os << "st word: " << ls.st_word << " (rotation " << ls.rotation
           << ", conjugated by sigma2^" << ls.conjugation_power << ")\n";
        os << "flips:";
        for (const std::string& f : ls.flips) os << " " << f;
        os << "\n";
        os << "tetrahedra: " << ls.tetrahedra << "\n";
        os << "monodromy: " << (ls.monodromy.empty() ? "(identity)" : ls.monodromy) << "\n";
        os << "matrix: [" << ls.matrix[0][0] << " " << ls.matrix[0][1] << "; "
           << ls.matrix[1][0] << " " << ls.matrix[1][1] << "]\n";
        os << "H1 of open book: ";
        if (!ls.h1_finite) {
            os << "infinite (free rank " << ls.h1_free_rank << ")";
        } else {
            os << "order " << ls.h1_order;
            if (!ls.h1_factors.empty()) {
                os << " =";
                for (Int d : ls.h1_factors) os << " Z/" << d;
            }
        }
        os << "\n";
    }

    if (wants(sections, "bounds") || wants(sections, "complexity"))
        for (const std::string& f : r.flags) os << "note: " << f << "\n";
    return os.str();
}

}  // namespace dbcover::report
