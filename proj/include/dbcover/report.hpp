// Whole-analysis report assembled from the pipeline, with a lossless JSON
// encoding (rationals rendered "p/q" in lowest terms) and deterministic
// human-readable rendering.

#ifndef DBCOVER_REPORT_HPP
#define DBCOVER_REPORT_HPP

#include <optional>
#include <string>

#include "dbcover/bounds.hpp"
#include "dbcover/openbook.hpp"

namespace dbcover::report {

using bounds::BoundsReport;
using bounds::FamilyInput;
using bounds::ReportOptions;
using spinc::HElem;

struct DEntry {
    HElem id;
    Rational d;
    bool operator==(const DEntry&) const = default;
};

struct NamedClass {
    std::string name;  // "kappa0" .. "kappa3"
    std::vector<Int> kappa;
    HElem id;
    Rational d;
    bool operator==(const NamedClass&) const = default;
};

struct LayeringSection {
    std::string st_word;
    int conjugation_power = 0;
    Int rotation = 0;
    std::vector<std::string> flips;
    Int tetrahedra = 0;
    std::string monodromy;
    std::array<std::array<Int, 2>, 2> matrix{};
    bool h1_finite = true;
    Index h1_free_rank = 0;
    std::vector<Int> h1_factors;
    Int h1_order = 0;
    bool operator==(const LayeringSection&) const = default;
};

struct Report {
    std::string input_kind;  // "braid" | "family" | "graph"
    std::string braid;       // canonical token string (braid/family inputs)
    std::string family_kind; // "even" | "odd" | ""
    std::vector<Int> family_params;
    std::string graph_json;  // canonical graph echo

    std::vector<std::vector<Int>> q;
    Int det_q = 1;
    Int class_count = 1;
    std::vector<Int> invariant_factors;

    bool d_table_elided = false;
    std::vector<DEntry> d_table;     // omitted when elided
    std::vector<DEntry> d_extremes;  // lex-first minimum and maximum, always
    std::vector<NamedClass> designated;

    std::vector<std::pair<HElem, Rational>> theta_bounds;
    bool theta_elided = false;
    std::vector<std::pair<HElem, Rational>> genus_bounds;
    std::optional<bounds::NormSection> norms;
    std::optional<Int> complexity_lower;
    std::optional<Int> complexity_upper;
    std::optional<LayeringSection> layering;
    std::vector<std::string> flags;
};

struct AnalyzeOptions {
    ReportOptions bounds;
    bool full_table = false;
    Int elide_threshold = 200;
};

// Full pipeline for a graph input.
Report analyze(const graph::BlackGraph& g, const AnalyzeOptions& opts);

// Full pipeline for a braid input; `family` carries the family metadata when
// the input was given as one.
Report analyze(const braid::BraidWord& w, const std::optional<FamilyInput>& family,
               const AnalyzeOptions& opts);

std::string to_json(const Report& r);
Report from_json(const std::string& text);

// Human-readable rendering; `sections` picks from {"form", "dinv", "bounds",
// "complexity", "layer"}.
std::string render(const Report& r, const std::vector<std::string>& sections);

std::string rational_str(const Rational& r);  // shortened human form

}  // namespace dbcover::report

#endif  // DBCOVER_REPORT_HPP
