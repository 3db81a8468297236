// Topological bounds from the d-invariant table: Theta lower bounds,
// nonorientable genus bounds per 2-torsion class, Z2-Thurston norm bounds via
// the connected-surface workaround, and triangulation-complexity estimates.

#ifndef DBCOVER_BOUNDS_HPP
#define DBCOVER_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "dbcover/dinv.hpp"

namespace dbcover::bounds {

using dinv::DInvariantTable;
using goeritz::GoeritzForm;
using spinc::HElem;
using spinc::HomologyGroup;

// max over classes c of d(c + alpha) - d(c); lower bound for 1 + Theta(a).
Rational theta_lower_bound(const GoeritzForm& f, const HomologyGroup& h,
                           const DInvariantTable& tbl, const HElem& alpha);

// 2 * max_c {d(c + t) - d(c)} for a nonzero 2-torsion t; a lower bound for
// the genus of a closed connected nonorientable surface in the dual class.
Rational nonorientable_genus_bound(const GoeritzForm& f, const HomologyGroup& h,
                                   const DInvariantTable& tbl, const HElem& t);

// Connectedness workaround: given genus lower bounds (h1,h2,h3) for the three
// nonzero order-2 classes, checks h_i + h_{i+1} >= h_{i+2} + 2 cyclically and
// on success returns (h1-2, h2-2, h3-2) as Z2-norm lower bounds.
struct InequalityFailure {
    int index;  // 1-based i with h_i + h_{i+1} < h_{i+2} + 2
    std::string message;
};
std::variant<std::array<Rational, 3>, InequalityFailure>
taut_conn_norm_bounds(const std::array<Rational, 3>& h);

// chi_- of the lifted spanning disks, clamped at zero.
// Even family: (sum_odd a_i + n - 2, sum_even a_i + n - 2, sum a_i - 2).
// Odd family: (a+b, b+c, c+a).
std::array<Int, 3> family_norm_upper(braid::Family kind, const std::vector<Int>& params);

// 2 + sum of the three norm values of a rank-2 subgroup (ceiling for
// non-integer lower bounds).
Int jrt_complexity_lower(const std::array<Rational, 3>& norms);

struct NormSection {
    std::array<Rational, 3> genus_bounds;
    std::array<HElem, 3> torsion_classes;
    std::optional<std::array<Rational, 3>> lower;  // absent if the inequality check fails
    std::optional<std::array<Int, 3>> upper;       // family inputs only
    bool exact = false;                            // lower == upper
    std::optional<InequalityFailure> failure;
};

struct BoundsReport {
    Index rank = 0;
    Int det_q = 1;
    std::vector<Int> invariant_factors;
    std::vector<std::pair<HElem, Rational>> theta_bounds;  // per H-element, may be elided
    bool theta_elided = false;
    std::vector<std::pair<HElem, Rational>> genus_bounds;  // per nonzero 2-torsion class
    std::optional<NormSection> norms;                      // present iff exactly 3 such classes
    std::optional<Int> complexity_lower;
    std::optional<Int> complexity_upper;
    std::vector<std::string> flags;
};

struct ReportOptions {
    int k_max = 2;
    Int budget = 1'000'000;
    Int theta_cap = 200;  // skip the full Theta table above this order
};

struct FamilyInput {
    braid::Family kind;
    std::vector<Int> params;
};

// Assembly from an already-computed d-table.
BoundsReport report_from_table(const GoeritzForm& f, const HomologyGroup& h,
                               const DInvariantTable& tbl,
                               const std::optional<FamilyInput>& fam,
                               std::optional<Int> layering_upper,
                               const ReportOptions& opts = {});

// Pipeline composition for a raw graph (no norm upper bounds, no layering).
BoundsReport bounds_report(const graph::BlackGraph& g, const ReportOptions& opts = {});

// Pipeline composition for a supported braid closure; family metadata (when
// recognizable) fixes the designated ordering of the three torsion classes
// and adds disk-lift norm upper bounds and the layering complexity upper.
BoundsReport bounds_report(const braid::BraidWord& w, const ReportOptions& opts = {});

// Family recognition from wheel side lengths (all even & k even, or k = 3 all odd).
std::optional<FamilyInput> recognize_family(const std::vector<Int>& sides);

// The three designated 2-torsion classes of a family input, in the order
// (odd spokes, even spokes, all) for the even family and (e1-e2, e2-e3,
// e3-e1) for the odd family.
std::array<HElem, 3> designated_torsion_classes(const GoeritzForm& f,
                                                const HomologyGroup& h,
                                                const FamilyInput& fam);

}  // namespace dbcover::bounds

#endif  // DBCOVER_BOUNDS_HPP
