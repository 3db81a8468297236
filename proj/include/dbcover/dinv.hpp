// Correction terms d(V,c) = max over a characteristic coset of (|kappa|^2+b)/4,
// by exact depth-first lattice enumeration with rational pruning radii, plus a
// certified brute-force box maximizer used as an independent oracle.

#ifndef DBCOVER_DINV_HPP
#define DBCOVER_DINV_HPP

#include <map>
#include <vector>

#include "dbcover/spinc.hpp"

namespace dbcover::dinv {

using goeritz::GoeritzForm;
using spinc::CharVector;
using spinc::HElem;
using spinc::SpincClass;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MaxResult {
    Rational value;        // max of kappa Q^-1 kappa^T over the class, <= 0
    CharVector maximizer;  // lexicographically smallest maximizing kappa
};

// Global maximum of the dual norm over {rep + 2q(v) : v integer}. Terminates:
// the search minimizes a positive definite form seeded at the rounded center.
MaxResult max_kappa_norm_sq(const GoeritzForm& f, const SpincClass& c);

// (max_kappa_norm_sq + b) / 4.
Rational d_invariant(const GoeritzForm& f, const SpincClass& c);

struct DInvariantTable {
    Index rank = 0;
    Int det_q = 1;
    std::vector<std::pair<HElem, Rational>> entries;  // lexicographic in id
    std::map<HElem, Rational> by_id;

    const Rational& at(const HElem& id) const;
};

// d for every class; throws BudgetExceeded when |det Q| > budget.
DInvariantTable d_table(const GoeritzForm& f, Int budget = 1'000'000);
DInvariantTable d_table(const GoeritzForm& f, const spinc::HomologyGroup& h, Int budget);

// Smallest box radius around the rounded seed certified to contain a
// maximizer: ceil(sqrt(v0 / lambda_min)) + 1, where v0 is the seed value of
// the positive form and lambda_min a rational lower bound on its smallest
// eigenvalue.
Int certified_radius(const GoeritzForm& f, const SpincClass& c);

// Max over the box |v - seed|_inf <= radius; equals the true maximum when
// radius >= certified_radius. Throws std::invalid_argument below the bound.
Rational brute_force_max(const GoeritzForm& f, const SpincClass& c, Int radius);

}  // namespace dbcover::dinv

#endif  // DBCOVER_DINV_HPP
