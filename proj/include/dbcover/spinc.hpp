// Characteristic vectors of the cycle form, their equivalence classes modulo
// 2q(V), and the acting group H = V*/q(V) in Smith-normal-form coordinates.

#ifndef DBCOVER_SPINC_HPP
#define DBCOVER_SPINC_HPP

#include <vector>

#include "dbcover/goeritz.hpp"

namespace dbcover::spinc {

using goeritz::GoeritzForm;

// Row vector kappa with kappa_i == Q_ii (mod 2); models kappa(v) == Q(v,v) mod 2.
using CharVector = IntRowVector;

// Element of H in SNF coordinates: (t_1 mod d_1, ..., t_b mod d_b).
using HElem = std::vector<Int>;

// H = Z^b / Q Z^b with the unimodular change of basis retained so that
// arbitrary lifts and coordinate reductions stay exact and testable.
struct HomologyGroup {
    std::vector<Int> factors;  // d_1 | d_2 | ... | d_b, each >= 1
    IntMatrix u, u_inv;        // u * Q * v = diag(factors)
    IntMatrix v, v_inv;

    Int order() const;
    HElem coords(const IntVector& x) const;   // x mod Q Z^b
    IntVector lift(const HElem& t) const;     // a preimage of t
    HElem add(const HElem& a, const HElem& b) const;
    HElem neg(const HElem& a) const;
    bool is_zero(const HElem& a) const;
};

struct SpincClass {
    CharVector representative;
    HElem id;  // coordinates of (representative - base)/2 in H
    bool operator==(const SpincClass& o) const { return id == o.id; }
};

// diag(Q); always characteristic.
CharVector base_characteristic(const GoeritzForm& f);

bool is_characteristic(const GoeritzForm& f, const CharVector& kappa);

HomologyGroup homology_group(const GoeritzForm& f);

// Class of a characteristic vector (throws on parity violation).
SpincClass class_of(const GoeritzForm& f, const HomologyGroup& h, const CharVector& kappa);

// All |det Q| classes, ids in lexicographic SNF-coordinate order. The
// representative of class t is base + 2*lift(t)^T.
std::vector<SpincClass> enumerate_classes(const GoeritzForm& f, const HomologyGroup& h);
std::vector<SpincClass> enumerate_classes(const GoeritzForm& f);

// kappa1 - kappa2 == 2q(v) for some integer v? Throws if either vector
// violates the characteristic parity.
bool same_class(const GoeritzForm& f, const CharVector& k1, const CharVector& k2);

// All t with 2t = 0, zero included, in lexicographic order.
std::vector<HElem> two_torsion_elements(const HomologyGroup& h);

// Class of representative + 2*lift(alpha); independent of the lift.
SpincClass shift_class(const GoeritzForm& f, const HomologyGroup& h,
                       const SpincClass& c, const HElem& alpha);

}  // namespace dbcover::spinc

#endif  // DBCOVER_SPINC_HPP
