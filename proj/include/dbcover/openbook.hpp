// Genus-one open books with connected binding: Dehn-twist words, their
// homology action in SL2(Z), the flip calculus for layered triangulations,
// and the first-homology cross-check against the cycle-form pipeline.

#ifndef DBCOVER_OPENBOOK_HPP
#define DBCOVER_OPENBOOK_HPP

#include <vector>

#include "dbcover/braid.hpp"
#include "dbcover/exact_linalg.hpp"

namespace dbcover::openbook {

// Letters +1/-1 for tau_a^{+1/-1}, +2/-2 for tau_b^{+1/-1}.
struct MappingClassWord {
    std::vector<std::int8_t> letters;
    bool operator==(const MappingClassWord&) const = default;
};

using Mat2 = Eigen::Matrix<Int, 2, 2>;

// Interior edges of the one-vertex triangulation of the once-punctured torus.
enum class Flip { A1, A2, B1, B2 };

struct LayeringPlan {
    std::vector<Flip> flips;
    MappingClassWord monodromy;  // freely reduced
    Mat2 matrix = Mat2::Identity();
    Index tetrahedron_count = 0;
};

MappingClassWord free_reduce(const MappingClassWord& w);

// Letterwise sigma1 -> tau_b, sigma2 -> tau_a.
MappingClassWord braid_to_monodromy(const braid::BraidWord& w);

// Homology action: tau_a -> [[1,1],[0,1]], tau_b -> [[1,0],[-1,1]],
// multiplied in word order.
Mat2 monodromy_matrix(const MappingClassWord& m);

// Appends the per-flip monodromy factor and reduces:
//   a1: tau_b^-1 tau_a^-1   a2: tau_a tau_b   b1: tau_a^-1   b2: tau_a
MappingClassWord flip_step(const MappingClassWord& current, Flip edge);

// One tetrahedron per ST letter: s -> b2, s^-1 -> b1, t -> a2, t^-1 -> a1,
// processed left to right. The realized monodromy is the image of the ST
// word under s -> tau_a, t -> tau_a tau_b.
LayeringPlan compile_layering(const braid::STWord& stw);

// Cokernel of (matrix - identity): H1 of the open book.
struct OpenBookHomology {
    bool finite = true;
    Index free_rank = 0;
    std::vector<Int> invariant_factors;  // nontrivial (> 1) factors
    Int order = 1;                       // |det(M - I)| when finite
};

OpenBookHomology h1_open_book(const MappingClassWord& m);

// Invariant factors of coker(M - I) vs coker(Q) from the black-graph
// pipeline; both sides carry their nontrivial factors.
struct CrossCheck {
    bool consistent = false;
    std::vector<Int> open_book_factors;
    std::vector<Int> cycle_form_factors;
};

CrossCheck crosscheck_h1(const braid::BraidWord& w);

const char* flip_name(Flip f);

}  // namespace dbcover::openbook

#endif  // DBCOVER_OPENBOOK_HPP
