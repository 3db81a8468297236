// The quadratic form on the cycle space of a black graph: Q = -N N^T for the
// signed circuit matrix N, with exact determinant, rational inverse, and the
// dual norm |alpha|^2 = alpha Q^-1 alpha^T.

#ifndef DBCOVER_GOERITZ_HPP
#define DBCOVER_GOERITZ_HPP

#include "dbcover/black_graph.hpp"
#include "dbcover/exact_linalg.hpp"

namespace dbcover::goeritz {

struct GoeritzForm {
    Index rank = 0;      // b, the first Betti number of the graph
    IntMatrix q;         // b x b, symmetric, negative definite
    RatMatrix q_inv;     // exact inverse
    Int det_q = 1;       // sign (-1)^b
};

// Q = -N N^T. Asserts negative definiteness (holds for every connected
// loop-free multigraph) and inverts exactly.
GoeritzForm gram_matrix(const graph::CircuitMatrix& n);

// Convenience: tree + circuits + gram for a graph.
GoeritzForm form_of_graph(const graph::BlackGraph& g);

// alpha Q^-1 alpha^T; nonpositive since Q is negative definite.
Rational dual_norm_sq(const GoeritzForm& f, const IntRowVector& alpha);

// Exact determinant and inverse of a nonsingular integer matrix.
std::pair<Int, RatMatrix> det_and_inverse(const IntMatrix& q);

using dbcover::is_negative_definite;

}  // namespace dbcover::goeritz

#endif  // DBCOVER_GOERITZ_HPP
