// Exact integer/rational dense linear algebra on Eigen types: fraction-free
// (Bareiss) determinants, field Gauss-Jordan inversion, and Smith normal form
// with retained unimodular transforms.

#ifndef DBCOVER_EXACT_LINALG_HPP
#define DBCOVER_EXACT_LINALG_HPP

#include <vector>

#include <Eigen/Core>

#include "dbcover/rational.hpp"

namespace dbcover {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

// Determinant by fraction-free elimination. Exact; throws std::overflow_error
// if an intermediate minor leaves 64-bit range.
Int bareiss_determinant(const IntMatrix& a);

// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1. The k-th entry
// is zero whenever that minor vanishes (handled by row lookahead).
std::vector<Int> leading_principal_minors(const IntMatrix& a);

// True iff the symmetric matrix is negative definite: leading principal
// minors alternate in sign starting negative.
bool is_negative_definite(const IntMatrix& a);

// Exact inverse of a nonsingular integer matrix.
RatMatrix rational_inverse(const IntMatrix& a);

// Exact solve a*x = rhs for nonsingular a.
RatVector rational_solve(const IntMatrix& a, const RatVector& rhs);

// Generic Gauss-Jordan inverse over an exact division ring scalar.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
field_inverse(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("field_inverse: matrix not square");
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat inv = Mat::Identity(n, n);
    for (Index col = 0; col < n; ++col) {
        Index pivot = -1;
        for (Index r = col; r < n; ++r) {
            if (!(m(r, col) == Scalar(0))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("field_inverse: singular matrix");
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Scalar p = m(col, col);
        for (Index j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (Index r = 0; r < n; ++r) {
            if (r == col) continue;
            const Scalar f = m(r, col);
            if (f == Scalar(0)) continue;
            for (Index j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - f * m(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

// Smith normal form u*a*v = d with unimodular u, v and their inverses.
// Diagonal entries are nonnegative and satisfy d[i] | d[i+1]; zero entries
// (singular input) trail at the end.
struct SmithForm {
    IntMatrix d;
    IntMatrix u, u_inv;
    IntMatrix v, v_inv;
    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace dbcover

#endif  // DBCOVER_EXACT_LINALG_HPP
