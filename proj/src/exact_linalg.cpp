#include "dbcover/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace dbcover {

Int bareiss_determinant(const IntMatrix& a) {
    IntMatrix m = a;
    const Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("bareiss: matrix not square");
    if (n == 0) return 1;

    Int prev = 1;
    int sign = 1;
    for (Index k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            Index swap_row = -1;
            for (Index r = k + 1; r < n; ++r) {
                if (m(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            m.row(k).swap(m.row(swap_row));
            sign = -sign;
        }
        const Int pivot = m(k, k);
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Int128 num = Int128(m(i, j)) * pivot - Int128(m(i, k)) * m(k, j);
                m(i, j) = checked_narrow(num / prev);
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign == 1 ? prev : -prev;
}

std::vector<Int> leading_principal_minors(const IntMatrix& a) {
    const Index n = a.rows();
    std::vector<Int> minors(static_cast<std::size_t>(n), 0);
    for (Index k = 0; k < n; ++k)
        minors[static_cast<std::size_t>(k)] =
            bareiss_determinant(a.topLeftCorner(k + 1, k + 1));
    return minors;
}

bool is_negative_definite(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const auto minors = leading_principal_minors(a);
    int expected = -1;
    for (Int m : minors) {
        if (expected > 0 ? m <= 0 : m >= 0) return false;
        expected = -expected;
    }
    return true;
}

RatMatrix rational_inverse(const IntMatrix& a) {
    return field_inverse<Rational>(a.cast<Rational>());
}

RatVector rational_solve(const IntMatrix& a, const RatVector& rhs) {
    return rational_inverse(a) * rhs;
}

std::vector<Int> SmithForm::diagonal() const {
    const Index n = std::min(d.rows(), d.cols());
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

struct SnfState {
    IntMatrix a, u, u_inv, v, v_inv;

    void swap_rows(Index i, Index j) {
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
        u_inv.col(i).swap(u_inv.col(j));
    }
    void swap_cols(Index i, Index j) {
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
        v_inv.row(i).swap(v_inv.row(j));
    }
    void negate_row(Index i) {
        a.row(i) = -a.row(i);
        u.row(i) = -u.row(i);
        u_inv.col(i) = -u_inv.col(i);
    }
    // row i += c * row j  (inverse transform: row i -= c * row j)
    void add_row(Index i, Index j, Int c) {
        for (Index k = 0; k < a.cols(); ++k)
            a(i, k) = checked_add(a(i, k), checked_mul(c, a(j, k)));
        for (Index k = 0; k < u.cols(); ++k)
            u(i, k) = checked_add(u(i, k), checked_mul(c, u(j, k)));
        for (Index k = 0; k < u_inv.rows(); ++k)
            u_inv(k, j) = checked_sub(u_inv(k, j), checked_mul(c, u_inv(k, i)));
    }
    void add_col(Index i, Index j, Int c) {
        for (Index k = 0; k < a.rows(); ++k)
            a(k, i) = checked_add(a(k, i), checked_mul(c, a(k, j)));
        for (Index k = 0; k < v.rows(); ++k)
            v(k, i) = checked_add(v(k, i), checked_mul(c, v(k, j)));
        for (Index k = 0; k < v_inv.cols(); ++k)
            v_inv(j, k) = checked_sub(v_inv(j, k), checked_mul(c, v_inv(i, k)));
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const Index rows = input.rows();
    const Index cols = input.cols();
    SnfState s;
    s.a = input;
    s.u = IntMatrix::Identity(rows, rows);
    s.u_inv = IntMatrix::Identity(rows, rows);
    s.v = IntMatrix::Identity(cols, cols);
    s.v_inv = IntMatrix::Identity(cols, cols);

    const Index steps = std::min(rows, cols);
    for (Index t = 0; t < steps; ++t) {
        // Move a minimal-magnitude nonzero entry of the trailing block to (t, t).
        Index pr = -1, pc = -1;
        Int best = 0;
        for (Index i = t; i < rows; ++i)
            for (Index j = t; j < cols; ++j)
                if (s.a(i, j) != 0 &&
                    (pr < 0 || std::abs(s.a(i, j)) < std::abs(best))) {
                    pr = i;
                    pc = j;
                    best = s.a(i, j);
                }
        if (pr < 0) break;  // trailing block is zero
        if (pr != t) s.swap_rows(pr, t);
        if (pc != t) s.swap_cols(pc, t);

        bool stable = false;
        while (!stable) {
            stable = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (s.a(i, t) == 0) continue;
                Int q = s.a(i, t) / s.a(t, t);
                s.add_row(i, t, -q);
                if (s.a(i, t) != 0) {
                    s.swap_rows(i, t);  // remainder is strictly smaller
                    stable = false;
                }
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (s.a(t, j) == 0) continue;
                Int q = s.a(t, j) / s.a(t, t);
                s.add_col(j, t, -q);
                if (s.a(t, j) != 0) {
                    s.swap_cols(j, t);
                    stable = false;
                }
            }
            if (stable) {
                // Enforce divisibility of the trailing block by the pivot.
                for (Index i = t + 1; i < rows && stable; ++i)
                    for (Index j = t + 1; j < cols && stable; ++j)
                        if (s.a(i, j) % s.a(t, t) != 0) {
                            s.add_row(t, i, 1);
                            stable = false;
                        }
            }
        }
        if (s.a(t, t) < 0) s.negate_row(t);
    }

    SmithForm out;
    out.d = s.a;
    out.u = s.u;
    out.u_inv = s.u_inv;
    out.v = s.v;
    out.v_inv = s.v_inv;
    return out;
}

}  // namespace dbcover
