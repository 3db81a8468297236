#include "dbcover/dinv.hpp"

#include <algorithm>

namespace dbcover::dinv {

namespace {

// Unit lower-triangular L and positive diagonal D with P = L D L^T, exact.
struct Ldlt {
    RatMatrix l;
    RatVector d;
};

Ldlt ldlt(const IntMatrix& p) {
    const Index n = p.rows();
    Ldlt out;
    out.l = RatMatrix::Identity(n, n);
    out.d = RatVector::Zero(n);
    RatMatrix a = p.cast<Rational>();
    for (Index k = 0; k < n; ++k) {
        out.d(k) = a(k, k);
        if (!(Rational(0) < out.d(k)))
            throw std::logic_error("form is not positive definite");
        for (Index i = k + 1; i < n; ++i) out.l(i, k) = a(i, k) / out.d(k);
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j <= i; ++j) {
                a(i, j) -= out.l(i, k) * out.l(j, k) * out.d(k);
                a(j, i) = a(i, j);
            }
    }
    return out;
}

// Minimizes G(y) = (y - t)^T P (y - t) over y in 2Z^b and collects every
// minimizer, depth-first from the last coordinate with exact pruning.
struct CosetMinimizer {
    const Ldlt& chol;
    const RatVector& target;    // t
    Index n;
    Rational best;
    std::vector<IntVector> argmins;
    IntVector y;

    CosetMinimizer(const Ldlt& c, const RatVector& t, const Rational& seed_value,
                   const IntVector& seed_y)
        : chol(c), target(t), n(t.size()), best(seed_value), y(IntVector::Zero(t.size())) {
        argmins.push_back(seed_y);
        RatVector diff = RatVector::Zero(n);
        descend(n - 1, Rational(0), diff);
    }

    // diff holds y_j - t_j for fixed coordinates j > level.
    void descend(Index level, const Rational& partial, RatVector& diff) {
        if (level < 0) {
            if (partial < best) {
                best = partial;
                argmins.clear();
            }
            if (partial == best &&
                std::find(argmins.begin(), argmins.end(), y) == argmins.end())
                argmins.push_back(y);
            return;
        }
        // w_level = y_level - center, center = t_level - sum_{j>level} L_{j,level} diff_j.
        Rational center = target(level);
        for (Index j = level + 1; j < n; ++j)
            center -= chol.l(j, level) * diff(j);
        // Even y scanned outward from the rounded center; the per-level term
        // D * (y - center)^2 grows monotonically in each direction, so the
        // first overshoot of the live budget ends that direction.
        const Int m0 = (center / Rational(2)).round_half_up();
        for (int step : {1, -1}) {
            for (Int m = step == 1 ? m0 : m0 - 1;; m += step) {
                const Rational w = Rational(2 * m) - center;
                const Rational term = chol.d(level) * w * w;
                if (partial + term > best) break;
                y(level) = 2 * m;
                diff(level) = Rational(2 * m) - target(level);
                descend(level - 1, partial + term, diff);
            }
        }
    }
};

RatVector class_center(const GoeritzForm& f, const SpincClass& c) {
    // X0 = Q^-1 rep^T; kappa = rep + y^T Q gives |kappa|^2 = -(y+X0)^T(-Q)(y+X0).
    return f.q_inv * c.representative.transpose().cast<Rational>();
}

Rational positive_form_value(const IntMatrix& p, const RatVector& x) {
    return (x.transpose() * p.cast<Rational>() * x)(0, 0);
}

IntVector seed_vector(const RatVector& target) {
    IntVector s(target.size());
    for (Index i = 0; i < target.size(); ++i)
        s(i) = 2 * (target(i) / Rational(2)).round_half_up();
    return s;
}

CharVector kappa_of(const GoeritzForm& f, const SpincClass& c, const IntVector& y) {
    return c.representative + (y.transpose() * f.q).eval();
}

bool lex_less(const CharVector& a, const CharVector& b) {
    for (Index i = 0; i < a.cols(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

// Rational lower bound on the smallest eigenvalue of P = -Q:
// lambda_min >= 1 / ||P^-1||_inf (spectral radius bounded by any induced norm).
Rational lambda_min_bound(const GoeritzForm& f) {
    Rational worst(0);
    for (Index i = 0; i < f.rank; ++i) {
        Rational row_sum(0);
        for (Index j = 0; j < f.rank; ++j) row_sum += f.q_inv(i, j).abs();
        if (worst < row_sum) worst = row_sum;
    }
    if (worst.is_zero()) throw std::logic_error("rank-zero form has no eigenvalue bound");
    return Rational(1) / worst;
}

}  // namespace

MaxResult max_kappa_norm_sq(const GoeritzForm& f, const SpincClass& c) {
    if (f.rank == 0) return MaxResult{Rational(0), CharVector(0)};
    const IntMatrix p = -f.q;
    const RatVector target = -class_center(f, c);
    const IntVector seed = seed_vector(target);
    RatVector seed_diff = seed.cast<Rational>() - target;
    const Rational seed_value = positive_form_value(p, seed_diff);

    Ldlt chol = ldlt(p);
    CosetMinimizer search(chol, target, seed_value, seed);

    MaxResult out{-search.best, kappa_of(f, c, search.argmins.front())};
    for (const IntVector& y : search.argmins) {
        CharVector cand = kappa_of(f, c, y);
        if (lex_less(cand, out.maximizer)) out.maximizer = cand;
    }
    return out;
}

Rational d_invariant(const GoeritzForm& f, const SpincClass& c) {
    return (max_kappa_norm_sq(f, c).value + Rational(f.rank)) / Rational(4);
}

const Rational& DInvariantTable::at(const HElem& id) const {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw std::out_of_range("class id not in d-table");
    return it->second;
}

DInvariantTable d_table(const GoeritzForm& f, const spinc::HomologyGroup& h, Int budget) {
    DInvariantTable tbl;
    tbl.rank = f.rank;
    tbl.det_q = f.det_q;
    const Int classes = h.order();
    if (classes > budget)
        throw BudgetExceeded("class count " + std::to_string(classes) +
                             " exceeds budget " + std::to_string(budget));
    for (const SpincClass& c : spinc::enumerate_classes(f, h)) {
        Rational d = d_invariant(f, c);
        tbl.entries.emplace_back(c.id, d);
        tbl.by_id.emplace(c.id, d);
    }
    return tbl;
}

DInvariantTable d_table(const GoeritzForm& f, Int budget) {
    return d_table(f, spinc::homology_group(f), budget);
}

Int certified_radius(const GoeritzForm& f, const SpincClass& c) {
    if (f.rank == 0) return 0;
    const IntMatrix p = -f.q;
    const RatVector target = -class_center(f, c);
    const IntVector seed = seed_vector(target);
    RatVector seed_diff = seed.cast<Rational>() - target;
    const Rational v0 = positive_form_value(p, seed_diff);
    return ceil_sqrt(v0 / lambda_min_bound(f)) + 1;
}

Rational brute_force_max(const GoeritzForm& f, const SpincClass& c, Int radius) {
    if (f.rank == 0) return Rational(0);
    const Int certified = certified_radius(f, c);
    if (radius < certified)
        throw std::invalid_argument("radius " + std::to_string(radius) +
                                    " below certified bound " + std::to_string(certified));
    const RatVector target = -class_center(f, c);
    const IntVector seed = seed_vector(target);

    // |rep + 2 v^T Q|^2 = |rep|^2 + 4 (rep . v + v^T Q v): integer except for
    // the constant term, evaluated over the box 2v in seed + [-2r, 2r]^b.
    const Rational const_term = dual_norm_sq(f, c.representative);
    const Index b = f.rank;
    IntVector v(b);
    Int best_var = 0;
    bool have = false;
    std::vector<Int> lo(static_cast<std::size_t>(b)), hi(static_cast<std::size_t>(b));
    for (Index i = 0; i < b; ++i) {
        lo[static_cast<std::size_t>(i)] = seed(i) / 2 - radius;
        hi[static_cast<std::size_t>(i)] = seed(i) / 2 + radius;
        v(i) = lo[static_cast<std::size_t>(i)];
    }
    for (;;) {
        Int quad = 0;
        Int lin = 0;
        for (Index i = 0; i < b; ++i) {
            lin = checked_add(lin, checked_mul(c.representative(i), v(i)));
            Int row = 0;
            for (Index j = 0; j < b; ++j) row = checked_add(row, checked_mul(f.q(i, j), v(j)));
            quad = checked_add(quad, checked_mul(v(i), row));
        }
        const Int var = checked_mul(4, checked_add(lin, quad));
        if (!have || var > best_var) {
            best_var = var;
            have = true;
        }
        Index i = b;
        while (i > 0) {
            --i;
            if (++v(i) <= hi[static_cast<std::size_t>(i)]) break;
            v(i) = lo[static_cast<std::size_t>(i)];
            if (i == 0) return const_term + Rational(best_var);
        }
    }
}

}  // namespace dbcover::dinv
