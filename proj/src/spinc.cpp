#include "dbcover/spinc.hpp"

#include <algorithm>

namespace dbcover::spinc {

namespace {

Int positive_mod(Int a, Int d) {
    Int r = a % d;
    return r < 0 ? r + d : r;
}

}  // namespace

Int HomologyGroup::order() const {
    Int o = 1;
    for (Int d : factors) o = checked_mul(o, d);
    return o;
}

HElem HomologyGroup::coords(const IntVector& x) const {
    IntVector ux = u * x;
    HElem t(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        t[i] = positive_mod(ux(static_cast<Index>(i)), factors[i]);
    return t;
}

IntVector HomologyGroup::lift(const HElem& t) const {
    if (t.size() != factors.size())
        throw std::invalid_argument("homology element has wrong length");
    IntVector raw(static_cast<Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) raw(static_cast<Index>(i)) = t[i];
    return u_inv * raw;
}

HElem HomologyGroup::add(const HElem& a, const HElem& b) const {
    HElem out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        out[i] = positive_mod(a[i] + b[i], factors[i]);
    return out;
}

HElem HomologyGroup::neg(const HElem& a) const {
    HElem out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        out[i] = positive_mod(-a[i], factors[i]);
    return out;
}

bool HomologyGroup::is_zero(const HElem& a) const {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

CharVector base_characteristic(const GoeritzForm& f) {
    return f.q.diagonal().transpose();
}

bool is_characteristic(const GoeritzForm& f, const CharVector& kappa) {
    if (kappa.cols() != f.rank) return false;
    for (Index i = 0; i < f.rank; ++i)
        if (((kappa(i) - f.q(i, i)) % 2 + 2) % 2 != 0) return false;
    return true;
}

HomologyGroup homology_group(const GoeritzForm& f) {
    SmithForm snf = smith_normal_form(f.q);
    HomologyGroup h;
    h.factors = snf.diagonal();
    for (Int d : h.factors)
        if (d == 0) throw std::logic_error("cycle form must be nonsingular");
    h.u = std::move(snf.u);
    h.u_inv = std::move(snf.u_inv);
    h.v = std::move(snf.v);
    h.v_inv = std::move(snf.v_inv);
    return h;
}

SpincClass class_of(const GoeritzForm& f, const HomologyGroup& h, const CharVector& kappa) {
    if (!is_characteristic(f, kappa))
        throw std::invalid_argument("parity mismatch: vector is not characteristic");
    const CharVector base = base_characteristic(f);
    IntVector half = (kappa - base).transpose() / 2;
    return SpincClass{kappa, h.coords(half)};
}

std::vector<SpincClass> enumerate_classes(const GoeritzForm& f, const HomologyGroup& h) {
    const CharVector base = base_characteristic(f);
    std::vector<SpincClass> classes;
    HElem t(h.factors.size(), 0);
    for (;;) {
        CharVector rep = base + 2 * h.lift(t).transpose();
        classes.push_back(SpincClass{std::move(rep), t});
        // Lexicographic increment with per-coordinate radix factors[i].
        std::size_t i = t.size();
        while (i > 0) {
            --i;
            if (++t[i] < h.factors[i]) break;
            t[i] = 0;
            if (i == 0) return classes;
        }
        if (t.empty()) return classes;  // rank zero: single class
    }
}

std::vector<SpincClass> enumerate_classes(const GoeritzForm& f) {
    return enumerate_classes(f, homology_group(f));
}

bool same_class(const GoeritzForm& f, const CharVector& k1, const CharVector& k2) {
    const HomologyGroup h = homology_group(f);
    if (!is_characteristic(f, k1) || !is_characteristic(f, k2))
        throw std::invalid_argument("parity mismatch: vector is not characteristic");
    IntVector half = (k1 - k2).transpose() / 2;
    return h.is_zero(h.coords(half));
}

std::vector<HElem> two_torsion_elements(const HomologyGroup& h) {
    std::vector<HElem> out{HElem(h.factors.size(), 0)};
    for (std::size_t i = 0; i < h.factors.size(); ++i) {
        if (h.factors[i] % 2 != 0) continue;
        const Int half = h.factors[i] / 2;
        const std::size_t count = out.size();
        for (std::size_t j = 0; j < count; ++j) {
            HElem t = out[j];
            t[i] = half;
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpincClass shift_class(const GoeritzForm& f, const HomologyGroup& h,
                       const SpincClass& c, const HElem& alpha) {
    CharVector rep = c.representative + 2 * h.lift(alpha).transpose();
    return class_of(f, h, rep);
}

}  // namespace dbcover::spinc
