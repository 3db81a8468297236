#include "dbcover/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace dbcover::bounds {

Rational theta_lower_bound(const GoeritzForm& f, const HomologyGroup& h,
                           const DInvariantTable& tbl, const HElem& alpha) {
    const spinc::CharVector base = spinc::base_characteristic(f);
    bool first = true;
    Rational best(0);
    for (const auto& [id, d] : tbl.entries) {
        spinc::SpincClass c{base + 2 * h.lift(id).transpose(), id};
        const spinc::SpincClass shifted = spinc::shift_class(f, h, c, alpha);
        const Rational gap = tbl.at(shifted.id) - d;
        if (first || best < gap) {
            best = gap;
            first = false;
        }
    }
    return best;
}

Rational nonorientable_genus_bound(const GoeritzForm& f, const HomologyGroup& h,
                                   const DInvariantTable& tbl, const HElem& t) {
    if (h.is_zero(t)) throw std::invalid_argument("torsion class must be nonzero");
    if (!h.is_zero(h.add(t, t)))
        throw std::invalid_argument("class is not 2-torsion");
    return Rational(2) * theta_lower_bound(f, h, tbl, t);
}

std::variant<std::array<Rational, 3>, InequalityFailure>
taut_conn_norm_bounds(const std::array<Rational, 3>& h) {
    for (int i = 0; i < 3; ++i) {
        const Rational lhs = h[static_cast<std::size_t>(i)] +
                             h[static_cast<std::size_t>((i + 1) % 3)];
        const Rational rhs = h[static_cast<std::size_t>((i + 2) % 3)] + Rational(2);
        if (lhs < rhs)
            return InequalityFailure{
                i + 1, "h" + std::to_string(i + 1) + " + h" + std::to_string((i + 1) % 3 + 1) +
                           " < h" + std::to_string((i + 2) % 3 + 1) + " + 2"};
    }
    return std::array<Rational, 3>{h[0] - Rational(2), h[1] - Rational(2),
                                   h[2] - Rational(2)};
}

std::array<Int, 3> family_norm_upper(braid::Family kind, const std::vector<Int>& params) {
    if (kind == braid::Family::Even) {
        if (params.size() < 2 || params.size() % 2 != 0)
            throw std::invalid_argument("even family needs 2n parameters");
        const Int n = static_cast<Int>(params.size()) / 2;
        Int odd_sum = 0, even_sum = 0;
        for (std::size_t i = 0; i < params.size(); ++i)
            (i % 2 == 0 ? odd_sum : even_sum) += params[i];  // a_1 has odd index
        const Int total = odd_sum + even_sum;
        return {std::max<Int>(odd_sum + n - 2, 0), std::max<Int>(even_sum + n - 2, 0),
                std::max<Int>(total - 2, 0)};
    }
    if (params.size() != 3) throw std::invalid_argument("odd family needs 3 parameters");
    return {params[0] + params[1], params[1] + params[2], params[2] + params[0]};
}

Int jrt_complexity_lower(const std::array<Rational, 3>& norms) {
    return (Rational(2) + norms[0] + norms[1] + norms[2]).ceil();
}

std::optional<FamilyInput> recognize_family(const std::vector<Int>& sides) {
    const bool all_even = std::all_of(sides.begin(), sides.end(),
                                      [](Int q) { return q % 2 == 0; });
    if (all_even && sides.size() % 2 == 0 && sides.size() >= 2) {
        FamilyInput fam{braid::Family::Even, {}};
        for (Int q : sides) fam.params.push_back(q / 2);
        return fam;
    }
    const bool all_odd = std::all_of(sides.begin(), sides.end(),
                                     [](Int q) { return q % 2 == 1; });
    if (all_odd && sides.size() == 3) {
        FamilyInput fam{braid::Family::Odd, {}};
        for (Int q : sides) fam.params.push_back((q - 1) / 2);
        return fam;
    }
    return std::nullopt;
}

std::array<HElem, 3> designated_torsion_classes(const GoeritzForm& f,
                                                const HomologyGroup& h,
                                                const FamilyInput& fam) {
    const Index b = f.rank;
    auto halved_image = [&](const IntVector& v) {
        IntVector qv = f.q * v;
        for (Index i = 0; i < b; ++i) {
            if (qv(i) % 2 != 0) throw std::logic_error("q(v) is not even");
            qv(i) /= 2;
        }
        return h.coords(qv);
    };
    if (fam.kind == braid::Family::Even) {
        IntVector odd = IntVector::Zero(b), even = IntVector::Zero(b), all = IntVector::Ones(b);
        for (Index i = 0; i < b; ++i) (i % 2 == 0 ? odd : even)(i) = 1;  // e_1 is index 0
        return {halved_image(odd), halved_image(even), halved_image(all)};
    }
    IntVector d12 = IntVector::Zero(3), d23 = IntVector::Zero(3), d31 = IntVector::Zero(3);
    d12(0) = 1; d12(1) = -1;
    d23(1) = 1; d23(2) = -1;
    d31(2) = 1; d31(0) = -1;
    return {halved_image(d12), halved_image(d23), halved_image(d31)};
}

namespace {

std::vector<HElem> nonzero_two_torsion(const HomologyGroup& h) {
    std::vector<HElem> out;
    for (const HElem& t : spinc::two_torsion_elements(h))
        if (!h.is_zero(t)) out.push_back(t);
    return out;
}

}  // namespace

BoundsReport report_from_table(const GoeritzForm& f, const HomologyGroup& h,
                               const DInvariantTable& tbl,
                               const std::optional<FamilyInput>& fam,
                               std::optional<Int> layering_upper,
                               const ReportOptions& opts) {
    BoundsReport rep;
    rep.rank = f.rank;
    rep.det_q = f.det_q;
    for (Int d : h.factors)
        if (d > 1) rep.invariant_factors.push_back(d);

    if (h.order() <= opts.theta_cap) {
        for (const auto& [id, d] : tbl.entries)
            rep.theta_bounds.emplace_back(id, theta_lower_bound(f, h, tbl, id));
    } else {
        rep.theta_elided = true;
    }

    const std::vector<HElem> torsion = nonzero_two_torsion(h);
    std::array<HElem, 3> ordered{};
    const bool rank_two = torsion.size() == 3;
    if (rank_two && fam) {
        ordered = designated_torsion_classes(f, h, *fam);
        // The designated classes must be exactly the nonzero 2-torsion set.
        std::vector<HElem> check(ordered.begin(), ordered.end());
        std::sort(check.begin(), check.end());
        if (check != torsion)
            throw std::logic_error("designated torsion classes disagree with 2-torsion of H");
    } else if (rank_two) {
        std::copy(torsion.begin(), torsion.end(), ordered.begin());
    }

    if (rank_two) {
        NormSection ns;
        ns.torsion_classes = ordered;
        for (int i = 0; i < 3; ++i) {
            ns.genus_bounds[static_cast<std::size_t>(i)] = nonorientable_genus_bound(
                f, h, tbl, ordered[static_cast<std::size_t>(i)]);
            rep.genus_bounds.emplace_back(ordered[static_cast<std::size_t>(i)],
                                          ns.genus_bounds[static_cast<std::size_t>(i)]);
        }
        auto norms = taut_conn_norm_bounds(ns.genus_bounds);
        if (std::holds_alternative<InequalityFailure>(norms)) {
            ns.failure = std::get<InequalityFailure>(norms);
            rep.flags.push_back("norm bounds unavailable: connectedness inequality failed (" +
                                ns.failure->message + ")");
        } else {
            std::array<Rational, 3> lower = std::get<std::array<Rational, 3>>(norms);
            for (Rational& x : lower)
                if (x < Rational(0)) x = Rational(0);  // chi_- is nonnegative
            ns.lower = lower;
            if (fam) ns.upper = family_norm_upper(fam->kind, fam->params);
            ns.exact = ns.upper && Rational((*ns.upper)[0]) == lower[0] &&
                       Rational((*ns.upper)[1]) == lower[1] &&
                       Rational((*ns.upper)[2]) == lower[2];
            std::array<Rational, 3> for_jrt = lower;
            if (ns.exact)
                for (int i = 0; i < 3; ++i)
                    for_jrt[static_cast<std::size_t>(i)] =
                        Rational((*ns.upper)[static_cast<std::size_t>(i)]);
            rep.complexity_lower = jrt_complexity_lower(for_jrt);
            rep.flags.push_back(
                "complexity lower bound assumes the manifold is irreducible and atoroidal");
        }
        rep.norms = ns;
    } else {
        for (const HElem& t : torsion)
            rep.genus_bounds.emplace_back(t, nonorientable_genus_bound(f, h, tbl, t));
        if (!torsion.empty())
            rep.flags.push_back(
                "norm and complexity bounds need exactly three nonzero order-2 classes; found " +
                std::to_string(torsion.size()));
    }

    rep.complexity_upper = layering_upper;
    rep.flags.push_back("genus bounds are unconditional");
    rep.flags.push_back(
        "incompressible-surface surjectivity condition: assumed, not verified "
        "(norm bounds are derived through the connectedness workaround instead)");
    return rep;
}

BoundsReport bounds_report(const graph::BlackGraph& g, const ReportOptions& opts) {
    const GoeritzForm f = goeritz::form_of_graph(g);
    const HomologyGroup h = spinc::homology_group(f);
    const DInvariantTable tbl = dinv::d_table(f, h, opts.budget);
    return report_from_table(f, h, tbl, std::nullopt, std::nullopt, opts);
}

BoundsReport bounds_report(const braid::BraidWord& w, const ReportOptions& opts) {
    const std::vector<Int> sides = graph::wheel_sides_of_braid(w);
    const GoeritzForm f = goeritz::form_of_graph(graph::wheel_graph(sides));
    const HomologyGroup h = spinc::homology_group(f);
    const DInvariantTable tbl = dinv::d_table(f, h, opts.budget);
    const std::optional<FamilyInput> fam = recognize_family(sides);
    const braid::STLengthBound layering = braid::st_length_upper_bound(w, opts.k_max);
    return report_from_table(f, h, tbl, fam, static_cast<Int>(layering.length), opts);
}

}  // namespace dbcover::bounds
