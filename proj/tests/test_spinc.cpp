#include <doctest.h>

#include <random>
#include <set>

#include "dbcover/spinc.hpp"

using namespace dbcover;
using namespace dbcover::spinc;

namespace {

GoeritzForm form_of(const IntMatrix& q) {
    GoeritzForm f;
    f.rank = q.rows();
    f.q = q;
    auto [det, inv] = goeritz::det_and_inverse(q);
    f.det_q = det;
    f.q_inv = std::move(inv);
    return f;
}

IntMatrix mat1(Int a) {
    IntMatrix m(1, 1);
    m << a;
    return m;
}

IntMatrix case1_matrix() {
    IntMatrix q(2, 2);
    q << -4, 2, 2, -6;
    return q;
}

IntMatrix theta_matrix() {
    IntMatrix q(3, 3);
    q << -3, 1, 1, 1, -3, 1, 1, 1, -3;
    return q;
}

IntRowVector rv(std::initializer_list<Int> xs) {
    IntRowVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (Int x : xs) v(i++) = x;
    return v;
}

}  // namespace

TEST_CASE("base characteristic is the diagonal and is characteristic") {
    const GoeritzForm f1 = form_of(mat1(-2));
    CHECK(base_characteristic(f1) == rv({-2}));

    const GoeritzForm f = form_of(case1_matrix());
    CHECK(base_characteristic(f) == rv({-4, -6}));
    CHECK(is_characteristic(f, base_characteristic(f)));
    CHECK(is_characteristic(f, rv({0, 0})));
    CHECK_FALSE(is_characteristic(f, rv({1, 0})));

    const GoeritzForm t = form_of(theta_matrix());
    CHECK(base_characteristic(t) == rv({-3, -3, -3}));
    CHECK(is_characteristic(t, rv({1, -1, 1})));
    CHECK_FALSE(is_characteristic(t, rv({0, 0, 0})));  // odd parity required
}

TEST_CASE("homology groups") {
    CHECK(homology_group(form_of(mat1(-2))).factors == std::vector<Int>{2});
    CHECK(homology_group(form_of(case1_matrix())).factors == std::vector<Int>{2, 10});
    const HomologyGroup h = homology_group(form_of(theta_matrix()));
    CHECK(h.order() == 16);
    CHECK(h.factors == std::vector<Int>{1, 4, 4});
}

TEST_CASE("class enumeration counts |det Q|") {
    CHECK(enumerate_classes(form_of(mat1(-2))).size() == 2);
    CHECK(enumerate_classes(form_of(case1_matrix())).size() == 20);
    CHECK(enumerate_classes(form_of(theta_matrix())).size() == 16);
    // Rank zero: the empty form has a single class.
    const GoeritzForm s3 = form_of(IntMatrix(0, 0));
    CHECK(enumerate_classes(s3).size() == 1);
    CHECK(enumerate_classes(s3).front().representative.size() == 0);
}

TEST_CASE("representatives are characteristic and distinct per class") {
    for (const IntMatrix& q : {case1_matrix(), theta_matrix()}) {
        const GoeritzForm f = form_of(q);
        const HomologyGroup h = homology_group(f);
        std::set<HElem> ids;
        for (const SpincClass& c : enumerate_classes(f, h)) {
            CHECK(is_characteristic(f, c.representative));
            CHECK(class_of(f, h, c.representative).id == c.id);
            ids.insert(c.id);
        }
        CHECK(ids.size() == static_cast<std::size_t>(std::abs(f.det_q)));
    }
}

TEST_CASE("same_class: worked examples") {
    const GoeritzForm f1 = form_of(mat1(-2));
    CHECK(same_class(f1, rv({0}), rv({4})));  // 4 = 2 q(-1)
    CHECK_FALSE(same_class(f1, rv({0}), rv({2})));
    CHECK(same_class(f1, rv({-2}), rv({2})));

    const GoeritzForm f = form_of(case1_matrix());
    CHECK(same_class(f, rv({0, 0}), rv({0, 0})));
    CHECK_FALSE(same_class(f, rv({0, 0}), rv({-4, 2})));  // kappa0 vs kappa1
    CHECK(same_class(f, rv({-4, 2}), rv({-4, 2})));
    // kappa1 = q(e1): shifting by 2q(v) stays in class.
    CHECK(same_class(f, rv({-4, 2}), rv({-4 - 8, 2 + 4})));
    CHECK_THROWS_AS(same_class(f, rv({1, 0}), rv({0, 0})), std::invalid_argument);
}

TEST_CASE("two-torsion elements") {
    const HomologyGroup h = homology_group(form_of(case1_matrix()));  // Z/2 + Z/10
    const auto tt = two_torsion_elements(h);
    CHECK(tt.size() == 4);
    CHECK(h.is_zero(tt.front()));
    for (const HElem& t : tt) CHECK(h.is_zero(h.add(t, t)));

    const HomologyGroup h3 = homology_group(form_of(mat1(-3)));  // Z/3
    CHECK(two_torsion_elements(h3).size() == 1);

    const HomologyGroup ht = homology_group(form_of(theta_matrix()));  // Z/4 + Z/4
    CHECK(two_torsion_elements(ht).size() == 4);
}

TEST_CASE("wheel-family forms have exactly three nonzero order-2 classes") {
    using graph::wheel_graph;
    for (auto sides : {std::vector<Int>{2, 4}, {2, 2}, {4, 6}, {2, 2, 2, 2}, {1, 1, 1},
                       {3, 1, 5}, {3, 3, 3}}) {
        const GoeritzForm f = goeritz::form_of_graph(wheel_graph(sides));
        const HomologyGroup h = homology_group(f);
        CHECK(two_torsion_elements(h).size() == 4);
    }
}

TEST_CASE("shift action: worked example and torsor structure") {
    const GoeritzForm f = form_of(case1_matrix());
    const HomologyGroup h = homology_group(f);

    const SpincClass c0 = class_of(f, h, rv({0, 0}));
    const SpincClass c1 = class_of(f, h, rv({-4, 2}));
    // alpha = (kappa1 - kappa0)/2 as an H element maps [kappa0] to [kappa1].
    const HElem alpha = h.coords(IntVector((rv({-2, 1})).transpose()));
    CHECK(shift_class(f, h, c0, alpha).id == c1.id);
    // Zero shift fixes, double shift (order 2) returns.
    CHECK(shift_class(f, h, c0, HElem{0, 0}).id == c0.id);
    CHECK(h.is_zero(h.add(alpha, alpha)));
    CHECK(shift_class(f, h, shift_class(f, h, c0, alpha), alpha).id == c0.id);

    // Free transitive action, exhaustively for small groups.
    for (const IntMatrix& q : {mat1(-2), mat1(-7), case1_matrix(), theta_matrix()}) {
        const GoeritzForm fq = form_of(q);
        const HomologyGroup hq = homology_group(fq);
        const auto classes = enumerate_classes(fq, hq);
        if (classes.size() > 64) continue;
        // Enumerate H elements out of the class ids themselves (same radix).
        for (const SpincClass& c : classes) {
            std::set<HElem> hits;
            for (const SpincClass& as_elem : classes)
                hits.insert(shift_class(fq, hq, c, as_elem.id).id);
            CHECK(hits.size() == classes.size());
        }
    }
}

TEST_CASE("shift is independent of the representative") {
    std::mt19937_64 rng(59);
    const GoeritzForm f = form_of(theta_matrix());
    const HomologyGroup h = homology_group(f);
    const auto classes = enumerate_classes(f, h);
    std::uniform_int_distribution<Int> dist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const SpincClass& c = classes[rng() % classes.size()];
        IntVector v(3);
        for (Index i = 0; i < 3; ++i) v(i) = dist(rng);
        const IntRowVector other = c.representative + 2 * (f.q * v).transpose();
        const SpincClass c2 = class_of(f, h, other);
        CHECK(c2.id == c.id);
        const HElem alpha = classes[rng() % classes.size()].id;
        CHECK(shift_class(f, h, c, alpha).id == shift_class(f, h, c2, alpha).id);
    }
}

TEST_CASE("negation is a class involution") {
    for (const IntMatrix& q : {mat1(-2), case1_matrix(), theta_matrix()}) {
        const GoeritzForm f = form_of(q);
        const HomologyGroup h = homology_group(f);
        std::set<HElem> seen;
        for (const SpincClass& c : enumerate_classes(f, h)) {
            const SpincClass neg = class_of(f, h, (-c.representative).eval());
            const SpincClass back = class_of(f, h, (-neg.representative).eval());
            CHECK(back.id == c.id);
            seen.insert(neg.id);
        }
        CHECK(seen.size() == static_cast<std::size_t>(std::abs(f.det_q)));
    }
}
