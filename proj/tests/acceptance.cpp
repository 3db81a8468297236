// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line
// with its elapsed time; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "dbcover/bounds.hpp"
#include "dbcover/openbook.hpp"
#include "dbcover/report.hpp"

using namespace dbcover;
using braid::Family;
using spinc::HElem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed <= budget_seconds) {
        std::cout << "[PASS] criterion " << number << ": " << name << " ("
                  << static_cast<int>(elapsed * 1000) << " ms)\n";
    } else {
        ++failures;
        std::cout << "[FAIL] criterion " << number << ": " << name;
        if (!error.empty()) std::cout << " -- " << error;
        if (elapsed > budget_seconds)
            std::cout << " -- exceeded " << budget_seconds << " s budget (" << elapsed << " s)";
        std::cout << "\n";
    }
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename A, typename B>
void expect_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
        std::ostringstream os;
        os << what << ": got " << a << ", expected " << b;
        throw Failure(os.str());
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

struct Pipeline {
    goeritz::GoeritzForm f;
    spinc::HomologyGroup h;
    dinv::DInvariantTable tbl;
};

Pipeline pipeline(const graph::BlackGraph& g) {
    Pipeline p;
    p.f = goeritz::form_of_graph(g);
    p.h = spinc::homology_group(p.f);
    p.tbl = dinv::d_table(p.f, p.h, 1'000'000);
    return p;
}

std::vector<graph::BlackGraph> random_graph_corpus(std::size_t count, Int max_det) {
    std::mt19937_64 rng(20240915);
    std::vector<graph::BlackGraph> out;
    while (out.size() < count) {
        const Index n = 2 + static_cast<Index>(rng() % 5);
        std::vector<graph::Edge> edges;
        for (Index v = 1; v < n; ++v)
            edges.push_back({static_cast<Index>(rng() % static_cast<std::uint64_t>(v)), v});
        const Index extra = 1 + static_cast<Index>(rng() % 5);  // b <= 5
        for (Index i = 0; i < extra; ++i) {
            Index a = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
            Index b = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
            if (a == b) b = (b + 1) % n;
            edges.push_back({a, b});
        }
        const graph::BlackGraph g = graph::make_graph(n, edges);
        const goeritz::GoeritzForm f = goeritz::form_of_graph(g);
        if (std::abs(f.det_q) > max_det) continue;
        out.push_back(g);
    }
    return out;
}

IntRowVector rv(std::initializer_list<Int> xs) {
    IntRowVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (Int x : xs) v(i++) = x;
    return v;
}

Rational d_of(const Pipeline& p, const IntRowVector& kappa) {
    return p.tbl.at(spinc::class_of(p.f, p.h, kappa).id);
}

void check_odd_family(const std::array<Int, 3>& prm) {
    const Int a = prm[0], b = prm[1], c = prm[2];
    const braid::BraidWord w = braid::family_braid(Family::Odd, {a, b, c});
    const bounds::BoundsReport rep = bounds::bounds_report(w);
    expect(rep.norms.has_value() && rep.norms->lower.has_value(),
           "odd family must produce norms");
    expect(rep.norms->exact, "odd family norms must be exact");
    expect_eq((*rep.norms->lower)[0], Rational(a + b), "norm 1");
    expect_eq((*rep.norms->lower)[1], Rational(b + c), "norm 2");
    expect_eq((*rep.norms->lower)[2], Rational(c + a), "norm 3");
    expect_eq(*rep.complexity_lower, 2 * (a + b + c) + 2, "complexity lower");
    expect_eq(*rep.complexity_upper, 2 * (a + b + c) + 9, "complexity upper");
}

}  // namespace

int main() {
    criterion(1, "2x2 family reproduction (a=1, b=2)", 1.0, [] {
        const Pipeline p = pipeline(graph::black_graph_of_braid(
            braid::family_braid(Family::Even, {1, 2})));
        IntMatrix expected(2, 2);
        expected << -4, 2, 2, -6;
        expect(p.f.q == expected, "Q mismatch");
        expect_eq(d_of(p, rv({0, 0})), Rational(1, 2), "d[kappa0]");
        expect_eq(d_of(p, rv({-4, 2})), Rational(-1, 2), "d[kappa1]");
        expect_eq(d_of(p, rv({2, -6})), Rational(-1), "d[kappa2]");
        expect_eq(d_of(p, rv({-2, -4})), Rational(-1), "d[kappa3]");

        const auto t = bounds::designated_torsion_classes(
            p.f, p.h, bounds::FamilyInput{Family::Even, {1, 2}});
        expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, t[0]), Rational(2),
                  "genus bound 1");
        expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, t[1]), Rational(3),
                  "genus bound 2");
        expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, t[2]), Rational(3),
                  "genus bound 3");

        const bounds::BoundsReport rep =
            bounds::bounds_report(braid::family_braid(Family::Even, {1, 2}));
        expect(rep.norms && rep.norms->lower && rep.norms->exact, "norms must be exact");
        expect_eq((*rep.norms->lower)[0], Rational(0), "norm 1");
        expect_eq((*rep.norms->lower)[1], Rational(1), "norm 2");
        expect_eq((*rep.norms->lower)[2], Rational(1), "norm 3");
        expect((*rep.norms->upper == std::array<Int, 3>{0, 1, 1}), "disk-lift uppers");
    });

    criterion(2, "2n-gon family at n=2, a_i=1", 1.0, [] {
        const bounds::BoundsReport rep =
            bounds::bounds_report(braid::family_braid(Family::Even, {1, 1, 1, 1}));
        expect(rep.norms && rep.norms->lower && rep.norms->exact, "norms must be exact");
        for (int i = 0; i < 3; ++i)
            expect_eq((*rep.norms->lower)[static_cast<std::size_t>(i)], Rational(2),
                      "norm " + std::to_string(i + 1));
        expect_eq(*rep.complexity_lower, 8, "complexity lower 2n-4+2*sum");
        expect_eq(*rep.complexity_upper, 16, "complexity upper 4n+2*sum");
    });

    criterion(3, "3-sided family over the parameter grid", 5.0, [] {
        for (const auto& prm :
             {std::array<Int, 3>{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 1, 0}})
            check_odd_family(prm);
    });

    criterion(4, "maximizer values from the generic lattice search", 5.0, [] {
        // Even family grid.
        for (auto a : {std::vector<Int>{1, 2}, {1, 1, 1, 1}}) {
            std::vector<Int> sides;
            for (Int x : a) sides.push_back(2 * x);
            const Pipeline p = pipeline(graph::wheel_graph(sides));
            const Index b = p.f.rank;
            const Int n = static_cast<Int>(b) / 2;
            IntVector odd = IntVector::Zero(b), even = IntVector::Zero(b);
            Int so = 0, se = 0;
            for (Index i = 0; i < b; ++i) {
                if (i % 2 == 0) {
                    odd(i) = 1;
                    so += a[static_cast<std::size_t>(i)];
                } else {
                    even(i) = 1;
                    se += a[static_cast<std::size_t>(i)];
                }
            }
            const IntRowVector k1 = (p.f.q * odd).transpose();
            const IntRowVector k2 = (p.f.q * even).transpose();
            const IntRowVector k3 = k1 + k2;
            auto max_of = [&](const IntRowVector& k) {
                return dinv::max_kappa_norm_sq(p.f, spinc::class_of(p.f, p.h, k)).value;
            };
            expect_eq(max_of(k1), Rational(-2 * (n + so)), "|kappa1|^2");
            expect_eq(max_of(k2), Rational(-2 * (n + se)), "|kappa2|^2");
            expect_eq(max_of(k3), Rational(-2 * (so + se)), "|kappa3|^2");
        }
        // 3-sided family grid: the designated vectors attain their class
        // maxima, the kappa0/kappa1 d-drop is a+b+2, and the remaining two
        // order-2 classes bound b+c+2 and c+a+2.
        for (const auto& prm :
             {std::array<Int, 3>{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 1, 0}}) {
            const Int a = prm[0], b = prm[1], c = prm[2];
            const Pipeline p =
                pipeline(graph::wheel_graph({2 * a + 1, 2 * b + 1, 2 * c + 1}));
            const IntRowVector k0 = rv({1, -1, 1});
            IntVector v12 = IntVector::Zero(3);
            v12(0) = 1;
            v12(1) = -1;
            const IntRowVector k1 = k0 + (p.f.q * v12).transpose();
            auto max_of = [&](const IntRowVector& k) {
                return dinv::max_kappa_norm_sq(p.f, spinc::class_of(p.f, p.h, k)).value;
            };
            expect_eq(max_of(k0), goeritz::dual_norm_sq(p.f, k0), "kappa0 attains its class max");
            expect_eq(max_of(k1), goeritz::dual_norm_sq(p.f, k1), "kappa1 attains its class max");
            expect_eq(Rational(2) * (d_of(p, k0) - d_of(p, k1)), Rational(a + b + 2),
                      "2(d[k0]-d[k1])");
            const auto t = bounds::designated_torsion_classes(
                p.f, p.h, bounds::FamilyInput{Family::Odd, {a, b, c}});
            expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, t[1]),
                      Rational(b + c + 2), "second class bound");
            expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, t[2]),
                      Rational(c + a + 2), "third class bound");
        }
    });

    criterion(5, "oracle equivalence on 50 randomized graphs", 60.0, [] {
        for (const graph::BlackGraph& g : random_graph_corpus(50, 200)) {
            const goeritz::GoeritzForm f = goeritz::form_of_graph(g);
            const spinc::HomologyGroup h = spinc::homology_group(f);
            for (const spinc::SpincClass& c : spinc::enumerate_classes(f, h)) {
                const Rational enumerated = dinv::max_kappa_norm_sq(f, c).value;
                const Rational boxed =
                    dinv::brute_force_max(f, c, dinv::certified_radius(f, c));
                if (enumerated != boxed)
                    throw Failure("enumeration disagrees with certified box maximum");
            }
        }
    });

    criterion(6, "doubled-edge sanity (real projective space)", 1.0, [] {
        const Pipeline p = pipeline(graph::make_graph(2, {{0, 1}, {0, 1}}));
        std::multiset<Rational> ds;
        for (const auto& [id, d] : p.tbl.entries) ds.insert(d);
        expect(ds == std::multiset<Rational>{Rational(-1, 4), Rational(1, 4)},
               "d values must be {1/4, -1/4}");
        const auto torsion = spinc::two_torsion_elements(p.h);
        expect_eq(torsion.size(), std::size_t(2), "two torsion elements incl. zero");
        expect_eq(bounds::nonorientable_genus_bound(p.f, p.h, p.tbl, torsion.back()),
                  Rational(1), "genus bound for the nonzero class");
    });

    criterion(7, "homology cross-check on 20 randomized family braids", 10.0, [] {
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 20; ++trial) {
            braid::BraidWord w;
            if (trial % 2 == 0) {
                const std::size_t n = 1 + rng() % 2;
                std::vector<Int> params;
                for (std::size_t i = 0; i < 2 * n; ++i)
                    params.push_back(1 + static_cast<Int>(rng() % 4));
                w = braid::family_braid(Family::Even, params);
            } else {
                w = braid::family_braid(
                    Family::Odd, {static_cast<Int>(rng() % 5), static_cast<Int>(rng() % 5),
                                  static_cast<Int>(rng() % 5)});
            }
            const openbook::CrossCheck cc = openbook::crosscheck_h1(w);
            if (!cc.consistent)
                throw Failure("invariant factors disagree for " + braid::to_token_string(w));
        }
    });

    criterion(8, "layering compiler flip counts and involutivity", 5.0, [] {
        for (auto a : {std::vector<Int>{1, 2}, {2, 1}, {1, 1, 1, 1}, {2, 1, 3, 1}}) {
            const Int n = static_cast<Int>(a.size()) / 2;
            Int sum = 0;
            for (Int x : a) sum += x;
            const auto bound =
                braid::st_length_upper_bound(braid::family_braid(Family::Even, a), 2);
            const openbook::LayeringPlan plan = openbook::compile_layering(bound.witness);
            expect_eq(plan.tetrahedron_count, 4 * n + 2 * sum, "even family flip count");
        }
        for (const auto& prm :
             {std::array<Int, 3>{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 1, 0}, {4, 2, 3}}) {
            const auto bound = braid::st_length_upper_bound(
                braid::family_braid(Family::Odd, {prm[0], prm[1], prm[2]}), 2);
            const openbook::LayeringPlan plan = openbook::compile_layering(bound.witness);
            expect_eq(plan.tetrahedron_count, 2 * (prm[0] + prm[1] + prm[2]) + 9,
                      "odd family flip count");
        }
        // Involutivity on 1000 random flip sequences.
        std::mt19937_64 rng(515151);
        const openbook::Flip flips[4] = {openbook::Flip::A1, openbook::Flip::A2,
                                         openbook::Flip::B1, openbook::Flip::B2};
        for (int trial = 0; trial < 1000; ++trial) {
            openbook::MappingClassWord w;
            const std::size_t len = rng() % 10;
            for (std::size_t i = 0; i < len; ++i) w = openbook::flip_step(w, flips[rng() % 4]);
            const auto b12 = openbook::flip_step(openbook::flip_step(w, openbook::Flip::B1),
                                                 openbook::Flip::B2);
            const auto a12 = openbook::flip_step(openbook::flip_step(w, openbook::Flip::A1),
                                                 openbook::Flip::A2);
            if (!(b12 == w) || !(a12 == w))
                throw Failure("flip pair failed to cancel");
        }
    });

    criterion(9, "structural invariants across the corpus", 30.0, [] {
        // Mapping-class relations in SL2(Z).
        openbook::MappingClassWord aba, bab;
        aba.letters = {1, 2, 1};
        bab.letters = {2, 1, 2};
        expect(openbook::monodromy_matrix(aba) == openbook::monodromy_matrix(bab),
               "braid relation");
        openbook::MappingClassWord ab6;
        for (int i = 0; i < 6; ++i) {
            ab6.letters.push_back(1);
            ab6.letters.push_back(2);
        }
        expect(openbook::monodromy_matrix(ab6) == openbook::Mat2::Identity(),
               "(TaTb)^6 = I");

        std::vector<graph::BlackGraph> corpus = random_graph_corpus(25, 200);
        corpus.push_back(graph::make_graph(2, {{0, 1}, {0, 1}}));
        for (auto sides : {std::vector<Int>{2, 4}, {2, 2, 2, 2}, {1, 1, 1}, {3, 1, 5},
                           {5, 3, 1}, {2, 2}})
            corpus.push_back(graph::wheel_graph(sides));

        for (const graph::BlackGraph& g : corpus) {
            const auto tree = graph::spanning_tree(g);
            const auto circuits = graph::circuit_matrix(g, tree);
            const goeritz::GoeritzForm f = goeritz::gram_matrix(circuits);
            expect(f.q == -(circuits.rows * circuits.rows.transpose()).eval(),
                   "Q = -N N^T");
            expect(goeritz::is_negative_definite(f.q), "negative definiteness");

            const spinc::HomologyGroup h = spinc::homology_group(f);
            const auto classes = spinc::enumerate_classes(f, h);
            expect_eq(static_cast<Int>(classes.size()), std::abs(f.det_q),
                      "class count = |det Q|");

            const dinv::DInvariantTable tbl = dinv::d_table(f, h, 1'000'000);
            for (const spinc::SpincClass& c : classes) {
                const auto neg = spinc::class_of(f, h, (-c.representative).eval());
                if (tbl.at(c.id) != tbl.at(neg.id))
                    throw Failure("conjugation symmetry of d");
            }
            if (classes.size() <= 64) {
                for (const spinc::SpincClass& c : classes) {
                    std::set<HElem> hits;
                    for (const spinc::SpincClass& as_elem : classes)
                        hits.insert(spinc::shift_class(f, h, c, as_elem.id).id);
                    if (hits.size() != classes.size())
                        throw Failure("H-action is not free and transitive");
                }
            }
        }
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
