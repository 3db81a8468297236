#include "dbcover/openbook.hpp"

#include "dbcover/goeritz.hpp"
#include "dbcover/spinc.hpp"

namespace dbcover::openbook {

MappingClassWord free_reduce(const MappingClassWord& w) {
    MappingClassWord out;
    out.letters.reserve(w.letters.size());
    for (std::int8_t l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

MappingClassWord braid_to_monodromy(const braid::BraidWord& w) {
    MappingClassWord out;
    out.letters.reserve(w.letters.size());
    for (std::int8_t l : w.letters) {
        switch (l) {
            case 1: out.letters.push_back(2); break;    // sigma1 -> tau_b
            case -1: out.letters.push_back(-2); break;
            case 2: out.letters.push_back(1); break;    // sigma2 -> tau_a
            case -2: out.letters.push_back(-1); break;
            default: throw std::logic_error("invalid braid letter");
        }
    }
    return out;
}

Mat2 monodromy_matrix(const MappingClassWord& m) {
    Mat2 ta, tb, ta_inv, tb_inv;
    ta << 1, 1, 0, 1;
    tb << 1, 0, -1, 1;
    ta_inv << 1, -1, 0, 1;
    tb_inv << 1, 0, 1, 1;
    Mat2 out = Mat2::Identity();
    for (std::int8_t l : m.letters) {
        switch (l) {
            case 1: out = out * ta; break;
            case -1: out = out * ta_inv; break;
            case 2: out = out * tb; break;
            case -2: out = out * tb_inv; break;
            default: throw std::logic_error("invalid mapping class letter");
        }
    }
    return out;
}

MappingClassWord flip_step(const MappingClassWord& current, Flip edge) {
    MappingClassWord out = current;
    switch (edge) {
        case Flip::A1:
            out.letters.push_back(-2);
            out.letters.push_back(-1);
            break;
        case Flip::A2:
            out.letters.push_back(1);
            out.letters.push_back(2);
            break;
        case Flip::B1: out.letters.push_back(-1); break;
        case Flip::B2: out.letters.push_back(1); break;
    }
    return free_reduce(out);
}

LayeringPlan compile_layering(const braid::STWord& stw) {
    LayeringPlan plan;
    plan.flips.reserve(stw.letters.size());
    for (std::int8_t l : stw.letters) {
        Flip f;
        switch (l) {
            case 1: f = Flip::B2; break;
            case -1: f = Flip::B1; break;
            case 2: f = Flip::A2; break;
            case -2: f = Flip::A1; break;
            default: throw std::logic_error("invalid st letter");
        }
        plan.flips.push_back(f);
        plan.monodromy = flip_step(plan.monodromy, f);
    }
    plan.tetrahedron_count = static_cast<Index>(plan.flips.size());
    plan.matrix = monodromy_matrix(plan.monodromy);
    return plan;
}

OpenBookHomology h1_open_book(const MappingClassWord& m) {
    const Mat2 mat = monodromy_matrix(m);
    IntMatrix presentation = (mat - Mat2::Identity()).cast<Int>();
    const SmithForm snf = smith_normal_form(presentation);
    OpenBookHomology out;
    Int order = 1;
    for (Int d : snf.diagonal()) {
        if (d == 0) {
            out.finite = false;
            ++out.free_rank;
        } else {
            if (d > 1) out.invariant_factors.push_back(d);
            order = checked_mul(order, d);
        }
    }
    out.order = out.finite ? order : 0;
    return out;
}

CrossCheck crosscheck_h1(const braid::BraidWord& w) {
    CrossCheck out;
    const OpenBookHomology ob = h1_open_book(braid_to_monodromy(w));
    out.open_book_factors = ob.invariant_factors;

    const goeritz::GoeritzForm f =
        goeritz::form_of_graph(graph::black_graph_of_braid(w));
    for (Int d : spinc::homology_group(f).factors)
        if (d > 1) out.cycle_form_factors.push_back(d);

    out.consistent = ob.finite && out.open_book_factors == out.cycle_form_factors;
    return out;
}

const char* flip_name(Flip f) {
    switch (f) {
        case Flip::A1: return "a1";
        case Flip::A2: return "a2";
        case Flip::B1: return "b1";
        case Flip::B2: return "b2";
    }
    return "?";
}

}  // namespace dbcover::openbook
