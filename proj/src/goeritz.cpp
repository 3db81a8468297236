#include "dbcover/goeritz.hpp"

namespace dbcover::goeritz {

GoeritzForm gram_matrix(const graph::CircuitMatrix& n) {
    GoeritzForm f;
    f.rank = n.rows.rows();
    f.q = -(n.rows * n.rows.transpose());
    if (f.q != f.q.transpose()) throw std::logic_error("gram matrix not symmetric");
    if (!is_negative_definite(f.q))
        throw std::logic_error("circuit rows are dependent: form is not negative definite");
    auto [det, inv] = det_and_inverse(f.q);
    f.det_q = det;
    f.q_inv = std::move(inv);
    return f;
}

GoeritzForm form_of_graph(const graph::BlackGraph& g) {
    return gram_matrix(graph::circuit_matrix(g, graph::spanning_tree(g)));
}

Rational dual_norm_sq(const GoeritzForm& f, const IntRowVector& alpha) {
    if (alpha.cols() != f.rank)
        throw std::invalid_argument("dual_norm_sq: vector length differs from rank");
    RatRowVector a = alpha.cast<Rational>();
    return (a * f.q_inv * a.transpose())(0, 0);
}

std::pair<Int, RatMatrix> det_and_inverse(const IntMatrix& q) {
    const Int det = bareiss_determinant(q);
    if (det == 0) throw std::domain_error("matrix is singular");
    RatMatrix inv = rational_inverse(q);
    // Exactness check: q * inv must be the identity.
    RatMatrix prod = q.cast<Rational>() * inv;
    for (Index i = 0; i < q.rows(); ++i)
        for (Index j = 0; j < q.cols(); ++j)
            if (prod(i, j) != Rational(i == j ? 1 : 0))
                throw std::logic_error("inverse verification failed");
    return {det, std::move(inv)};
}

}  // namespace dbcover::goeritz
