#pragma once

#include "liecx/lie_algebra.hpp"

namespace liecx {

/// Nondegenerate symmetric bilinear form, stored as the Gram matrix
/// g(i,j) = g(e_i, e_j).
template <class K>
class Metric {
public:
    static Metric create(Mat<K> g) {
        if (g.rows() != g.cols()) throw DimensionError("metric matrix must be square");
        if (!g.is_symmetric()) throw InvariantViolation("metric matrix is not symmetric");
        Metric m;
        m.g_ = std::move(g);
        // nondegeneracy check; throws SingularMatrixError when degenerate
        try {
            m.ginv_ = m.g_.inverse();
        } catch (const SingularMatrixError&) {
            throw InvariantViolation("metric matrix is degenerate");
        }
        return m;
    }

    std::size_t dim() const { return g_.rows(); }
    const Mat<K>& gram() const { return g_; }
    const Mat<K>& gram_inverse() const { return ginv_; }

    K eval(const Vec<K>& x, const Vec<K>& y) const {
        K s(0);
        for (std::size_t i = 0; i < g_.rows(); ++i)
            for (std::size_t j = 0; j < g_.cols(); ++j) s += x[i] * g_(i, j) * y[j];
        return s;
    }

    /// Musical isomorphism g -> g*: returns the covector g(x, .).
    Vec<K> flat(const Vec<K>& x) const { return g_.transposed() * x; }
    /// Inverse musical isomorphism g* -> g.
    Vec<K> sharp(const Vec<K>& alpha) const { return ginv_ * alpha; }

    /// { x : g(x, s) = 0 for all s in sub }
    Subspace<K> perp(const Subspace<K>& sub) const {
        std::size_t n = dim();
        Mat<K> rows(sub.dim(), n);
        for (std::size_t r = 0; r < sub.dim(); ++r) {
            Vec<K> w = flat(sub.basis()[r]);
            for (std::size_t j = 0; j < n; ++j) rows(r, j) = w[j];
        }
        return Subspace<K>::span(n, kernel(rows));
    }

private:
    Metric() = default;
    Mat<K> g_, ginv_;
};

/// max over basis triples of |g([e_i,e_j],e_k) - g(e_i,[e_j,e_k])|
template <class K>
K ad_invariance_defect(const LieAlgebra<K>& alg, const Metric<K>& g) {
    if (g.dim() != alg.dim()) throw DimensionError("metric/algebra dimension mismatch");
    std::size_t n = alg.dim();
    const Mat<K>& gm = g.gram();
    K worst(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                K lhs(0), rhs(0);
                for (std::size_t m = 0; m < n; ++m) {
                    lhs += alg.c(i, j, m) * gm(m, k);
                    rhs += gm(i, m) * alg.c(j, k, m);
                }
                worst = std::max(worst, scalar_traits<K>::abs(lhs - rhs));
            }
    return worst;
}

/// Sylvester signature as (#negative, #positive); throws on a degenerate
/// form. The paper-facing convention is Lorentzian = (1, n-1).
template <class K>
std::pair<std::size_t, std::size_t> metric_signature(const Metric<K>& g) {
    Inertia s = inertia(g.gram());
    if (s.zero != 0) throw InvariantViolation("signature of a degenerate form");
    return {s.neg, s.pos};
}

/// Checks the metric Lie algebra identities: dim z + dim [g,g] = dim g
/// and z-perp = [g,g].
template <class K>
struct MetricAlgebraChecks {
    bool dims_ok = false;
    bool perp_ok = false;
};

template <class K>
MetricAlgebraChecks<K> metric_algebra_checks(const LieAlgebra<K>& alg, const Metric<K>& g) {
    MetricAlgebraChecks<K> out;
    Subspace<K> z = alg.center();
    Subspace<K> der = alg.derived_subalgebra();
    out.dims_ok = z.dim() + der.dim() == alg.dim();
    out.perp_ok = g.perp(z) == der;
    return out;
}

}  // namespace liecx
