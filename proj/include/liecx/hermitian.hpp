#pragma once

#include <optional>

#include "liecx/complex_structure.hpp"
#include "liecx/metric.hpp"

namespace liecx {

/// g(J e_i, e_j) + g(e_i, J e_j), as a max-norm defect. Zero means J is
/// skew-symmetric for g.
template <class K>
K skewness_defect(const Metric<K>& g, const Mat<K>& op) {
    Mat<K> lhs = op.transposed() * g.gram();
    Mat<K> rhs = g.gram() * op;
    return (lhs + rhs).max_abs();
}

/// A Lie algebra carrying a Hermitian pair (J, g) with ad-invariant g.
/// The constructor enforces every pointwise invariant of the bundle.
template <class K>
class HermitianMetricAlgebra {
public:
    static HermitianMetricAlgebra create(LieAlgebra<K> alg, Metric<K> metric,
                                         ComplexStructure<K> j) {
        if (metric.dim() != alg.dim() || j.dim() != alg.dim())
            throw DimensionError("Hermitian bundle dimension mismatch");
        if (!scalar_traits<K>::is_zero(ad_invariance_defect(alg, metric)))
            throw InvariantViolation("metric is not ad-invariant");
        if (!scalar_traits<K>::is_zero(skewness_defect(metric, j.matrix())))
            throw InvariantViolation("J is not skew-symmetric for the metric");
        if (!is_integrable(alg, j))
            throw InvariantViolation("J is not integrable");
        return HermitianMetricAlgebra(std::move(alg), std::move(metric), std::move(j));
    }

    const LieAlgebra<K>& algebra() const { return alg_; }
    const Metric<K>& metric() const { return g_; }
    const ComplexStructure<K>& j() const { return j_; }
    std::size_t dim() const { return alg_.dim(); }

private:
    HermitianMetricAlgebra(LieAlgebra<K> alg, Metric<K> g, ComplexStructure<K> j)
        : alg_(std::move(alg)), g_(std::move(g)), j_(std::move(j)) {}
    LieAlgebra<K> alg_;
    Metric<K> g_;
    ComplexStructure<K> j_;
};

/// Max over basis triples of |d omega(e_i,e_j,e_k)| for the Kaehler form
/// omega(x,y) = g(Jx,y), with
/// d omega(x,y,z) = -omega([x,y],z) - omega([y,z],x) - omega([z,x],y).
/// Nonzero for every nonabelian algebra in this setting.
template <class K>
K kahler_form_closedness(const HermitianMetricAlgebra<K>& h) {
    std::size_t n = h.dim();
    const LieAlgebra<K>& alg = h.algebra();
    // omega matrix: w(i,j) = g(J e_i, e_j)
    Mat<K> w = h.j().matrix().transposed() * h.metric().gram();
    auto omega = [&](const Vec<K>& x, std::size_t k) {
        K s(0);
        for (std::size_t i = 0; i < n; ++i) s += x[i] * w(i, k);
        return s;
    };
    K worst(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                K v = -omega(alg.bracket_basis(i, j), k) - omega(alg.bracket_basis(j, k), i) -
                      omega(alg.bracket_basis(k, i), j);
                worst = std::max(worst, scalar_traits<K>::abs(v));
            }
    return worst;
}

/// Component-wise equivalence report for a candidate isomorphism phi.
/// Each component is only meaningful when both sides carry the structure;
/// absent structures are reported as such so the same op serves plain
/// Lie-algebra isomorphism checks.
struct EquivalenceReport {
    bool bracket_ok = false;
    std::optional<bool> j_ok;
    std::optional<bool> metric_ok;

    bool all_present_ok() const {
        return bracket_ok && j_ok.value_or(true) && metric_ok.value_or(true);
    }
    bool full() const { return bracket_ok && j_ok.has_value() && j_ok.value() &&
                               metric_ok.has_value() && metric_ok.value(); }
};

/// phi maps src to dst (columns = images of src basis vectors in dst
/// coordinates). Checks phi[x,y] = [phi x, phi y], phi J = J' phi and
/// g'(phi x, phi y) = g(x, y) where present.
template <class K>
EquivalenceReport verify_equivalence(const Mat<K>& phi, const LieAlgebra<K>& src,
                                     const LieAlgebra<K>& dst,
                                     const Metric<K>* src_g = nullptr,
                                     const Metric<K>* dst_g = nullptr,
                                     const ComplexStructure<K>* src_j = nullptr,
                                     const ComplexStructure<K>* dst_j = nullptr) {
    if (src.dim() != dst.dim()) throw DimensionError("equivalence requires equal dimensions");
    if (phi.rows() != src.dim() || phi.cols() != src.dim())
        throw DimensionError("phi has wrong shape");
    phi.inverse();  // singular phi is an error, not a failed check
    EquivalenceReport rep;
    std::size_t n = src.dim();
    rep.bracket_ok = true;
    for (std::size_t i = 0; i < n && rep.bracket_ok; ++i)
        for (std::size_t j = i + 1; j < n && rep.bracket_ok; ++j) {
            Vec<K> lhs = phi * src.bracket_basis(i, j);
            Vec<K> rhs = dst.bracket(phi.column(i), phi.column(j));
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_traits<K>::near(lhs[k], rhs[k])) rep.bracket_ok = false;
        }
    if (src_j && dst_j)
        rep.j_ok = (phi * src_j->matrix()).near(dst_j->matrix() * phi);
    if (src_g && dst_g)
        rep.metric_ok = (phi.transposed() * dst_g->gram() * phi).near(src_g->gram());
    return rep;
}

template <class K>
EquivalenceReport verify_equivalence(const Mat<K>& phi, const HermitianMetricAlgebra<K>& src,
                                     const HermitianMetricAlgebra<K>& dst) {
    return verify_equivalence(phi, src.algebra(), dst.algebra(), &src.metric(), &dst.metric(),
                              &src.j(), &dst.j());
}

}  // namespace liecx
