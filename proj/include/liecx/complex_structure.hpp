#pragma once

#include "liecx/lie_algebra.hpp"
#include "liecx/metric.hpp"

namespace liecx {

/// Almost complex structure J with J^2 = -id; integrability (N_J = 0) is
/// checked against a Lie algebra separately, since the same J matrix can
/// be paired with several brackets.
template <class K>
class ComplexStructure {
public:
    static ComplexStructure create(Mat<K> j) {
        ComplexStructure s = create_unverified(std::move(j));
        if (!s.squares_to_minus_id())
            throw InvariantViolation("J^2 != -id");
        return s;
    }
    /// For inputs that are only candidates (diagnostic paths).
    static ComplexStructure create_unverified(Mat<K> j) {
        if (j.rows() != j.cols()) throw DimensionError("J must be square");
        ComplexStructure s;
        s.j_ = std::move(j);
        return s;
    }

    /// Convenience: J given by basis-vector images J e_from = sign * e_to
    /// (0-based); the matrix is completed by J^2 = -id.
    static ComplexStructure pairing(
        std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, int>>& images) {
        Mat<K> j(n, n);
        for (auto [from, to, sign] : images) {
            j(to, from) = K(sign);
            j(from, to) = K(-sign);
        }
        return create(std::move(j));
    }

    std::size_t dim() const { return j_.rows(); }
    const Mat<K>& matrix() const { return j_; }
    Vec<K> apply(const Vec<K>& x) const { return j_ * x; }

    bool squares_to_minus_id() const {
        return (j_ * j_).near(Mat<K>::identity(j_.rows()).scaled(K(-1)));
    }

private:
    ComplexStructure() = default;
    Mat<K> j_;
};

/// N_J(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy]
template <class K>
Vec<K> nijenhuis(const LieAlgebra<K>& alg, const ComplexStructure<K>& j,
                 const Vec<K>& x, const Vec<K>& y) {
    if (j.dim() != alg.dim()) throw DimensionError("J/algebra dimension mismatch");
    if (!j.squares_to_minus_id()) throw InvariantViolation("J^2 != -id");
    Vec<K> jx = j.apply(x), jy = j.apply(y);
    Vec<K> out = alg.bracket(jx, jy);
    Vec<K> t = alg.bracket(x, y);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= t[k];
    t = j.apply(alg.bracket(jx, y));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= t[k];
    t = j.apply(alg.bracket(x, jy));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= t[k];
    return out;
}

/// max over basis pairs of |N_J(e_i, e_j)|
template <class K>
K nijenhuis_defect(const LieAlgebra<K>& alg, const ComplexStructure<K>& j) {
    std::size_t n = alg.dim();
    K worst(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = i + 1; l < n; ++l)
            worst = std::max(worst,
                             max_abs(nijenhuis(alg, j, basis_vec<K>(n, i), basis_vec<K>(n, l))));
    return worst;
}

template <class K>
bool is_integrable(const LieAlgebra<K>& alg, const ComplexStructure<K>& j) {
    return scalar_traits<K>::is_zero(nijenhuis_defect(alg, j));
}

/// The r-matrix bracket of J:  [x,y]_J = [Jx,y] + [x,Jy].  For integrable J
/// this is a Lie bracket and (g_J, J) is a complex Lie algebra.
template <class K>
LieAlgebra<K> build_g_J(const LieAlgebra<K>& alg, const ComplexStructure<K>& j) {
    if (!is_integrable(alg, j))
        throw InvariantViolation("J is not integrable; [.,.]_J need not satisfy Jacobi");
    std::size_t n = alg.dim();
    const Mat<K>& jm = j.matrix();
    std::vector<K> c(n * n * n, K(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t k = 0; k < n; ++k) {
                K s(0);
                for (std::size_t a = 0; a < n; ++a)
                    s += jm(a, i) * alg.c(a, l, k) + jm(a, l) * alg.c(i, a, k);
                c[(i * n + l) * n + k] = s;
            }
    LieAlgebra<K> gj = LieAlgebra<K>::create(n, std::move(c), alg.basis_names());
    // J[x,y]_J = [Jx,y]_J must hold on all basis pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            Vec<K> lhs = j.apply(gj.bracket_basis(i, l));
            Vec<K> rhs = gj.bracket(j.apply(basis_vec<K>(n, i)), basis_vec<K>(n, l));
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_traits<K>::near(lhs[k], rhs[k]))
                    throw InvariantViolation("g_J failed the J-equivariance identity");
        }
    return gj;
}

/// ad(x) . J = J . ad(x) for all x, i.e. (g, J) is a complex Lie algebra.
template <class K>
bool is_complex_lie_algebra(const LieAlgebra<K>& alg, const ComplexStructure<K>& j) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Mat<K> a = alg.ad_basis(i);
        if (!(a * j.matrix()).near(j.matrix() * a)) return false;
    }
    return true;
}

/// [Jx, Jy] = [x, y] on all basis pairs.
template <class K>
bool is_abelian_complex_structure(const LieAlgebra<K>& alg, const ComplexStructure<K>& j) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = i + 1; l < n; ++l) {
            Vec<K> lhs = alg.bracket(j.apply(basis_vec<K>(n, i)), j.apply(basis_vec<K>(n, l)));
            Vec<K> rhs = alg.bracket_basis(i, l);
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_traits<K>::near(lhs[k], rhs[k])) return false;
        }
    return true;
}

}  // namespace liecx
