#pragma once

#include "liecx/bialgebra.hpp"

namespace liecx {

/// Coadjoint action of g on g*: (coad(x) beta)(y) = -beta([x,y]).
template <class K>
Vec<K> coad(const LieAlgebra<K>& alg, const Vec<K>& x, const Vec<K>& beta) {
    std::size_t n = alg.dim();
    Vec<K> out = zero_vec<K>(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec<K> br = alg.bracket(x, basis_vec<K>(n, k));
        for (std::size_t m = 0; m < n; ++m) out[k] -= beta[m] * br[m];
    }
    return out;
}

/// Coadjoint action of g* on g = (g*)*: pairing-wise,
/// beta(coad*(alpha) y) = -[alpha, beta]*(y).
template <class K>
Vec<K> coad_star(const LieAlgebra<K>& dual, const Vec<K>& alpha, const Vec<K>& y) {
    return coad(dual, alpha, y);
}

/// The double Lie algebra D g = g + g* on the ordered basis
/// (e_1..e_n, e^1..e^n), with its canonical neutral metric and, when built
/// from a Hermitian pair, the induced complex structure (J, J*).
template <class K>
struct DoubleAlgebra {
    LieAlgebra<K> algebra;
    std::size_t half = 0;
    Metric<K> canonical;
    std::optional<ComplexStructure<K>> j;

    Subspace<K> primal_subspace() const {
        Subspace<K> s(2 * half);
        for (std::size_t i = 0; i < half; ++i) s.add(basis_vec<K>(2 * half, i));
        return s;
    }
    Subspace<K> dual_subspace() const {
        Subspace<K> s(2 * half);
        for (std::size_t i = 0; i < half; ++i) s.add(basis_vec<K>(2 * half, half + i));
        return s;
    }
};

namespace detail {

template <class K>
Metric<K> neutral_pairing(std::size_t n) {
    Mat<K> g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, n + i) = K(1);
        g(n + i, i) = K(1);
    }
    return Metric<K>::create(std::move(g));
}

/// Assembles the tensor of g + g* from the bracket of g and a dual-basis
/// bracket (possibly zero). Mixed brackets are the two coadjoint terms.
template <class K>
LieAlgebra<K> double_tensor(const LieAlgebra<K>& alg, const LieAlgebra<K>& dual) {
    std::size_t n = alg.dim();
    std::size_t N = 2 * n;
    std::vector<K> c(N * N * N, K(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> K& {
        return c[(i * N + j) * N + k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                at(i, j, k) = alg.c(i, j, k);
                at(n + i, n + j, n + k) = dual.c(i, j, k);
            }
            // [e_i, e^j] = (-coad*(e^j) e_i, coad(e_i) e^j)
            for (std::size_t k = 0; k < n; ++k) {
                at(i, n + j, k) = dual.c(j, k, i);
                at(n + j, i, k) = -dual.c(j, k, i);
                at(i, n + j, n + k) = -alg.c(i, k, j);
                at(n + j, i, n + k) = alg.c(i, k, j);
            }
        }
    std::vector<std::string> names = alg.basis_names();
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e^" + std::to_string(i));
    return LieAlgebra<K>::create(N, std::move(c), std::move(names));
}

}  // namespace detail

/// Drinfeld double of a Hermitian metric algebra. The result carries the
/// canonical metric of signature (n,n) and the integrable skew structure
/// (J, J*); it is itself a Lie bialgebra of complex type.
template <class K>
DoubleAlgebra<K> build_double(const HermitianMetricAlgebra<K>& h) {
    std::size_t n = h.dim();
    DualAlgebra<K> dual = dual_bracket(h.algebra(), h.metric(), h.j().matrix());
    LieAlgebra<K> big = detail::double_tensor(h.algebra(), dual.algebra);
    Metric<K> pairing = detail::neutral_pairing<K>(n);
    Mat<K> jj(2 * n, 2 * n);
    const Mat<K>& j = h.j().matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            jj(i, k) = j(i, k);
            jj(n + i, n + k) = -j(k, i);
        }
    DoubleAlgebra<K> out{std::move(big), n, std::move(pairing),
                         ComplexStructure<K>::create(std::move(jj))};

    if (!scalar_traits<K>::is_zero(ad_invariance_defect(out.algebra, out.canonical)))
        throw InvariantViolation("double: canonical metric failed ad-invariance");
    if (!scalar_traits<K>::is_zero(skewness_defect(out.canonical, out.j->matrix())))
        throw InvariantViolation("double: induced J is not skew");
    if (!is_integrable(out.algebra, *out.j))
        throw InvariantViolation("double: induced J is not integrable");
    return out;
}

/// Cotangent algebra T*h = h (semidirect, coadjoint) h*: the double with
/// trivial dual bracket. Always carries the canonical neutral metric.
template <class K>
DoubleAlgebra<K> cotangent(const LieAlgebra<K>& h) {
    std::size_t n = h.dim();
    LieAlgebra<K> zero_dual = LieAlgebra<K>::create(n, std::vector<K>(n * n * n, K(0)));
    LieAlgebra<K> big = detail::double_tensor(h, zero_dual);
    return DoubleAlgebra<K>{std::move(big), n, detail::neutral_pairing<K>(n), std::nullopt};
}

/// Cotangent algebra with the Hermitian structure induced by a complex
/// structure J on h (no metric on h required).
template <class K>
DoubleAlgebra<K> cotangent_with_j(const LieAlgebra<K>& h, const ComplexStructure<K>& j) {
    if (!is_integrable(h, j)) throw InvariantViolation("cotangent: J is not integrable");
    std::size_t n = h.dim();
    DoubleAlgebra<K> out = cotangent(h);
    Mat<K> jj(2 * n, 2 * n);
    const Mat<K>& jm = j.matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            jj(i, k) = jm(i, k);
            jj(n + i, n + k) = -jm(k, i);
        }
    out.j = ComplexStructure<K>::create(std::move(jj));
    if (!scalar_traits<K>::is_zero(skewness_defect(out.canonical, out.j->matrix())))
        throw InvariantViolation("cotangent: induced J is not skew");
    if (!is_integrable(out.algebra, *out.j))
        throw InvariantViolation("cotangent: induced J is not integrable");
    return out;
}

template <class K>
HermitianMetricAlgebra<K> as_hermitian(const DoubleAlgebra<K>& d) {
    if (!d.j) throw InvariantViolation("double carries no complex structure");
    return HermitianMetricAlgebra<K>::create(d.algebra, d.canonical, *d.j);
}

/// k-fold double D^k g; every level is re-verified through the Hermitian
/// bundle constructor. Dimension grows as 2^k dim g and is capped.
template <class K>
DoubleAlgebra<K> iterate_double(const HermitianMetricAlgebra<K>& h, std::size_t k,
                                std::size_t dim_bound = 64) {
    if (k < 1) throw DimensionError("iterate_double needs k >= 1");
    if ((h.dim() << k) > dim_bound)
        throw DimensionError("iterate_double exceeds the configured dimension bound");
    DoubleAlgebra<K> d = build_double(h);
    for (std::size_t level = 1; level < k; ++level) d = build_double(as_hermitian(d));
    return d;
}

/// Structure constants of alg / Z for a central subspace Z, expressed in
/// the complement spanned by the standard basis vectors away from Z's
/// pivot columns.
template <class K>
LieAlgebra<K> quotient_by_central_ideal(const LieAlgebra<K>& alg, const Subspace<K>& z) {
    std::size_t n = alg.dim();
    if (!alg.center().contains(z))
        throw InvariantViolation("quotient subspace is not central");
    std::vector<std::size_t> rep;  // complement indices
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> r = z.reduce_mod(basis_vec<K>(n, i));
        if (!vec_is_zero(r)) {
            // pivot columns reduce to combinations of the others; keep only
            // indices whose reduction is themselves
            bool is_rep = scalar_traits<K>::near(r[i], K(1));
            for (std::size_t m = 0; m < n && is_rep; ++m)
                if (m != i && !scalar_traits<K>::is_zero(r[m])) is_rep = false;
            if (is_rep) rep.push_back(i);
        }
    }
    if (rep.size() != n - z.dim())
        throw InvariantViolation("could not build a complement from standard basis vectors");
    std::size_t m = rep.size();
    std::vector<K> c(m * m * m, K(0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec<K> v = z.reduce_mod(alg.bracket_basis(rep[a], rep[b]));
            for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = v[rep[k]];
        }
    std::vector<std::string> names;
    for (std::size_t i : rep) names.push_back(alg.basis_names()[i] + "~");
    return LieAlgebra<K>::create(m, std::move(c), std::move(names));
}

}  // namespace liecx
