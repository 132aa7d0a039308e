#pragma once

#include "liecx/hermitian.hpp"

namespace liecx {

/// [x,y]_r = [rx, y] + [x, ry] for an endomorphism r. Not a Lie bracket
/// unless r is a classical r-matrix.
template <class K>
Vec<K> r_bracket(const LieAlgebra<K>& alg, const Mat<K>& r, const Vec<K>& x, const Vec<K>& y) {
    Vec<K> out = alg.bracket(r * x, y);
    Vec<K> t = alg.bracket(x, r * y);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t[k];
    return out;
}

/// B_r(x,y) = [rx, ry] - r([x,y]_r). CYBE means B_r = 0; the MYBE is the
/// cyclic condition below.
template <class K>
Vec<K> b_r(const LieAlgebra<K>& alg, const Mat<K>& r, const Vec<K>& x, const Vec<K>& y) {
    Vec<K> out = alg.bracket(r * x, r * y);
    Vec<K> t = r * r_bracket(alg, r, x, y);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= t[k];
    return out;
}

template <class K>
bool cybe_check(const LieAlgebra<K>& alg, const Mat<K>& r) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!vec_is_zero(b_r(alg, r, basis_vec<K>(n, i), basis_vec<K>(n, j)))) return false;
    return true;
}

/// [x, B_r(y,z)] + [y, B_r(z,x)] + [z, B_r(x,y)] = 0 on all basis triples.
template <class K>
bool mybe_check(const LieAlgebra<K>& alg, const Mat<K>& r) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec<K> ei = basis_vec<K>(n, i), ej = basis_vec<K>(n, j), ek = basis_vec<K>(n, k);
                Vec<K> s = alg.bracket(ei, b_r(alg, r, ej, ek));
                axpy(s, K(1), alg.bracket(ej, b_r(alg, r, ek, ei)));
                axpy(s, K(1), alg.bracket(ek, b_r(alg, r, ei, ej)));
                if (!vec_is_zero(s)) return false;
            }
    return true;
}

/// r skew-symmetric w.r.t. g, i.e. g(rx,y) = -g(x,ry).
template <class K>
bool is_skew_for(const Metric<K>& g, const Mat<K>& r) {
    return scalar_traits<K>::is_zero(skewness_defect(g, r));
}

/// Element of Lambda^2 g stored by its components: W(i,j) is the
/// coefficient of e_i ^ e_j, an antisymmetric matrix. As a map g* -> g
/// the bivector acts by alpha |-> W^T alpha (the convention that makes
/// r . g^{-1} match the wedge expansions used throughout).
template <class K>
class Bivector {
public:
    static Bivector create(Mat<K> w) {
        if (!w.is_antisymmetric())
            throw InvariantViolation("bivector components must be antisymmetric");
        Bivector b;
        b.w_ = std::move(w);
        return b;
    }
    std::size_t dim() const { return w_.rows(); }
    const Mat<K>& components() const { return w_; }

private:
    Bivector() = default;
    Mat<K> w_;
};

/// R = r . g^{-1} as an element of Lambda^2 g; requires r skew for g.
template <class K>
Bivector<K> r_to_bivector(const Mat<K>& r, const Metric<K>& g) {
    if (!is_skew_for(g, r))
        throw InvariantViolation("r is not skew-symmetric for the metric");
    Mat<K> action = r * g.gram_inverse();   // map g* -> g
    return Bivector<K>::create(action.transposed());
}

/// 1-cochain g -> Lambda^2 g: delta(e_i) has component matrix d[i].
template <class K>
class Cocycle {
public:
    Cocycle(std::size_t n, std::vector<Mat<K>> d) : n_(n), d_(std::move(d)) {
        if (d_.size() != n_) throw DimensionError("cocycle needs one matrix per basis vector");
        for (const auto& m : d_)
            if (!m.is_antisymmetric())
                throw InvariantViolation("cocycle values must be antisymmetric");
    }
    std::size_t dim() const { return n_; }
    const Mat<K>& value(std::size_t i) const { return d_[i]; }

    Mat<K> value_at(const Vec<K>& x) const {
        Mat<K> out(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (!scalar_traits<K>::is_zero(x[i])) out = out + d_[i].scaled(x[i]);
        return out;
    }

    static Cocycle zero(std::size_t n) {
        return Cocycle(n, std::vector<Mat<K>>(n, Mat<K>(n, n)));
    }

private:
    std::size_t n_;
    std::vector<Mat<K>> d_;
};

/// ad(x) acting on Lambda^2 as a derivation: in components,
/// x . W = ad(x) W + W ad(x)^T.
template <class K>
Mat<K> ad_on_wedge(const Mat<K>& ad, const Mat<K>& w) {
    return ad * w + w * ad.transposed();
}

/// Coboundary of a bivector: delta_R(x) = ad(x) R.
template <class K>
Cocycle<K> coboundary(const LieAlgebra<K>& alg, const Bivector<K>& r) {
    std::size_t n = alg.dim();
    std::vector<Mat<K>> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(ad_on_wedge(alg.ad_basis(i), r.components()));
    return Cocycle<K>(n, std::move(d));
}

/// Lie algebra on g* induced by [alpha,beta]* = g([g^{-1}a, g^{-1}b]_r),
/// together with J* = -J^T when r itself is a complex structure.
template <class K>
struct DualAlgebra {
    LieAlgebra<K> algebra;              // bracket on the dual basis e^1..e^n
    std::optional<Mat<K>> j_star;       // present when r^2 = -id
    Mat<K> iso_from_g_r;                // the metric as a map (g_r, [.,.]_r) -> g*
};

template <class K>
DualAlgebra<K> dual_bracket(const LieAlgebra<K>& alg, const Metric<K>& g, const Mat<K>& r) {
    if (!is_skew_for(g, r))
        throw InvariantViolation("r must be skew-symmetric for the metric");
    if (!scalar_traits<K>::is_zero(ad_invariance_defect(alg, g)))
        throw InvariantViolation("dual bracket requires an ad-invariant metric");
    std::size_t n = alg.dim();
    std::vector<K> c(n * n * n, K(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec<K> v = g.flat(r_bracket(alg, r, g.sharp(basis_vec<K>(n, i)),
                                        g.sharp(basis_vec<K>(n, j))));
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * n + j) * n + k] = v[k];
                c[(j * n + i) * n + k] = -v[k];
            }
        }
    std::vector<std::string> dual_names;
    for (std::size_t i = 1; i <= n; ++i) dual_names.push_back("e^" + std::to_string(i));
    DualAlgebra<K> out{LieAlgebra<K>::create(n, std::move(c), std::move(dual_names)),
                       std::nullopt, g.gram()};
    Mat<K> r2 = r * r;
    if (r2.near(Mat<K>::identity(n).scaled(K(-1))))
        out.j_star = r.transposed().scaled(K(-1));
    return out;
}

/// Cocycle tensor of the dual bracket: d_i^{jk} = c*_{jk}^i.
template <class K>
Cocycle<K> cocycle_of_dual(const LieAlgebra<K>& dual) {
    std::size_t n = dual.dim();
    std::vector<Mat<K>> d(n, Mat<K>(n, n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) d[i](j, k) = dual.c(j, k, i);
    return Cocycle<K>(n, std::move(d));
}

/// Transpose direction: the dual-basis bracket encoded by a cocycle.
template <class K>
LieAlgebra<K> dual_of_cocycle(const Cocycle<K>& delta, std::vector<std::string> names = {}) {
    std::size_t n = delta.dim();
    std::vector<K> c(n * n * n, K(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                c[(j * n + k) * n + i] = delta.value(i)(j, k);
    return LieAlgebra<K>::create_unchecked(n, std::move(c), std::move(names));
}

struct BialgebraReport {
    bool cocycle_ok = false;
    bool dual_jacobi_ok = false;
    bool ok() const { return cocycle_ok && dual_jacobi_ok; }
};

/// Checks the two Lie-bialgebra axioms for (alg, delta):
///   delta([x,y]) = ad(x).delta(y) - ad(y).delta(x),
///   the transpose bracket on g* satisfies Jacobi.
template <class K>
BialgebraReport verify_bialgebra(const LieAlgebra<K>& alg, const Cocycle<K>& delta) {
    if (delta.dim() != alg.dim()) throw DimensionError("cocycle/algebra dimension mismatch");
    std::size_t n = alg.dim();
    BialgebraReport rep;
    rep.cocycle_ok = true;
    for (std::size_t i = 0; i < n && rep.cocycle_ok; ++i) {
        Mat<K> adi = alg.ad_basis(i);
        for (std::size_t j = i + 1; j < n && rep.cocycle_ok; ++j) {
            Mat<K> lhs = delta.value_at(alg.bracket_basis(i, j));
            Mat<K> rhs = ad_on_wedge(adi, delta.value(j)) -
                         ad_on_wedge(alg.ad_basis(j), delta.value(i));
            if (!lhs.near(rhs)) rep.cocycle_ok = false;
        }
    }
    LieAlgebra<K> dual = dual_of_cocycle(delta);
    rep.dual_jacobi_ok = scalar_traits<K>::is_zero(dual.antisymmetry_defect()) &&
                         scalar_traits<K>::is_zero(dual.jacobi_defect());
    return rep;
}

}  // namespace liecx
