#pragma once

#include "liecx/drinfeld.hpp"

namespace liecx {

/// Data of a conforming double extension d_A~(R^{1,1} x g, R): a Hermitian
/// base (possibly trivial), the hyperbolic scaling c, a central vector
/// ybar of the base, and a skew derivation A of the base commuting with J.
/// The 1-cocycle k is derived: k(x) = -<x, ybar>.
template <class K>
struct ExtensionSpec {
    std::optional<HermitianMetricAlgebra<K>> base;  // nullopt = zero-dimensional base
    K c = K(0);
    Vec<K> ybar;  // empty when base is trivial
    Mat<K> a;     // 0x0 when base is trivial

    std::size_t base_dim() const { return base ? base->dim() : 0; }

    Vec<K> k_covector() const {
        if (!base) return {};
        Vec<K> k = base->metric().flat(ybar);
        for (K& v : k) v = -v;
        return k;
    }
};

/// d_A~ on the ordered basis (alpha, x_0, base..., y_0, H).
template <class K>
struct ExtendedAlgebra {
    HermitianMetricAlgebra<K> herm;
    std::size_t base_dim = 0;
    K c = K(0);
    Vec<K> ybar;
    Mat<K> a;

    std::size_t alpha_index() const { return 0; }
    std::size_t x0_index() const { return 1; }
    std::size_t base_index(std::size_t i) const { return 2 + i; }
    std::size_t y0_index() const { return 2 + base_dim; }
    std::size_t h_index() const { return 3 + base_dim; }
};

namespace detail {

/// g~ = R^{1,1} x base on the ordered basis (x_0, base..., y_0).
template <class K>
Metric<K> tilde_metric(const HermitianMetricAlgebra<K>* base) {
    std::size_t m = base ? base->dim() : 0;
    Mat<K> g(m + 2, m + 2);
    g(0, m + 1) = K(1);
    g(m + 1, 0) = K(1);
    if (base)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) g(1 + i, 1 + j) = base->metric().gram()(i, j);
    return Metric<K>::create(std::move(g));
}

template <class K>
K tilde_bracket_coeff(const HermitianMetricAlgebra<K>* base, std::size_t i, std::size_t j,
                      std::size_t k, std::size_t m) {
    // nonzero only within the base block
    if (i < 1 || i > m || j < 1 || j > m || k < 1 || k > m) return K(0);
    return base->algebra().c(i - 1, j - 1, k - 1);
}

/// Raw double extension from an arbitrary endomorphism A~ of g~: builds
/// the bracket tensor, ad-invariant metric and the almost complex
/// structure, without any integrability enforcement. Throws only if the
/// bracket fails Jacobi (i.e. A~ is not a skew derivation).
template <class K>
std::tuple<LieAlgebra<K>, Metric<K>, ComplexStructure<K>> assemble_extension(
    const HermitianMetricAlgebra<K>* base, const Mat<K>& a_tilde) {
    std::size_t m = base ? base->dim() : 0;
    std::size_t nt = m + 2;   // dim g~
    std::size_t N = m + 4;    // dim d_A~
    if (a_tilde.rows() != nt || a_tilde.cols() != nt)
        throw DimensionError("A~ must act on R^{1,1} x base");
    Metric<K> gt = tilde_metric(base);

    // basis layout: 0 = alpha, 1..nt = g~ (x_0, base..., y_0), nt+1 = H
    auto d_index = [&](std::size_t tilde_i) { return 1 + tilde_i; };
    std::vector<K> c(N * N * N, K(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> K& {
        return c[(i * N + j) * N + k];
    };
    std::size_t H = N - 1;
    for (std::size_t i = 0; i < nt; ++i) {
        // [H, x] = A~ x
        for (std::size_t k = 0; k < nt; ++k) {
            at(H, d_index(i), d_index(k)) += a_tilde(k, i);
            at(d_index(i), H, d_index(k)) -= a_tilde(k, i);
        }
        for (std::size_t j = 0; j < nt; ++j) {
            if (i == j) continue;
            // [x, y] = <A~ x, y> alpha + [x, y]_g~
            K pair(0);
            for (std::size_t p = 0; p < nt; ++p) pair += a_tilde(p, i) * gt.gram()(p, j);
            at(d_index(i), d_index(j), 0) += pair;
            for (std::size_t k = 0; k < nt; ++k) {
                K bc = tilde_bracket_coeff(base, i, j, k, m);
                if (!scalar_traits<K>::is_zero(bc)) at(d_index(i), d_index(j), d_index(k)) += bc;
            }
        }
    }
    LieAlgebra<K> alg = LieAlgebra<K>::create(N, std::move(c));

    Mat<K> g(N, N);
    g(0, H) = K(1);
    g(H, 0) = K(1);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nt; ++j) g(d_index(i), d_index(j)) = gt.gram()(i, j);

    Mat<K> jm(N, N);
    // J x_0 = alpha, J y_0 = H, J|base from the base structure
    jm(0, 1) = K(1);
    jm(1, 0) = K(-1);
    jm(H, 1 + nt - 1) = K(1);
    jm(1 + nt - 1, H) = K(-1);
    if (base)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) jm(2 + k, 2 + i) = base->j().matrix()(k, i);

    return {std::move(alg), Metric<K>::create(std::move(g)),
            ComplexStructure<K>::create(std::move(jm))};
}

template <class K>
Mat<K> a_tilde_of_spec(const ExtensionSpec<K>& spec) {
    std::size_t m = spec.base_dim();
    std::size_t nt = m + 2;
    Mat<K> at(nt, nt);
    at(0, 0) = spec.c;
    at(nt - 1, nt - 1) = -spec.c;
    Vec<K> k = spec.k_covector();
    for (std::size_t i = 0; i < m; ++i) {
        at(0, 1 + i) = k[i];             // x_0-component of A~ x
        at(1 + i, nt - 1) = spec.ybar[i];  // ybar inside A~ y_0
        for (std::size_t p = 0; p < m; ++p) at(1 + p, 1 + i) = spec.a(p, i);
    }
    return at;
}

}  // namespace detail

/// Is A a derivation of alg?
template <class K>
bool is_derivation(const LieAlgebra<K>& alg, const Mat<K>& a) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec<K> lhs = a * alg.bracket_basis(i, j);
            Vec<K> rhs = alg.bracket(a.column(i), basis_vec<K>(n, j));
            axpy(rhs, K(1), alg.bracket(basis_vec<K>(n, i), a.column(j)));
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_traits<K>::near(lhs[k], rhs[k])) return false;
        }
    return true;
}

/// Builds the dim+4 Hermitian metric algebra from a conforming spec.
/// Every clause is validated up front so failures name the violated
/// condition; the result is then re-verified wholesale by the Hermitian
/// bundle constructor.
template <class K>
ExtendedAlgebra<K> build_double_extension(const ExtensionSpec<K>& spec) {
    const HermitianMetricAlgebra<K>* base = spec.base ? &*spec.base : nullptr;
    std::size_t m = spec.base_dim();
    if (spec.ybar.size() != m) throw DimensionError("ybar has wrong dimension");
    if (spec.a.rows() != m || spec.a.cols() != m) throw DimensionError("A has wrong shape");
    if (base) {
        if (!scalar_traits<K>::is_zero(skewness_defect(base->metric(), spec.a)))
            throw InvariantViolation("A is not skew-symmetric for the base metric");
        if (!is_derivation(base->algebra(), spec.a))
            throw InvariantViolation("A is not a derivation of the base");
        if (!(spec.a * base->j().matrix()).near(base->j().matrix() * spec.a))
            throw InvariantViolation("A does not commute with J");
        if (!base->algebra().center().contains(spec.ybar))
            throw InvariantViolation("ybar is not central in the base");
    }
    auto [alg, g, j] = detail::assemble_extension(base, detail::a_tilde_of_spec(spec));

    auto base_sig = base ? metric_signature(base->metric())
                         : std::pair<std::size_t, std::size_t>{0, 0};
    auto sig = metric_signature(g);
    if (sig.first != base_sig.first + 1 || sig.second != base_sig.second + 1)
        throw InvariantViolation("extension metric signature did not gain (1,1)+(1,1)");

    return ExtendedAlgebra<K>{
        HermitianMetricAlgebra<K>::create(std::move(alg), std::move(g), std::move(j)), m,
        spec.c, spec.ybar, spec.a};
}

/// Raw (alpha, x_0, base..., y_0, H) extension from an arbitrary skew
/// derivation A~ of g~, with the almost complex structure attached but not
/// required to be integrable. Used by the integrability iff-test.
template <class K>
std::tuple<LieAlgebra<K>, Metric<K>, ComplexStructure<K>> build_raw_extension(
    const std::optional<HermitianMetricAlgebra<K>>& base, const Mat<K>& a_tilde) {
    const HermitianMetricAlgebra<K>* b = base ? &*base : nullptr;
    Metric<K> gt = detail::tilde_metric(b);
    if (!scalar_traits<K>::is_zero(skewness_defect(gt, a_tilde)))
        throw InvariantViolation("A~ is not skew-symmetric");
    return detail::assemble_extension(b, a_tilde);
}

/// One flag per clause of the integrability criterion.
template <class K>
struct ExtDiagnosis {
    bool x0_scaling_ok = false;    // A~ x_0 = c x_0
    bool ybar_central_ok = false;  // A~ y_0 = -c y_0 + ybar, ybar in z(g)
    bool base_stable_ok = false;   // A~ g inside span{x_0} + g
    bool k_matches_ok = false;     // k(x) = -<x, ybar>
    bool aj_commute_ok = false;    // A J = J A

    K c = K(0);
    Vec<K> ybar;
    Vec<K> k;
    Mat<K> a;

    bool passes() const {
        return x0_scaling_ok && ybar_central_ok && base_stable_ok && k_matches_ok &&
               aj_commute_ok;
    }
};

/// Decomposes a skew derivation A~ of g~ = R^{1,1} x g into (c, ybar, k, A)
/// and reports which clauses of the integrability criterion fail. A~ that
/// is not skew or not a derivation of g~ is an error, not a diagnosis.
template <class K>
ExtDiagnosis<K> check_ext_conditions(const std::optional<HermitianMetricAlgebra<K>>& base,
                                     const Mat<K>& a_tilde) {
    const HermitianMetricAlgebra<K>* b = base ? &*base : nullptr;
    std::size_t m = b ? b->dim() : 0;
    std::size_t nt = m + 2;
    if (a_tilde.rows() != nt || a_tilde.cols() != nt)
        throw DimensionError("A~ must act on R^{1,1} x base");
    Metric<K> gt = detail::tilde_metric(b);
    if (!scalar_traits<K>::is_zero(skewness_defect(gt, a_tilde)))
        throw InvariantViolation("A~ is not skew-symmetric");
    {
        // g~ bracket: base bracket padded by the central x_0, y_0
        std::size_t n3 = nt * nt * nt;
        std::vector<K> c(n3, K(0));
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < nt; ++j)
                for (std::size_t k = 0; k < nt; ++k)
                    c[(i * nt + j) * nt + k] = detail::tilde_bracket_coeff(b, i, j, k, m);
        LieAlgebra<K> tilde = LieAlgebra<K>::create(nt, std::move(c));
        if (!is_derivation(tilde, a_tilde))
            throw InvariantViolation("A~ is not a derivation");
    }

    ExtDiagnosis<K> d;
    d.c = a_tilde(0, 0);
    d.x0_scaling_ok = true;
    for (std::size_t k = 1; k < nt; ++k)
        if (!scalar_traits<K>::is_zero(a_tilde(k, 0))) d.x0_scaling_ok = false;

    d.ybar = zero_vec<K>(m);
    for (std::size_t i = 0; i < m; ++i) d.ybar[i] = a_tilde(1 + i, nt - 1);
    bool y0_col_ok = scalar_traits<K>::near(a_tilde(nt - 1, nt - 1), -d.c) &&
                     scalar_traits<K>::is_zero(a_tilde(0, nt - 1));
    d.ybar_central_ok =
        y0_col_ok && (!b || b->algebra().center().contains(d.ybar));

    d.base_stable_ok = true;
    for (std::size_t i = 0; i < m; ++i)
        if (!scalar_traits<K>::is_zero(a_tilde(nt - 1, 1 + i))) d.base_stable_ok = false;

    d.k = zero_vec<K>(m);
    d.a = Mat<K>(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        d.k[i] = a_tilde(0, 1 + i);
        for (std::size_t p = 0; p < m; ++p) d.a(p, i) = a_tilde(1 + p, 1 + i);
    }
    d.k_matches_ok = true;
    if (b) {
        Vec<K> expect = b->metric().flat(d.ybar);
        for (std::size_t i = 0; i < m; ++i)
            if (!scalar_traits<K>::near(d.k[i], -expect[i])) d.k_matches_ok = false;
    }
    d.aj_commute_ok = !b || (d.a * b->j().matrix()).near(b->j().matrix() * d.a);
    return d;
}

/// Result bundle of extension_j_bracket: the bracket [.,.]_J on d_A~ plus
/// the structural checks of its complex semidirect shape.
template <class K>
struct ExtensionJBracket {
    LieAlgebra<K> g_j;
    bool relations_ok = false;       // the displayed bracket relations
    bool ideal_ok = false;           // span{alpha, x_0} + base is a J-stable ideal
    bool ad_y0_complex_ok = false;   // ad_J(y_0) commutes with J
};

template <class K>
ExtensionJBracket<K> extension_j_bracket(const ExtendedAlgebra<K>& ext) {
    const LieAlgebra<K>& d = ext.herm.algebra();
    const ComplexStructure<K>& jj = ext.herm.j();
    std::size_t N = d.dim(), m = ext.base_dim;
    ExtensionJBracket<K> out{build_g_J(d, jj), false, false, false};
    const LieAlgebra<K>& gj = out.g_j;

    std::size_t AL = ext.alpha_index(), X0 = ext.x0_index(), Y0 = ext.y0_index(),
                H = ext.h_index();
    // k(x) = -<x, ybar> via the base metric block of the extension metric
    Vec<K> kcov = zero_vec<K>(m);
    for (std::size_t i = 0; i < m; ++i) {
        K s(0);
        for (std::size_t p = 0; p < m; ++p)
            s += ext.herm.metric().gram()(ext.base_index(i), ext.base_index(p)) * ext.ybar[p];
        kcov[i] = -s;
    }
    auto embed_base = [&](const Vec<K>& v) {
        Vec<K> w = zero_vec<K>(N);
        for (std::size_t i = 0; i < m; ++i) w[ext.base_index(i)] = v[i];
        return w;
    };
    auto near_vec = [](const Vec<K>& a, const Vec<K>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!scalar_traits<K>::near(a[i], b[i])) return false;
        return true;
    };

    bool ok = true;
    const K c = ext.c;
    // [x_0, y_0]_J = -c x_0; [alpha, y_0]_J = -c alpha; [alpha, H]_J = c x_0;
    // [H, x_0]_J = c alpha
    {
        Vec<K> e;
        e = zero_vec<K>(N); e[X0] = -c;
        ok = ok && near_vec(gj.bracket_basis(X0, Y0), e);
        e = zero_vec<K>(N); e[AL] = -c;
        ok = ok && near_vec(gj.bracket_basis(AL, Y0), e);
        e = zero_vec<K>(N); e[X0] = c;
        ok = ok && near_vec(gj.bracket_basis(AL, H), e);
        e = zero_vec<K>(N); e[AL] = c;
        ok = ok && near_vec(gj.bracket_basis(H, X0), e);
    }
    if (m) {
        Mat<K> jb(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k)
                jb(k, i) = jj.matrix()(ext.base_index(k), ext.base_index(i));
        const Mat<K>& ab = ext.a;
        for (std::size_t i = 0; i < m && ok; ++i) {
            Vec<K> x = basis_vec<K>(m, i);
            Vec<K> jx = jb * x;
            K kx = kcov[i];
            K kjx(0);
            for (std::size_t p = 0; p < m; ++p) kjx += kcov[p] * jx[p];
            // [y_0, x]_J = k(x) x_0 - k(Jx) alpha + A x
            Vec<K> expect = embed_base(ab * x);
            expect[X0] += kx;
            expect[AL] -= kjx;
            ok = ok && near_vec(gj.bracket_basis(Y0, ext.base_index(i)), expect);
            // [H, x]_J = k(x) alpha + k(Jx) x_0 + A J x
            expect = embed_base(ab * jx);
            expect[AL] += kx;
            expect[X0] += kjx;
            ok = ok && near_vec(gj.bracket_basis(H, ext.base_index(i)), expect);
        }
        // [x, y]_J agrees with the base [.,.]_J (the alpha component drops
        // out exactly when A J = J A)
        LieAlgebra<K> base_gj = [&] {
            std::vector<K> base_c(m * m * m, K(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j2 = 0; j2 < m; ++j2)
                    for (std::size_t k = 0; k < m; ++k)
                        base_c[(i * m + j2) * m + k] =
                            d.c(ext.base_index(i), ext.base_index(j2), ext.base_index(k));
            return build_g_J(LieAlgebra<K>::create(m, std::move(base_c)),
                             ComplexStructure<K>::create(jb));
        }();
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j2 = i + 1; j2 < m && ok; ++j2) {
                Vec<K> got = gj.bracket_basis(ext.base_index(i), ext.base_index(j2));
                Vec<K> expect = embed_base(base_gj.bracket_basis(i, j2));
                ok = ok && near_vec(got, expect);
            }
    }
    out.relations_ok = ok;

    // span{alpha, x_0} + base is a J-stable ideal of (d_A~)_J
    Subspace<K> ideal(N);
    ideal.add(basis_vec<K>(N, AL));
    ideal.add(basis_vec<K>(N, X0));
    for (std::size_t i = 0; i < m; ++i) ideal.add(basis_vec<K>(N, ext.base_index(i)));
    bool ideal_ok = true;
    for (std::size_t i = 0; i < N && ideal_ok; ++i)
        for (const auto& v : ideal.basis()) {
            if (!ideal.contains(gj.bracket(basis_vec<K>(N, i), v))) { ideal_ok = false; break; }
        }
    for (const auto& v : ideal.basis())
        if (!ideal.contains(jj.apply(v))) ideal_ok = false;
    out.ideal_ok = ideal_ok;

    Mat<K> ady0 = gj.ad(basis_vec<K>(N, Y0));
    out.ad_y0_complex_ok = (ady0 * jj.matrix()).near(jj.matrix() * ady0);
    return out;
}

}  // namespace liecx
