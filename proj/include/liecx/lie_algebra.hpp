#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "liecx/linalg.hpp"

namespace liecx {

struct InvariantViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Finite-dimensional Lie algebra given by structure constants
/// c[i][j][k], meaning [e_i, e_j] = sum_k c_{ij}^k e_k.
template <class K>
class LieAlgebra {
public:
    /// Validating constructor: enforces antisymmetry and the Jacobi
    /// identity (exactly on rationals, to eps on floats).
    static LieAlgebra create(std::size_t dim, std::vector<K> c,
                             std::vector<std::string> names = {}) {
        LieAlgebra a = create_unchecked(dim, std::move(c), std::move(names));
        K anti = a.antisymmetry_defect();
        if (!scalar_traits<K>::is_zero(anti))
            throw InvariantViolation("structure tensor is not antisymmetric");
        K jac = a.jacobi_defect();
        if (!scalar_traits<K>::is_zero(jac))
            throw InvariantViolation("structure tensor violates the Jacobi identity");
        return a;
    }

    /// Raw constructor for tensors that are allowed to violate the
    /// invariants (defect probes, corrupted-input tests).
    static LieAlgebra create_unchecked(std::size_t dim, std::vector<K> c,
                                       std::vector<std::string> names = {}) {
        if (dim == 0) throw DimensionError("Lie algebra dimension must be positive");
        if (c.size() != dim * dim * dim)
            throw DimensionError("structure tensor has wrong size");
        LieAlgebra a;
        a.n_ = dim;
        a.c_ = std::move(c);
        if (names.empty()) {
            for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
        }
        if (names.size() != dim) throw DimensionError("wrong number of basis names");
        a.names_ = std::move(names);
        return a;
    }

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<K>& tensor() const { return c_; }

    /// c_{ij}^k
    const K& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

    Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
        Vec<K> v(n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
        return v;
    }

    /// Bilinear extension of the structure tensor.
    Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != n_ || y.size() != n_)
            throw DimensionError("bracket operand dimension mismatch");
        Vec<K> out = zero_vec<K>(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (scalar_traits<K>::exact && x[i] == K(0)) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (scalar_traits<K>::exact && y[j] == K(0)) continue;
                K f = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) out[k] += f * c(i, j, k);
            }
        }
        return out;
    }

    /// Matrix of ad(e_i).
    Mat<K> ad_basis(std::size_t i) const {
        Mat<K> m(n_, n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    Mat<K> ad(const Vec<K>& x) const {
        Mat<K> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (scalar_traits<K>::is_zero(x[i])) continue;
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) m(k, j) += x[i] * c(i, j, k);
        }
        return m;
    }

    K antisymmetry_defect() const {
        K worst(0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    worst = std::max(worst, scalar_traits<K>::abs(c(i, j, k) + c(j, i, k)));
        return worst;
    }

    /// Max-norm of the Jacobiator tensor
    /// J(i,j,k)^l = sum_m c_{ij}^m c_{mk}^l + c_{jk}^m c_{mi}^l + c_{ki}^m c_{mj}^l.
    K jacobi_defect() const {
        K worst(0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = j + 1; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l) {
                        K s(0);
                        for (std::size_t m = 0; m < n_; ++m) {
                            s += c(i, j, m) * c(m, k, l);
                            s += c(j, k, m) * c(m, i, l);
                            s += c(k, i, m) * c(m, j, l);
                        }
                        worst = std::max(worst, scalar_traits<K>::abs(s));
                    }
        return worst;
    }

    bool is_abelian() const {
        for (const K& a : c_)
            if (!scalar_traits<K>::is_zero(a)) return false;
        return true;
    }

    /// { x : [x, e_j] = 0 for all j }
    Subspace<K> center() const {
        Mat<K> m(n_ * n_, n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t i = 0; i < n_; ++i) m(j * n_ + k, i) = c(i, j, k);
        return Subspace<K>::span(n_, kernel(m));
    }

    /// span{ [a, b] : a in A, b in B }
    Subspace<K> bracket_span(const Subspace<K>& a, const Subspace<K>& b) const {
        Subspace<K> out(n_);
        for (const auto& u : a.basis())
            for (const auto& v : b.basis()) out.add(bracket(u, v));
        return out;
    }

    Subspace<K> derived_subalgebra() const {
        Subspace<K> g = Subspace<K>::full(n_);
        return bracket_span(g, g);
    }

    /// Dimensions of g^(1) = [g,g], g^(2) = [g^(1),g^(1)], ... until the
    /// series stabilizes.
    std::vector<std::size_t> derived_series_dims() const {
        std::vector<std::size_t> dims;
        Subspace<K> cur = Subspace<K>::full(n_);
        while (true) {
            Subspace<K> next = bracket_span(cur, cur);
            dims.push_back(next.dim());
            if (next.dim() == 0 || next.dim() == cur.dim()) break;
            cur = next;
        }
        return dims;
    }

    /// Dimensions of g_1 = [g,g], g_2 = [g,g_1], ...
    std::vector<std::size_t> lower_central_series_dims() const {
        std::vector<std::size_t> dims;
        Subspace<K> g = Subspace<K>::full(n_);
        Subspace<K> cur = bracket_span(g, g);
        while (true) {
            dims.push_back(cur.dim());
            Subspace<K> next = bracket_span(g, cur);
            if (next.dim() == 0 || next.dim() == cur.dim()) {
                if (next.dim() == 0 && cur.dim() != 0) dims.push_back(0);
                break;
            }
            cur = next;
        }
        return dims;
    }

    bool is_solvable() const {
        auto d = derived_series_dims();
        return d.empty() || d.back() == 0;
    }
    bool is_nilpotent() const {
        auto d = lower_central_series_dims();
        return d.empty() || d.back() == 0;
    }
    bool is_unimodular() const {
        for (std::size_t i = 0; i < n_; ++i) {
            K tr(0);
            for (std::size_t j = 0; j < n_; ++j) tr += c(i, j, j);
            if (!scalar_traits<K>::is_zero(tr)) return false;
        }
        return true;
    }

    /// B(e_i, e_j) = tr(ad e_i . ad e_j)
    Mat<K> killing_form() const {
        Mat<K> b(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                K s(0);
                for (std::size_t a = 0; a < n_; ++a)
                    for (std::size_t m = 0; m < n_; ++m) s += c(i, a, m) * c(j, m, a);
                b(i, j) = s;
                b(j, i) = s;
            }
        return b;
    }

private:
    LieAlgebra() = default;
    std::size_t n_ = 0;
    std::vector<K> c_;
    std::vector<std::string> names_;
};

/// Incremental construction of the structure tensor: add(i, j, k, v)
/// records a coefficient v of e_k in [e_i, e_j] (and its antisymmetric
/// mirror).
template <class K>
class LieAlgebraBuilder {
public:
    explicit LieAlgebraBuilder(std::size_t dim) : n_(dim), c_(dim * dim * dim, K(0)) {}

    LieAlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, K v) {
        if (i >= n_ || j >= n_ || k >= n_) throw DimensionError("builder index out of range");
        if (i == j) throw DimensionError("diagonal bracket must vanish");
        c_[(i * n_ + j) * n_ + k] += v;
        c_[(j * n_ + i) * n_ + k] -= v;
        return *this;
    }

    LieAlgebraBuilder& names(std::vector<std::string> names) {
        names_ = std::move(names);
        return *this;
    }

    LieAlgebra<K> build() const { return LieAlgebra<K>::create(n_, c_, names_); }
    LieAlgebra<K> build_unchecked() const {
        return LieAlgebra<K>::create_unchecked(n_, c_, names_);
    }

private:
    std::size_t n_;
    std::vector<K> c_;
    std::vector<std::string> names_;
};

/// Structural fingerprint used for isomorphism screening.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lower_central_dims;
    bool solvable = false;
    bool nilpotent = false;
    bool unimodular = false;
    std::size_t killing_rank = 0;
    std::size_t killing_neg = 0;
    std::size_t killing_pos = 0;

    bool operator==(const Fingerprint&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "dim=" << dim << " z=" << center_dim << " derived=[";
        for (std::size_t i = 0; i < derived_dims.size(); ++i)
            os << (i ? "," : "") << derived_dims[i];
        os << "] lcs=[";
        for (std::size_t i = 0; i < lower_central_dims.size(); ++i)
            os << (i ? "," : "") << lower_central_dims[i];
        os << "]" << (solvable ? " solvable" : "") << (nilpotent ? " nilpotent" : "")
           << (unimodular ? " unimodular" : "") << " killing(rank=" << killing_rank
           << ",sig=(" << killing_neg << "," << killing_pos << "))";
        return os.str();
    }
};

template <class K>
Fingerprint structural_invariants(const LieAlgebra<K>& a) {
    Fingerprint f;
    f.dim = a.dim();
    f.center_dim = a.center().dim();
    f.derived_dims = a.derived_series_dims();
    f.lower_central_dims = a.lower_central_series_dims();
    f.solvable = a.is_solvable();
    f.nilpotent = a.is_nilpotent();
    f.unimodular = a.is_unimodular();
    Inertia ki = inertia(a.killing_form());
    f.killing_rank = ki.neg + ki.pos;
    f.killing_neg = ki.neg;
    f.killing_pos = ki.pos;
    return f;
}

}  // namespace liecx
