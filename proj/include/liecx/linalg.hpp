#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liecx/scalar.hpp"

namespace liecx {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) { return Vec<K>(n, K(0)); }

template <class K>
Vec<K> basis_vec(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <class K>
void axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
    for (const K& a : v)
        if (!scalar_traits<K>::is_zero(a)) return false;
    return true;
}

template <class K>
K max_abs(const Vec<K>& v) {
    K m(0);
    for (const K& a : v) m = std::max(m, scalar_traits<K>::abs(a));
    return m;
}

/// Dense row-major matrix over an exact or approximate scalar field.
/// The matrix of a linear operator stores images of basis vectors in its
/// columns: (A x)_i = sum_j A(i,j) x_j.
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, K(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<K>> rows) {
        Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw DimensionError("ragged initializer");
            std::size_t j = 0;
            for (const K& a : r) m(i, j++) = a;
            ++i;
        }
        return m;
    }

    static Mat from_columns(const std::vector<Vec<K>>& cols) {
        if (cols.empty()) return Mat();
        Mat m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw DimensionError("ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    Vec<K> column(std::size_t j) const {
        Vec<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    Vec<K> row(std::size_t i) const {
        Vec<K> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    void set_column(std::size_t j, const Vec<K>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (scalar_traits<K>::exact && a == K(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Vec<K> operator*(const Vec<K>& x) const {
        if (cols_ != x.size()) throw DimensionError("matrix/vector shape mismatch");
        Vec<K> y(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (K& a : r.d_) a = -a;
        return r;
    }
    Mat scaled(const K& s) const {
        Mat r = *this;
        for (K& a : r.d_) a *= s;
        return r;
    }

    bool near(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < d_.size(); ++i)
            if (!scalar_traits<K>::near(d_[i], o.d_[i])) return false;
        return true;
    }

    K max_abs() const {
        K m(0);
        for (const K& a : d_) m = std::max(m, scalar_traits<K>::abs(a));
        return m;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!scalar_traits<K>::near((*this)(i, j), (*this)(j, i))) return false;
        return true;
    }
    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (!scalar_traits<K>::near((*this)(i, j), -(*this)(j, i))) return false;
        return true;
    }

    /// Gauss-Jordan inverse with partial pivoting (largest |pivot| on the
    /// float backend, first nonzero on the exact one).
    Mat inverse() const {
        if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
        std::size_t n = rows_;
        Mat a = *this;
        Mat inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            K best = scalar_traits<K>::abs(a(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                K cand = scalar_traits<K>::abs(a(r, col));
                if (cand > best) { best = cand; piv = r; }
                if (scalar_traits<K>::exact && best != K(0)) break;
            }
            if (scalar_traits<K>::is_zero(a(piv, col)))
                throw SingularMatrixError("singular matrix");
            if (piv != col) { a.swap_rows(piv, col); inv.swap_rows(piv, col); }
            K d = a(col, col);
            for (std::size_t j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                K f = a(r, col);
                if (scalar_traits<K>::exact ? f == K(0) : scalar_traits<K>::is_zero(f)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> d_;
};

/// Reduced row echelon form in place; returns pivot column indices.
/// Rank-revealing on the float backend via the eps tolerance.
template <class K>
std::vector<std::size_t> rref(Mat<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        K best = scalar_traits<K>::abs(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            K cand = scalar_traits<K>::abs(m(r, col));
            if (cand > best) { best = cand; piv = r; }
            if (scalar_traits<K>::exact && best != K(0)) break;
        }
        if (scalar_traits<K>::is_zero(m(piv, col))) continue;
        m.swap_rows(piv, row);
        K d = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= d;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            K f = m(r, col);
            if (scalar_traits<K>::exact ? f == K(0) : scalar_traits<K>::is_zero(f)) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Mat<K> m) { return rref(m).size(); }

/// Basis of the null space  { x : A x = 0 }.
template <class K>
std::vector<Vec<K>> kernel(Mat<K> a) {
    std::size_t n = a.cols();
    std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec<K> v = zero_vec<K>(n);
        v[j] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Sylvester inertia of a symmetric matrix.
struct Inertia {
    std::size_t neg = 0, pos = 0, zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Symmetric-pivot LDL^T congruence reduction. Diagonal pivots are used
/// when available; a zero diagonal with a nonzero off-diagonal entry is
/// handled by the congruence row/col addition trick, which preserves
/// inertia. Exact on the rational backend.
template <class K>
Inertia inertia(Mat<K> a) {
    if (a.rows() != a.cols()) throw DimensionError("inertia of non-square matrix");
    if (!a.is_symmetric()) throw DimensionError("inertia of non-symmetric matrix");
    std::size_t n = a.rows();
    Inertia sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // best remaining diagonal pivot
        std::size_t piv = n;
        K best(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            K cand = scalar_traits<K>::abs(a(i, i));
            if (piv == n || cand > best) { piv = i; best = cand; }
        }
        if (piv == n) break;
        if (scalar_traits<K>::is_zero(a(piv, piv))) {
            // all remaining diagonals vanish; look for an off-diagonal entry
            std::size_t bi = n, bj = n;
            K obest(0);
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    K cand = scalar_traits<K>::abs(a(i, j));
                    if (bi == n || cand > obest) { bi = i; bj = j; obest = cand; }
                }
            }
            if (bi == n || scalar_traits<K>::is_zero(a(bi, bj))) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // congruence: add row/col bj to bi, producing 2*a(bi,bj) on the diagonal
            for (std::size_t j = 0; j < n; ++j) a(bi, j) += a(bj, j);
            for (std::size_t i = 0; i < n; ++i) a(i, bi) += a(i, bj);
            piv = bi;
        }
        K d = a(piv, piv);
        if (d > K(0)) ++sig.pos; else ++sig.neg;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            K f = a(i, piv) / d;
            if (scalar_traits<K>::exact ? f == K(0) : scalar_traits<K>::is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j]) continue;
                a(i, j) -= f * a(piv, j);
            }
        }
        // zero out the pivot row/col so later tolerance scans ignore it
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv) continue;
            a(i, piv) = K(0);
            a(piv, i) = K(0);
        }
    }
    sig.zero = n - sig.neg - sig.pos;
    return sig;
}

/// Row space of a set of vectors, kept in RREF so subspaces compare
/// canonically.
template <class K>
class Subspace {
public:
    Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec<K>>& gens) {
        Subspace s(ambient);
        for (const auto& g : gens) s.add(g);
        return s;
    }
    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        for (std::size_t i = 0; i < ambient; ++i) s.add(basis_vec<K>(ambient, i));
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec<K>>& basis() const { return basis_; }

    /// Inserts a vector, keeping the stored basis in reduced echelon form.
    /// Returns true when the vector enlarged the span.
    bool add(Vec<K> v) {
        if (v.size() != ambient_) throw DimensionError("subspace/vector ambient mismatch");
        reduce(v);
        std::size_t lead = leading_index(v);
        if (lead == ambient_) return false;
        K d = v[lead];
        for (K& a : v) a /= d;
        for (auto& b : basis_) {
            K f = b[lead];
            if (!scalar_traits<K>::is_zero(f))
                for (std::size_t j = 0; j < ambient_; ++j) b[j] -= f * v[j];
        }
        basis_.push_back(std::move(v));
        std::sort(basis_.begin(), basis_.end(), [this](const Vec<K>& a, const Vec<K>& b) {
            return leading_index(a) < leading_index(b);
        });
        return true;
    }

    bool contains(Vec<K> v) const {
        reduce(v);
        return vec_is_zero(v);
    }

    /// Canonical representative of v modulo this subspace (zeros at every
    /// pivot column of the stored RREF basis).
    Vec<K> reduce_mod(Vec<K> v) const {
        reduce(v);
        return v;
    }
    bool contains(const Subspace& o) const {
        for (const auto& b : o.basis_)
            if (!contains(b)) return false;
        return true;
    }
    bool operator==(const Subspace& o) const {
        return dim() == o.dim() && contains(o);
    }

private:
    std::size_t leading_index(const Vec<K>& v) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!scalar_traits<K>::is_zero(v[j])) return j;
        return ambient_;
    }
    void reduce(Vec<K>& v) const {
        for (const auto& b : basis_) {
            std::size_t lead = leading_index(b);
            K f = v[lead];
            if (!scalar_traits<K>::is_zero(f))
                for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * b[j];
        }
    }

    std::size_t ambient_;
    std::vector<Vec<K>> basis_;
};

}  // namespace liecx
