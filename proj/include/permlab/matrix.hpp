#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/scalar.hpp"
#include "permlab/space.hpp"

namespace permlab {

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
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!kzero(x)) return false;
    return true;
}

template <class K>
Vec<K>& vec_add_scaled(Vec<K>& acc, const Vec<K>& v, const K& c) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * c;
    return acc;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <class K>
K dot(const Vec<K>& a, const Vec<K>& b) {
    K acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Dense matrix over an exact scalar. Column j holds the image of the j-th
// basis vector, matching the LinearMap convention.
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!kzero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw SpaceMismatch("matrix/vector size mismatch");
        Vec<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] += b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (std::size_t i = 0; i < r.d_.size(); ++i) r.d_[i] -= b.d_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.d_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw SpaceMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (kzero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.d_) x = c * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.d_.size(); ++i)
            if (!kzero(a.d_[i] - b.d_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Determinant by first-row expansion with a column-mask memo.
    K det() const {
        if (rows_ != cols_) throw SpaceMismatch("determinant of a non-square matrix");
        if (rows_ == 0) return K(1);
        std::vector<std::optional<K>> memo(std::size_t(1) << cols_);
        return det_rec((std::uint32_t(1) << cols_) - 1, 0, memo);
    }

    // Inverse over the scalar ring via adjugate / determinant; nullopt when
    // the determinant is not invertible and entries do not divide exactly.
    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw SpaceMismatch("inverse of a non-square matrix");
        K d = det();
        if (kzero(d)) return std::nullopt;
        Matrix adj(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                K c = minor_det(j, i);
                if ((i + j) % 2 == 1) c = -c;
                adj.at(i, j) = c;
            }
        auto dinv = try_invert(d);
        if (dinv) {
            Matrix r = adj;
            for (auto& x : r.d_) x = x * *dinv;
            return r;
        }
        return divide_exact(adj, d);
    }

  private:
    K det_rec(std::uint32_t colmask, std::size_t row, std::vector<std::optional<K>>& memo) const {
        if (colmask == 0) return K(1);
        if (memo[colmask]) return *memo[colmask];
        K acc(0);
        int sign = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(colmask & (std::uint32_t(1) << j))) continue;
            const K& a = at(row, j);
            if (!kzero(a)) {
                K sub = det_rec(colmask & ~(std::uint32_t(1) << j), row + 1, memo);
                K term = a * sub;
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo[colmask] = acc;
        return acc;
    }

    K minor_det(std::size_t drop_row, std::size_t drop_col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        std::size_t r = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            std::size_t c = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                m.at(r, c) = at(i, j);
                ++c;
            }
            ++r;
        }
        return m.det();
    }

    static std::optional<Matrix> divide_exact(const Matrix& m, const K& d) {
        if constexpr (scalar_is_symbolic_v<K>) {
            Matrix r = m;
            for (auto& x : r.d_) {
                auto q = x.try_divide(d);
                if (!q) return std::nullopt;
                x = *q;
            }
            return r;
        } else {
            return std::nullopt;
        }
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> d_;
};

// Linear map between named spaces.
template <class K>
struct LinearMap {
    Space domain;
    Space codomain;
    Matrix<K> m;

    LinearMap() = default;
    LinearMap(Space dom, Space cod, Matrix<K> mat)
        : domain(std::move(dom)), codomain(std::move(cod)), m(std::move(mat)) {
        if (m.rows() != codomain.dim() || m.cols() != domain.dim())
            throw SpaceMismatch("linear map matrix does not match its spaces");
    }

    static LinearMap zero(const Space& dom, const Space& cod) {
        return LinearMap(dom, cod, Matrix<K>(cod.dim(), dom.dim()));
    }
    static LinearMap identity(const Space& s) { return LinearMap(s, s, Matrix<K>::identity(s.dim())); }

    Vec<K> operator()(const Vec<K>& v) const { return m.apply(v); }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.m == b.m;
    }
};

// Transpose on the paired dual bases: <f*(u*), v> = <u*, f(v)>.
template <class K>
LinearMap<K> transpose_map(const LinearMap<K>& f) {
    return LinearMap<K>(dual_of(f.codomain), dual_of(f.domain), f.m.transpose());
}

template <class K>
LinearMap<K> compose(const LinearMap<K>& f, const LinearMap<K>& g) {
    require_same_space(f.domain, g.codomain, "map composition");
    return LinearMap<K>(g.domain, f.codomain, f.m * g.m);
}

enum class Symmetry { none, symmetric, skew };

// Bilinear form on one space; the declared symmetry flag is verified.
template <class K>
struct BilinearForm {
    Space space;
    Matrix<K> m;
    Symmetry declared = Symmetry::none;

    BilinearForm() = default;
    BilinearForm(Space s, Matrix<K> mat, Symmetry sym = Symmetry::none)
        : space(std::move(s)), m(std::move(mat)), declared(sym) {
        if (m.rows() != space.dim() || m.cols() != space.dim())
            throw SpaceMismatch("bilinear form matrix does not match its space");
        if (declared == Symmetry::symmetric && !(m == m.transpose()))
            throw NotSymmetricForm("form declared symmetric but matrix is not");
        if (declared == Symmetry::skew && !(m == -m.transpose()))
            throw NotSymmetricForm("form declared skew but matrix is not");
    }

    K value(const Vec<K>& x, const Vec<K>& y) const {
        K acc(0);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (kzero(x[i])) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) acc += x[i] * m.at(i, j) * y[j];
        }
        return acc;
    }

    bool nondegenerate() const { return !kzero(m.det()); }
};

}  // namespace permlab
