#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "permlab/report.hpp"
#include "permlab/tensor.hpp"

namespace permlab {

// Right perm algebra as structure constants: e_i e_j = sum_k c[i][j][k] e_k.
// "Verified" is a status the caller establishes by running checks; bundles
// may carry unverified candidates.
template <class K>
struct PermAlgebra {
    Space space;
    std::vector<K> c;

    PermAlgebra() = default;
    explicit PermAlgebra(Space s) : space(std::move(s)), c(cube(space.dim()), K(0)) {}

    static std::size_t cube(std::size_t d) { return d * d * d; }
    std::size_t dim() const { return space.dim(); }

    K& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim() + j) * dim() + k]; }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim() + j) * dim() + k]; }

    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        Vec<K> r(dim(), K(0));
        for (std::size_t k = 0; k < dim(); ++k) r[k] = at(i, j, k);
        return r;
    }

    // Bilinear extension of the structure constants.
    Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != dim() || y.size() != dim()) throw SpaceMismatch("multiply: vector dimension mismatch");
        Vec<K> r(dim(), K(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (kzero(x[i])) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (kzero(y[j])) continue;
                K cij = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k) r[k] += cij * at(i, j, k);
            }
        }
        return r;
    }

    // Left multiplication L(x): y -> x y, as a matrix.
    Matrix<K> left_mult(const Vec<K>& x) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec<K> col = multiply(x, basis_vec<K>(dim(), j));
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }
    Matrix<K> left_mult_basis(std::size_t i) const { return left_mult(basis_vec<K>(dim(), i)); }

    // Right multiplication R(x): y -> y x, as a matrix.
    Matrix<K> right_mult(const Vec<K>& x) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec<K> col = multiply(basis_vec<K>(dim(), j), x);
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }
    Matrix<K> right_mult_basis(std::size_t i) const { return right_mult(basis_vec<K>(dim(), i)); }

    friend bool operator==(const PermAlgebra& a, const PermAlgebra& b) {
        if (a.space != b.space) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!kzero(a.c[i] - b.c[i])) return false;
        return true;
    }
};

// Perm coalgebra as structure constants: Delta(e_i) = sum d[i][j][k] e_j (x) e_k.
template <class K>
struct PermCoalgebra {
    Space space;
    std::vector<K> d;

    PermCoalgebra() = default;
    explicit PermCoalgebra(Space s) : space(std::move(s)), d(space.dim() * space.dim() * space.dim(), K(0)) {}

    std::size_t dim() const { return space.dim(); }

    K& at(std::size_t i, std::size_t j, std::size_t k) { return d[(i * dim() + j) * dim() + k]; }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const { return d[(i * dim() + j) * dim() + k]; }

    Tensor2<K> cop_basis(std::size_t i) const {
        Tensor2<K> t(space, space);
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) t.at(j, k) = at(i, j, k);
        return t;
    }

    Tensor2<K> cop(const Vec<K>& x) const {
        if (x.size() != dim()) throw SpaceMismatch("coproduct: vector dimension mismatch");
        Tensor2<K> t(space, space);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (kzero(x[i])) continue;
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k) t.at(j, k) += x[i] * at(i, j, k);
        }
        return t;
    }

    friend bool operator==(const PermCoalgebra& a, const PermCoalgebra& b) {
        if (a.space != b.space) return false;
        for (std::size_t i = 0; i < a.d.size(); ++i)
            if (!kzero(a.d[i] - b.d[i])) return false;
        return true;
    }
};

// Dualization on paired bases: d*[k][i][j] = c[i][j][k], and back.
template <class K>
PermCoalgebra<K> dualize_algebra(const PermAlgebra<K>& A) {
    PermCoalgebra<K> C(dual_of(A.space));
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) C.at(k, i, j) = A.at(i, j, k);
    return C;
}

template <class K>
PermAlgebra<K> dualize_coalgebra(const PermCoalgebra<K>& C) {
    PermAlgebra<K> A(dual_of(C.space));
    std::size_t n = C.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) A.at(i, j, k) = C.at(k, i, j);
    return A;
}

// Nondegenerate invariant bilinear form on a perm algebra.
template <class K>
struct FrobeniusForm {
    BilinearForm<K> form;
    bool nondegenerate = false;
};

namespace names {

inline std::string basis(const Space& s, std::size_t i) { return s.basis[i]; }

template <class K>
std::string vec(const Space& s, const Vec<K>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (kzero(v[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + kstr(v[i]) + ")*" + s.basis[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace names

// --- structural identity checks ----------------------------------------

// (xy)z = x(yz) = x(zy), all pairwise equalities over basis triples.
template <class K>
Report check_perm(const PermAlgebra<K>& A, const std::string& name = "PERM") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> ei = basis_vec<K>(n, i), ej = basis_vec<K>(n, j), ek = basis_vec<K>(n, k);
                Vec<K> a = A.multiply(A.multiply(ei, ej), ek);
                Vec<K> b = A.multiply(ei, A.multiply(ej, ek));
                Vec<K> c = A.multiply(ei, A.multiply(ek, ej));
                std::string tup = "x=" + names::basis(A.space, i) + ",y=" + names::basis(A.space, j) +
                                  ",z=" + names::basis(A.space, k);
                for (std::size_t t = 0; t < n; ++t) {
                    acc.add(tup + " eq(1,2) @" + names::basis(A.space, t), a[t] - b[t]);
                    acc.add(tup + " eq(1,3) @" + names::basis(A.space, t), a[t] - c[t]);
                    acc.add(tup + " eq(2,3) @" + names::basis(A.space, t), b[t] - c[t]);
                }
            }
    return acc.finish();
}

// Coassociativity chain with the flipped right leg, pairwise.
template <class K>
Report check_coperm(const PermCoalgebra<K>& C, const std::string& name = "COPERM") {
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Tensor3<K> t1(C.space, C.space, C.space), t2(C.space, C.space, C.space);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const K& w = C.at(i, a, b);
                if (kzero(w)) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        // (Delta (x) id) Delta and (id (x) Delta) Delta
                        t1.at(p, q, b) += w * C.at(a, p, q);
                        t2.at(a, p, q) += w * C.at(b, p, q);
                    }
            }
        Tensor3<K> t3 = swap_legs(t2, 2, 3);
        std::string tup = "x=" + names::basis(C.space, i);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t s = 0; s < n; ++s) {
                    std::string at = tup + " @(" + names::basis(C.space, p) + "," + names::basis(C.space, q) +
                                     "," + names::basis(C.space, s) + ")";
                    acc.add(at + " eq(1,2)", t1.at(p, q, s) - t2.at(p, q, s));
                    acc.add(at + " eq(1,3)", t1.at(p, q, s) - t3.at(p, q, s));
                    acc.add(at + " eq(2,3)", t2.at(p, q, s) - t3.at(p, q, s));
                }
    }
    return acc.finish();
}

// Nijenhuis condition N(x)N(y) + N^2(xy) = N(N(x)y) + N(xN(y)).
template <class K>
Report check_nijenhuis(const PermAlgebra<K>& A, const LinearMap<K>& N, const std::string& name = "NIJ") {
    require_same_space(N.domain, A.space, "Nijenhuis operator domain");
    require_same_space(N.codomain, A.space, "Nijenhuis operator codomain");
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            Vec<K> nx = N(x), ny = N(y);
            Vec<K> lhs = A.multiply(nx, ny);
            vec_add_scaled(lhs, N(N(A.multiply(x, y))), K(1));
            Vec<K> rhs = N(A.multiply(nx, y));
            vec_add_scaled(rhs, N(A.multiply(x, ny)), K(1));
            std::string tup = "x=" + names::basis(A.space, i) + ",y=" + names::basis(A.space, j);
            for (std::size_t t = 0; t < n; ++t)
                acc.add(tup + " @" + names::basis(A.space, t), lhs[t] - rhs[t]);
        }
    return acc.finish();
}

// Nijenhuis condition on a coalgebra:
// (S(x)S)Delta(x) + Delta(S^2 x) = (S(x)id)Delta(Sx) + (id(x)S)Delta(Sx).
template <class K>
Report check_conijenhuis(const PermCoalgebra<K>& C, const LinearMap<K>& S, const std::string& name = "NIJ_CO") {
    require_same_space(S.domain, C.space, "coalgebra Nijenhuis operator domain");
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Tensor2<K> dx = C.cop(x);
        Tensor2<K> dsx = C.cop(S(x));
        Tensor2<K> lhs = leg_apply(S, leg_apply(S, dx, 1), 2) + C.cop(S(S(x)));
        Tensor2<K> rhs = leg_apply(S, dsx, 1) + leg_apply(S, dsx, 2);
        std::string tup = "x=" + names::basis(C.space, i);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                acc.add(tup + " @(" + names::basis(C.space, p) + "," + names::basis(C.space, q) + ")",
                        lhs.at(p, q) - rhs.at(p, q));
    }
    return acc.finish();
}

// Invariance B(xy, z) = B(y, zx) - B(y, xz).
template <class K>
Report check_frobenius(const PermAlgebra<K>& A, const BilinearForm<K>& B, const std::string& name = "FROB") {
    require_same_space(B.space, A.space, "invariant form space");
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j), z = basis_vec<K>(n, k);
                K lhs = B.value(A.multiply(x, y), z);
                K rhs = B.value(y, A.multiply(z, x)) - B.value(y, A.multiply(x, z));
                acc.add("x=" + names::basis(A.space, i) + ",y=" + names::basis(A.space, j) +
                            ",z=" + names::basis(A.space, k),
                        lhs - rhs);
            }
    return acc.finish();
}

// Skew consequence B(xy, z) = B(x, zy).
template <class K>
Report check_frobenius_skew_id(const PermAlgebra<K>& A, const BilinearForm<K>& B,
                               const std::string& name = "FROB_SKEW_ID") {
    require_same_space(B.space, A.space, "invariant form space");
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j), z = basis_vec<K>(n, k);
                K lhs = B.value(A.multiply(x, y), z);
                K rhs = B.value(x, A.multiply(z, y));
                acc.add("x=" + names::basis(A.space, i) + ",y=" + names::basis(A.space, j) +
                            ",z=" + names::basis(A.space, k),
                        lhs - rhs);
            }
    return acc.finish();
}

}  // namespace permlab
