#pragma once

#include <string>
#include <vector>

#include "permlab/bialgebra.hpp"

namespace permlab {

// Multiplication induced by a symmetric form on a coalgebra:
// x . y = x_(1) w(x_(2), y) + y_(1) w(x, y_(2)) - y_(2) w(x, y_(1)).
template <class K>
PermAlgebra<K> omega_product(const PermCoalgebra<K>& C, const BilinearForm<K>& omega) {
    require_same_space(omega.space, C.space, "omega product");
    if (!(omega.m == omega.m.transpose())) throw NotSymmetricForm("omega product needs a symmetric form");
    std::size_t n = C.dim();
    PermAlgebra<K> A(C.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const K& di = C.at(i, p, q);
                    if (!kzero(di)) {
                        A.at(i, j, p) += di * omega.m.at(q, j);  // x_(1) w(x_(2), y)
                    }
                    const K& dj = C.at(j, p, q);
                    if (!kzero(dj)) {
                        A.at(i, j, p) += dj * omega.m.at(i, q);  // y_(1) w(x, y_(2))
                        A.at(i, j, q) -= dj * omega.m.at(i, p);  // - y_(2) w(x, y_(1))
                    }
                }
    return A;
}

// Classical co-perm Yang-Baxter equation:
// w(x_(1),z)w(x_(2),y) - w(x,z_(1))w(y,z_(2)) + w(y_(1),z)w(x,y_(2))
//   - w(x,y_(1))w(y_(2),z) = 0.
template <class K>
Report check_coybe(const PermCoalgebra<K>& C, const BilinearForm<K>& omega,
                   const std::string& name = "COYBE") {
    require_same_space(omega.space, C.space, "co-perm YBE");
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi)
            for (std::size_t zi = 0; zi < n; ++zi) {
                K total(0);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        total += C.at(xi, p, q) * omega.m.at(p, zi) * omega.m.at(q, yi);
                        total -= C.at(zi, p, q) * omega.m.at(xi, p) * omega.m.at(yi, q);
                        total += C.at(yi, p, q) * omega.m.at(p, zi) * omega.m.at(xi, q);
                        total -= C.at(yi, p, q) * omega.m.at(xi, p) * omega.m.at(q, zi);
                    }
                acc.add("x=" + C.space.basis[xi] + ",y=" + C.space.basis[yi] + ",z=" + C.space.basis[zi],
                        total);
            }
    return acc.finish();
}

// Dual quasitriangular fusion laws.
// w(x . y, z) = w(x, z_(1)) w(y, z_(2)).
template <class K>
Report check_dqt1(const PermCoalgebra<K>& C, const BilinearForm<K>& omega, const PermAlgebra<K>& prod,
                  const std::string& name = "DQT1") {
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi)
            for (std::size_t zi = 0; zi < n; ++zi) {
                Vec<K> xy = prod.basis_product(xi, yi);
                K lhs(0);
                for (std::size_t t = 0; t < n; ++t) lhs += xy[t] * omega.m.at(t, zi);
                K rhs(0);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        rhs += C.at(zi, p, q) * omega.m.at(xi, p) * omega.m.at(yi, q);
                acc.add("x=" + C.space.basis[xi] + ",y=" + C.space.basis[yi] + ",z=" + C.space.basis[zi],
                        lhs - rhs);
            }
    return acc.finish();
}

// w(x, y . z) = w(x_(1), y) w(x_(2), z).
template <class K>
Report check_dqt2(const PermCoalgebra<K>& C, const BilinearForm<K>& omega, const PermAlgebra<K>& prod,
                  const std::string& name = "DQT2") {
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi)
            for (std::size_t zi = 0; zi < n; ++zi) {
                Vec<K> yz = prod.basis_product(yi, zi);
                K lhs(0);
                for (std::size_t t = 0; t < n; ++t) lhs += omega.m.at(xi, t) * yz[t];
                K rhs(0);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        rhs += C.at(xi, p, q) * omega.m.at(p, yi) * omega.m.at(q, zi);
                acc.add("x=" + C.space.basis[xi] + ",y=" + C.space.basis[yi] + ",z=" + C.space.basis[zi],
                        lhs - rhs);
            }
    return acc.finish();
}

// Symplectic compatibility w(xy,z) + w(xz,y) = w(zx,y) + w(zy,x).
template <class K>
Report check_symplectic(const PermAlgebra<K>& A, const BilinearForm<K>& omega,
                        const std::string& name = "SYMP") {
    require_same_space(omega.space, A.space, "symplectic check");
    if (!(omega.m == omega.m.transpose())) throw NotSymmetricForm("symplectic form must be symmetric");
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j), z = basis_vec<K>(n, k);
                K lhs = omega.value(A.multiply(x, y), z) + omega.value(A.multiply(x, z), y);
                K rhs = omega.value(A.multiply(z, x), y) + omega.value(A.multiply(z, y), x);
                acc.add("x=" + A.space.basis[i] + ",y=" + A.space.basis[j] + ",z=" + A.space.basis[k],
                        lhs - rhs);
            }
    return acc.finish();
}

// Cosymplectic compatibility for a symmetric r against the coproduct:
// r1_(1) (x) r1_(2) (x) r2 + r1_(1) (x) r2 (x) r1_(2)
//   - r1_(2) (x) r2 (x) r1_(1) - r2 (x) r1_(2) (x) r1_(1) = 0.
template <class K>
Report check_cosymplectic(const PermCoalgebra<K>& C, const Tensor2<K>& r,
                          const std::string& name = "COSYMP") {
    require_same_space(r.s1, C.space, "cosymplectic check");
    if (!r.symmetric()) throw NotSymmetric("cosymplectic r must be symmetric");
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    Tensor3<K> out(C.space, C.space, C.space);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const K& w = r.at(a, b);
            if (kzero(w)) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const K& d = C.at(a, p, q);
                    if (kzero(d)) continue;
                    K wd = w * d;
                    out.at(p, q, b) += wd;
                    out.at(p, b, q) += wd;
                    out.at(q, b, p) -= wd;
                    out.at(b, q, p) -= wd;
                }
        }
    detail::acc_tensor3(acc, C.space, out, "cosymp");
    return acc.finish();
}

// The intermediate diagnostic identity of the symplectic construction:
// w(r2,y)w(zx,r1) - w(r2,y)w(xz,r1) - w(r1,z)w(xy,r2) + w(x,r1)w(zy,r2) = 0.
template <class K>
Report check_cqt_sym(const PermAlgebra<K>& A, const BilinearForm<K>& omega, const Tensor2<K>& r,
                     const std::string& name = "CQT_SYM") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    auto wv = [&](const Vec<K>& u, const Vec<K>& v) { return omega.value(u, v); };
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi)
            for (std::size_t zi = 0; zi < n; ++zi) {
                Vec<K> x = basis_vec<K>(n, xi), y = basis_vec<K>(n, yi), z = basis_vec<K>(n, zi);
                Vec<K> zx = A.multiply(z, x), xz = A.multiply(x, z);
                Vec<K> xy = A.multiply(x, y), zy = A.multiply(z, y);
                K total(0);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        const K& w = r.at(a, b);
                        if (kzero(w)) continue;
                        Vec<K> ea = basis_vec<K>(n, a), eb = basis_vec<K>(n, b);
                        total += w * (wv(eb, y) * wv(zx, ea) - wv(eb, y) * wv(xz, ea) -
                                      wv(ea, z) * wv(xy, eb) + wv(x, ea) * wv(zy, eb));
                    }
                acc.add("x=" + A.space.basis[xi] + ",y=" + A.space.basis[yi] + ",z=" + A.space.basis[zi],
                        total);
            }
    return acc.finish();
}

// Operator from a symplectic structure: N(x) = w(x, r1) r2. All three
// hypotheses of the construction are checked before the operator is
// produced; the returned map always passes the Nijenhuis condition.
template <class K>
LinearMap<K> nijenhuis_from_symplectic(const PermAlgebra<K>& A, const BilinearForm<K>& omega,
                                       const Tensor2<K>& r) {
    Report symp = check_symplectic(A, omega);
    if (!symp.ok()) throw HypothesisFailure("symplectic hypothesis fails: " + symp.summary());
    if (!r.symmetric()) throw NotSymmetric("quasitriangular hypothesis needs a symmetric r");
    Report qt = check_pybe(A, r);
    if (!qt.ok()) throw HypothesisFailure("quasitriangular hypothesis fails: " + qt.summary());
    PermCoalgebra<K> delta = coboundary_delta(A, r);
    Report dqt = check_coybe(delta, omega);
    if (!dqt.ok()) throw HypothesisFailure("dual quasitriangular hypothesis fails: " + dqt.summary());

    std::size_t n = A.dim();
    Matrix<K> nm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) nm.at(b, i) += omega.m.at(i, a) * r.at(a, b);
    return LinearMap<K>(A.space, A.space, std::move(nm));
}

// Coalgebra-side operator from a cosymplectic structure: S(x) = r1 w(r2, x).
template <class K>
LinearMap<K> nijenhuis_from_cosymplectic(const PermCoalgebra<K>& C, const BilinearForm<K>& omega,
                                         const Tensor2<K>& r) {
    Report cosym = check_cosymplectic(C, r);
    if (!cosym.ok()) throw HypothesisFailure("cosymplectic hypothesis fails: " + cosym.summary());
    Report dqt = check_coybe(C, omega);
    if (!dqt.ok()) throw HypothesisFailure("dual quasitriangular hypothesis fails: " + dqt.summary());
    PermAlgebra<K> prod = omega_product(C, omega);
    Report qt = check_pybe(prod, r);
    if (!qt.ok()) throw HypothesisFailure("quasitriangular hypothesis fails: " + qt.summary());

    std::size_t n = C.dim();
    Matrix<K> sm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) sm.at(a, i) += r.at(a, b) * omega.m.at(b, i);
    return LinearMap<K>(C.space, C.space, std::move(sm));
}

}  // namespace permlab
