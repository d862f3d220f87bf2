#pragma once

// Shared construction helpers for the test suites: the worked 2-D algebras,
// random basis changes over F_p, and small exhaustive searches used to build
// hypothesis-satisfying instances.

#include <random>
#include <vector>

#include "permlab/rep.hpp"

namespace permlab::testing {

inline Space g2() { return make_space("g", {"e1", "e2"}); }

// e1 e1 = e1, e2 e1 = e2 (the introductory example; classification item (a)).
template <class K>
PermAlgebra<K> intro_algebra() {
    PermAlgebra<K> A(g2());
    A.at(0, 0, 0) = K(1);
    A.at(1, 0, 1) = K(1);
    return A;
}

// e1 e2 = e1, e2 e2 = e2 (classification item (c); intro with basis swapped).
template <class K>
PermAlgebra<K> algebra_c() {
    PermAlgebra<K> A(g2());
    A.at(0, 1, 0) = K(1);
    A.at(1, 1, 1) = K(1);
    return A;
}

// Commutative nil algebra e1 e1 = e2.
template <class K>
PermAlgebra<K> nil_algebra() {
    PermAlgebra<K> A(g2());
    A.at(0, 0, 1) = K(1);
    return A;
}

// One-dimensional idempotent sitting inside a 2-D space: e1 e1 = e1.
template <class K>
PermAlgebra<K> split_algebra() {
    PermAlgebra<K> A(g2());
    A.at(0, 0, 0) = K(1);
    return A;
}

template <class K>
std::vector<PermAlgebra<K>> perm_pool() {
    return {intro_algebra<K>(), algebra_c<K>(), nil_algebra<K>(), split_algebra<K>(),
            PermAlgebra<K>(g2())};
}

inline Fp rand_fp(std::mt19937_64& rng, std::uint32_t p) {
    std::uniform_int_distribution<long long> d(0, p - 1);
    return Fp::make(p, d(rng));
}

inline Matrix<Fp> rand_fp_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
    Matrix<Fp> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_fp(rng, p);
    return m;
}

inline Matrix<Fp> rand_invertible(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    while (true) {
        Matrix<Fp> m = rand_fp_matrix(rng, n, n, p);
        if (!m.det().is_zero()) return m;
    }
}

// Transport structure constants through a change of basis: the new basis
// vectors are the columns of P, so new constants come from multiplying the
// images and rewriting in the new basis.
inline PermAlgebra<Fp> change_basis(const PermAlgebra<Fp>& A, const Matrix<Fp>& P) {
    auto Pinv = P.inverse();
    PermAlgebra<Fp> B(A.space);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<Fp> pi(n), pj(n);
            for (std::size_t t = 0; t < n; ++t) {
                pi[t] = P.at(t, i);
                pj[t] = P.at(t, j);
            }
            Vec<Fp> prod = Pinv->apply(A.multiply(pi, pj));
            for (std::size_t k = 0; k < n; ++k) B.at(i, j, k) = prod[k];
        }
    return B;
}

inline PermAlgebra<Fp> rand_perm_algebra(std::mt19937_64& rng, std::uint32_t p) {
    auto pool = perm_pool<Fp>();
    // attach the modulus so later arithmetic has it
    for (auto& A : pool)
        for (auto& c : A.c) c = c + Fp::make(p, 0);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return change_basis(pool[pick(rng)], rand_invertible(rng, 2, p));
}

// Symmetric 2x2 tensors over F_p solving the perm Yang-Baxter equation,
// found by brute force. Used as constructed-true instances.
template <class Check>
std::vector<Tensor2<Fp>> symmetric_solutions(const PermAlgebra<Fp>& A, std::uint32_t p, Check&& pybe_ok) {
    std::vector<Tensor2<Fp>> out;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c) {
                Tensor2<Fp> r(A.space, A.space);
                r.at(0, 0) = Fp::make(p, a);
                r.at(0, 1) = Fp::make(p, b);
                r.at(1, 0) = Fp::make(p, b);
                r.at(1, 1) = Fp::make(p, c);
                if (pybe_ok(A, r)) out.push_back(r);
            }
    return out;
}

// All 2x2 matrices over F_p whose map passes the Nijenhuis condition.
inline std::vector<Matrix<Fp>> nijenhuis_maps(const PermAlgebra<Fp>& A, std::uint32_t p) {
    std::vector<Matrix<Fp>> out;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c)
                for (long long d = 0; d < p; ++d) {
                    Matrix<Fp> m(2, 2);
                    m.at(0, 0) = Fp::make(p, a);
                    m.at(0, 1) = Fp::make(p, b);
                    m.at(1, 0) = Fp::make(p, c);
                    m.at(1, 1) = Fp::make(p, d);
                    if (check_nijenhuis(A, LinearMap<Fp>(A.space, A.space, m)).ok()) out.push_back(m);
                }
    return out;
}

}  // namespace permlab::testing
