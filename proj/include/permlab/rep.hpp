#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

// Representation (V, l, r) of a perm algebra: one action matrix per algebra
// basis vector; l(x), r(x) for general x are formed by linearity on demand.
// The right action is written v r(x) in formulas; act_r(v, x) applies it.
template <class K>
struct Representation {
    PermAlgebra<K> algebra;
    Space module;
    std::vector<Matrix<K>> left;
    std::vector<Matrix<K>> right;

    Representation() = default;
    Representation(PermAlgebra<K> A, Space V, std::vector<Matrix<K>> l, std::vector<Matrix<K>> r)
        : algebra(std::move(A)), module(std::move(V)), left(std::move(l)), right(std::move(r)) {
        if (left.size() != algebra.dim() || right.size() != algebra.dim())
            throw SpaceMismatch("representation needs one action matrix per algebra basis vector");
        for (const auto& m : left)
            if (m.rows() != module.dim() || m.cols() != module.dim())
                throw SpaceMismatch("left action matrix does not match the module");
        for (const auto& m : right)
            if (m.rows() != module.dim() || m.cols() != module.dim())
                throw SpaceMismatch("right action matrix does not match the module");
    }

    Matrix<K> left_of(const Vec<K>& x) const { return combine(left, x); }
    Matrix<K> right_of(const Vec<K>& x) const { return combine(right, x); }

    Vec<K> act_l(const Vec<K>& x, const Vec<K>& v) const { return left_of(x).apply(v); }
    Vec<K> act_r(const Vec<K>& v, const Vec<K>& x) const { return right_of(x).apply(v); }

    static Representation adjoint(const PermAlgebra<K>& A) {
        std::vector<Matrix<K>> l, r;
        for (std::size_t i = 0; i < A.dim(); ++i) {
            l.push_back(A.left_mult_basis(i));
            r.push_back(A.right_mult_basis(i));
        }
        return Representation(A, A.space, std::move(l), std::move(r));
    }

    static Representation trivial(const PermAlgebra<K>& A, const Space& V) {
        std::vector<Matrix<K>> l(A.dim(), Matrix<K>(V.dim(), V.dim()));
        return Representation(A, V, l, l);
    }

  private:
    Matrix<K> combine(const std::vector<Matrix<K>>& ms, const Vec<K>& x) const {
        if (x.size() != algebra.dim()) throw SpaceMismatch("action argument dimension mismatch");
        Matrix<K> m(module.dim(), module.dim());
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (!kzero(x[i])) m = m + x[i] * ms[i];
        return m;
    }
};

// Representation of a Nijenhuis perm algebra: (V, l, r) plus alpha on V and
// the algebra operator N.
template <class K>
struct NijRepresentation {
    Representation<K> base;
    LinearMap<K> alpha;
    LinearMap<K> N;
};

namespace names {

inline std::string tup2(const Space& a, std::size_t i, const Space& b, std::size_t j) {
    return "x=" + a.basis[i] + ",v=" + b.basis[j];
}

}  // namespace names

// v r(xy) = (v r(x)) r(y) = (v r(y)) r(x), pairwise.
template <class K>
Report check_rep_r(const Representation<K>& rep, const std::string& name = "REP_R") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<K> rxy = rep.right_of(rep.algebra.basis_product(i, j));
            Matrix<K> a = rep.right[j] * rep.right[i];  // (v r(x)) r(y)
            Matrix<K> b = rep.right[i] * rep.right[j];  // (v r(y)) r(x)
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t t = 0; t < m; ++t) {
                    std::string w = "x=" + rep.algebra.space.basis[i] + ",y=" + rep.algebra.space.basis[j] +
                                    ",v=" + rep.module.basis[v] + " @" + rep.module.basis[t];
                    acc.add(w + " eq(1,2)", rxy.at(t, v) - a.at(t, v));
                    acc.add(w + " eq(1,3)", rxy.at(t, v) - b.at(t, v));
                    acc.add(w + " eq(2,3)", a.at(t, v) - b.at(t, v));
                }
        }
    return acc.finish();
}

// l(xy)v = l(x)(l(y)v) = l(x)(v r(y)) = (l(x)v) r(y), pairwise.
template <class K>
Report check_rep_l(const Representation<K>& rep, const std::string& name = "REP_L") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<K> lxy = rep.left_of(rep.algebra.basis_product(i, j));
            Matrix<K> a = rep.left[i] * rep.left[j];
            Matrix<K> b = rep.left[i] * rep.right[j];
            Matrix<K> c = rep.right[j] * rep.left[i];
            std::array<const Matrix<K>*, 4> e{&lxy, &a, &b, &c};
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t t = 0; t < m; ++t) {
                    std::string w = "x=" + rep.algebra.space.basis[i] + ",y=" + rep.algebra.space.basis[j] +
                                    ",v=" + rep.module.basis[v] + " @" + rep.module.basis[t];
                    for (std::size_t p = 0; p < 4; ++p)
                        for (std::size_t q = p + 1; q < 4; ++q)
                            acc.add(w + " eq(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")",
                                    e[p]->at(t, v) - e[q]->at(t, v));
                }
        }
    return acc.finish();
}

template <class K>
Report check_rep(const Representation<K>& rep, const std::string& name = "REP") {
    return Report::combine(name, {check_rep_l(rep), check_rep_r(rep)});
}

// l(N(x)) a(v) + a^2(l(x)v) = a(l(N(x))v) + a(l(x) a(v)).
template <class K>
Report check_nijrep_l(const Representation<K>& rep, const LinearMap<K>& N, const LinearMap<K>& alpha,
                      const std::string& name = "NIJREP_L") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    const Matrix<K>& a = alpha.m;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> lN = rep.left_of(N(basis_vec<K>(n, i)));
        Matrix<K> lhs = lN * a + a * a * rep.left[i];
        Matrix<K> rhs = a * lN + a * (rep.left[i] * a);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t t = 0; t < m; ++t)
                acc.add(names::tup2(rep.algebra.space, i, rep.module, v) + " @" + rep.module.basis[t],
                        lhs.at(t, v) - rhs.at(t, v));
    }
    return acc.finish();
}

// a(v) r(N(x)) + a^2(v r(x)) = a(v r(N(x))) + a(a(v) r(x)).
template <class K>
Report check_nijrep_r(const Representation<K>& rep, const LinearMap<K>& N, const LinearMap<K>& alpha,
                      const std::string& name = "NIJREP_R") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    const Matrix<K>& a = alpha.m;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> rN = rep.right_of(N(basis_vec<K>(n, i)));
        Matrix<K> lhs = rN * a + a * a * rep.right[i];
        Matrix<K> rhs = a * rN + a * (rep.right[i] * a);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t t = 0; t < m; ++t)
                acc.add(names::tup2(rep.algebra.space, i, rep.module, v) + " @" + rep.module.basis[t],
                        lhs.at(t, v) - rhs.at(t, v));
    }
    return acc.finish();
}

template <class K>
Report check_nijrep(const Representation<K>& rep, const LinearMap<K>& N, const LinearMap<K>& alpha,
                    const std::string& name = "NIJREP") {
    return Report::combine(name, {check_rep_l(rep), check_rep_r(rep), check_nijrep_l(rep, N, alpha),
                                  check_nijrep_r(rep, N, alpha)});
}

// beta(l(N(x))u) + l(x) beta^2(u) - l(N(x)) beta(u) - beta(l(x) beta(u)) = 0.
template <class K>
Report check_admrep_l(const Representation<K>& rep, const LinearMap<K>& N, const LinearMap<K>& beta,
                      const std::string& name = "ADMREP_L") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    const Matrix<K>& b = beta.m;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> lN = rep.left_of(N(basis_vec<K>(n, i)));
        Matrix<K> lhs = b * lN + rep.left[i] * b * b - lN * b - b * (rep.left[i] * b);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t t = 0; t < m; ++t)
                acc.add(names::tup2(rep.algebra.space, i, rep.module, v) + " @" + rep.module.basis[t],
                        lhs.at(t, v));
    }
    return acc.finish();
}

// beta(u r(N(x))) + beta^2(u) r(x) - beta(u) r(N(x)) - beta(beta(u) r(x)) = 0.
template <class K>
Report check_admrep_r(const Representation<K>& rep, const LinearMap<K>& N, const LinearMap<K>& beta,
                      const std::string& name = "ADMREP_R") {
    CheckAcc<K> acc(name);
    std::size_t n = rep.algebra.dim(), m = rep.module.dim();
    const Matrix<K>& b = beta.m;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> rN = rep.right_of(N(basis_vec<K>(n, i)));
        Matrix<K> lhs = b * rN + rep.right[i] * b * b - rN * b - b * (rep.right[i] * b);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t t = 0; t < m; ++t)
                acc.add(names::tup2(rep.algebra.space, i, rep.module, v) + " @" + rep.module.basis[t],
                        lhs.at(t, v));
    }
    return acc.finish();
}

// S(N(x)y) + x S^2(y) - N(x) S(y) - S(x S(y)) = 0 and its mirror, the
// admissibility of S to (g, N) on the adjoint representation.
template <class K>
Report check_adm1(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                  const std::string& name = "ADM_1") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            Vec<K> lhs = S(A.multiply(N(x), y));
            vec_add_scaled(lhs, A.multiply(x, S(S(y))), K(1));
            vec_add_scaled(lhs, A.multiply(N(x), S(y)), K(-1));
            vec_add_scaled(lhs, S(A.multiply(x, S(y))), K(-1));
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x=" + A.space.basis[i] + ",y=" + A.space.basis[j] + " @" + A.space.basis[t], lhs[t]);
        }
    return acc.finish();
}

template <class K>
Report check_adm2(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                  const std::string& name = "ADM_2") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            Vec<K> lhs = S(A.multiply(x, N(y)));
            vec_add_scaled(lhs, A.multiply(S(S(x)), y), K(1));
            vec_add_scaled(lhs, A.multiply(S(x), N(y)), K(-1));
            vec_add_scaled(lhs, S(A.multiply(S(x), y)), K(-1));
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x=" + A.space.basis[i] + ",y=" + A.space.basis[j] + " @" + A.space.basis[t], lhs[t]);
        }
    return acc.finish();
}

template <class K>
Report check_admissible(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S) {
    return Report::combine("ADMISSIBLE", {check_adm1(A, N, S), check_adm2(A, N, S)});
}

// Adjoint representation of a Nijenhuis perm algebra; requires PERM and NIJ.
template <class K>
NijRepresentation<K> adjoint_representation(const PermAlgebra<K>& A, const LinearMap<K>& N) {
    Report p = check_perm(A);
    if (!p.ok()) throw AxiomFailure("adjoint representation needs a perm algebra: " + p.summary());
    Report nj = check_nijenhuis(A, N);
    if (!nj.ok()) throw AxiomFailure("adjoint representation needs a Nijenhuis operator: " + nj.summary());
    return NijRepresentation<K>{Representation<K>::adjoint(A), N, N};
}

// Dual representation (V*, r* - l*, r*, beta*) of (g, N).
template <class K>
NijRepresentation<K> dual_representation(const Representation<K>& rep, const LinearMap<K>& N,
                                         const LinearMap<K>& beta) {
    std::vector<Matrix<K>> l, r;
    for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
        Matrix<K> lt = rep.left[i].transpose();
        Matrix<K> rt = rep.right[i].transpose();
        l.push_back(rt - lt);
        r.push_back(rt);
    }
    Space vd = dual_of(rep.module);
    Representation<K> dual(rep.algebra, vd, std::move(l), std::move(r));
    LinearMap<K> beta_star(vd, vd, beta.m.transpose());
    return NijRepresentation<K>{std::move(dual), std::move(beta_star), N};
}

// Deformed product x.y = N(x)x1y + x.N(y) - N(xy) as structure constants.
template <class K>
PermAlgebra<K> deformed_product(const PermAlgebra<K>& A, const LinearMap<K>& N) {
    PermAlgebra<K> B(A.space);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            Vec<K> out = A.multiply(N(x), y);
            vec_add_scaled(out, A.multiply(x, N(y)), K(1));
            vec_add_scaled(out, N(A.multiply(x, y)), K(-1));
            for (std::size_t k = 0; k < n; ++k) B.at(i, j, k) = out[k];
        }
    return B;
}

// N(x.y) = N(x) x1 N(y) for the deformed product, on all basis pairs.
template <class K>
Report check_nij_hom(const PermAlgebra<K>& A, const PermAlgebra<K>& deformed, const LinearMap<K>& N,
                     const std::string& name = "NIJ_HOM") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            Vec<K> lhs = N(deformed.multiply(x, y));
            Vec<K> rhs = A.multiply(N(x), N(y));
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x=" + A.space.basis[i] + ",y=" + A.space.basis[j] + " @" + A.space.basis[t],
                        lhs[t] - rhs[t]);
        }
    return acc.finish();
}

// Semidirect product algebra on g (+) V with (x+u)(y+v) = xy + l(x)v + u r(y),
// and the combined operator N + alpha.
template <class K>
struct Semidirect {
    PermAlgebra<K> algebra;
    LinearMap<K> op;
    std::size_t dim_g;
};

template <class K>
Semidirect<K> semidirect_product(const PermAlgebra<K>& A, const Representation<K>& rep,
                                 const LinearMap<K>& N, const LinearMap<K>& alpha) {
    require_same_space(rep.algebra.space, A.space, "semidirect product");
    std::size_t ng = A.dim(), nv = rep.module.dim();
    Space sum = direct_sum(A.space, rep.module);
    PermAlgebra<K> S(sum);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < ng; ++k) S.at(i, j, k) = A.at(i, j, k);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            for (std::size_t k = 0; k < nv; ++k) S.at(i, ng + j, ng + k) = rep.left[i].at(k, j);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < nv; ++k) S.at(ng + i, j, ng + k) = rep.right[j].at(k, i);
    Matrix<K> om(ng + nv, ng + nv);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j) om.at(i, j) = N.m.at(i, j);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) om.at(ng + i, ng + j) = alpha.m.at(i, j);
    return Semidirect<K>{std::move(S), LinearMap<K>(sum, sum, std::move(om)), ng};
}

// Matched pair of perm algebras g, h: actions lg, rg of g on h and lh, rh of
// h on g, with optional Nijenhuis operators.
template <class K>
struct MatchedPair {
    PermAlgebra<K> g;
    PermAlgebra<K> h;
    std::vector<Matrix<K>> lg, rg;  // per g-basis, acting on h
    std::vector<Matrix<K>> lh, rh;  // per h-basis, acting on g
    std::optional<LinearMap<K>> Ng, Nh;

    Representation<K> rep_of_g_on_h() const { return Representation<K>(g, h.space, lg, rg); }
    Representation<K> rep_of_h_on_g() const { return Representation<K>(h, g.space, lh, rh); }
};

// The four matched-pair identity chains, pairwise, over basis tuples.
template <class K>
Report check_matched_pair(const MatchedPair<K>& mp, const std::string& name = "MP") {
    CheckAcc<K> acc(name);
    std::size_t ng = mp.g.dim(), nh = mp.h.dim();
    auto bg = [&](std::size_t i) { return basis_vec<K>(ng, i); };
    auto bh = [&](std::size_t i) { return basis_vec<K>(nh, i); };
    auto lg = [&](const Vec<K>& a, const Vec<K>& y) {  // lg(a) y in h
        Vec<K> out(nh, K(0));
        for (std::size_t i = 0; i < ng; ++i)
            if (!kzero(a[i])) vec_add_scaled(out, mp.lg[i].apply(y), a[i]);
        return out;
    };
    auto rg = [&](const Vec<K>& y, const Vec<K>& a) {  // y rg(a) in h
        Vec<K> out(nh, K(0));
        for (std::size_t i = 0; i < ng; ++i)
            if (!kzero(a[i])) vec_add_scaled(out, mp.rg[i].apply(y), a[i]);
        return out;
    };
    auto lh = [&](const Vec<K>& y, const Vec<K>& a) {  // lh(y) a in g
        Vec<K> out(ng, K(0));
        for (std::size_t i = 0; i < nh; ++i)
            if (!kzero(y[i])) vec_add_scaled(out, mp.lh[i].apply(a), y[i]);
        return out;
    };
    auto rh = [&](const Vec<K>& a, const Vec<K>& y) {  // a rh(y) in g
        Vec<K> out(ng, K(0));
        for (std::size_t i = 0; i < nh; ++i)
            if (!kzero(y[i])) vec_add_scaled(out, mp.rh[i].apply(a), y[i]);
        return out;
    };

    auto emit = [&](const std::string& where, const Vec<K>& u, const Vec<K>& v, const Space& sp) {
        for (std::size_t t = 0; t < u.size(); ++t) acc.add(where + " @" + sp.basis[t], u[t] - v[t]);
    };

    // chain 1: lh(y)(x1 x2) = lh(y)(x2 x1) = (lh(y)x1)x2 + lh(y rg(x1))(x2)
    for (std::size_t yi = 0; yi < nh; ++yi)
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j) {
                Vec<K> y = bh(yi), x1 = bg(i), x2 = bg(j);
                Vec<K> a = lh(y, mp.g.multiply(x1, x2));
                Vec<K> b = lh(y, mp.g.multiply(x2, x1));
                Vec<K> c = mp.g.multiply(lh(y, x1), x2);
                vec_add_scaled(c, lh(rg(y, x1), x2), K(1));
                std::string w = "mp1 y=" + mp.h.space.basis[yi] + ",x1=" + mp.g.space.basis[i] +
                                ",x2=" + mp.g.space.basis[j];
                emit(w + " eq(1,2)", a, b, mp.g.space);
                emit(w + " eq(1,3)", a, c, mp.g.space);
            }

    // chain 2: (x1 x2) rh(y) = x1(x2 rh(y)) + x1 rh(lg(x2)y)
    //        = x1(lh(y)x2) + x1 rh(y rg(x2)) = (x1 rh(y))x2 + lh(lg(x1)y)(x2)
    for (std::size_t yi = 0; yi < nh; ++yi)
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j) {
                Vec<K> y = bh(yi), x1 = bg(i), x2 = bg(j);
                Vec<K> a = rh(mp.g.multiply(x1, x2), y);
                Vec<K> b = mp.g.multiply(x1, rh(x2, y));
                vec_add_scaled(b, rh(x1, lg(x2, y)), K(1));
                Vec<K> c = mp.g.multiply(x1, lh(y, x2));
                vec_add_scaled(c, rh(x1, rg(y, x2)), K(1));
                Vec<K> d = mp.g.multiply(rh(x1, y), x2);
                vec_add_scaled(d, lh(lg(x1, y), x2), K(1));
                std::string w = "mp2 y=" + mp.h.space.basis[yi] + ",x1=" + mp.g.space.basis[i] +
                                ",x2=" + mp.g.space.basis[j];
                emit(w + " eq(1,2)", a, b, mp.g.space);
                emit(w + " eq(1,3)", a, c, mp.g.space);
                emit(w + " eq(1,4)", a, d, mp.g.space);
            }

    // chain 3: lg(x)(y1 y2) = lg(x)(y2 y1) = (lg(x)y1)y2 + lg(x rh(y1))(y2)
    for (std::size_t xi = 0; xi < ng; ++xi)
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t j = 0; j < nh; ++j) {
                Vec<K> x = bg(xi), y1 = bh(i), y2 = bh(j);
                Vec<K> a = lg(x, mp.h.multiply(y1, y2));
                Vec<K> b = lg(x, mp.h.multiply(y2, y1));
                Vec<K> c = mp.h.multiply(lg(x, y1), y2);
                vec_add_scaled(c, lg(rh(x, y1), y2), K(1));
                std::string w = "mp3 x=" + mp.g.space.basis[xi] + ",y1=" + mp.h.space.basis[i] +
                                ",y2=" + mp.h.space.basis[j];
                emit(w + " eq(1,2)", a, b, mp.h.space);
                emit(w + " eq(1,3)", a, c, mp.h.space);
            }

    // chain 4: (y1 y2) rg(x) = y1(y2 rg(x)) + y1 rg(lh(y2)x)
    //        = y1(lg(x)y2) + y1 rg(x rh(y2)) = (y1 rg(x))y2 + lg(lh(y1)x)(y2)
    // The last member mirrors chain 2; the product order there is forced by
    // the equivalence with the sum algebra being perm.
    for (std::size_t xi = 0; xi < ng; ++xi)
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t j = 0; j < nh; ++j) {
                Vec<K> x = bg(xi), y1 = bh(i), y2 = bh(j);
                Vec<K> a = rg(mp.h.multiply(y1, y2), x);
                Vec<K> b = mp.h.multiply(y1, rg(y2, x));
                vec_add_scaled(b, rg(y1, lh(y2, x)), K(1));
                Vec<K> c = mp.h.multiply(y1, lg(x, y2));
                vec_add_scaled(c, rg(y1, rh(x, y2)), K(1));
                Vec<K> d = mp.h.multiply(rg(y1, x), y2);
                vec_add_scaled(d, lg(lh(y1, x), y2), K(1));
                std::string w = "mp4 x=" + mp.g.space.basis[xi] + ",y1=" + mp.h.space.basis[i] +
                                ",y2=" + mp.h.space.basis[j];
                emit(w + " eq(1,2)", a, b, mp.h.space);
                emit(w + " eq(1,3)", a, c, mp.h.space);
                emit(w + " eq(1,4)", a, d, mp.h.space);
            }
    return acc.finish();
}

// Nijenhuis matched pair: the plain matched pair plus both representation
// conditions (h, lg, rg, Nh) of (g, Ng) and (g, lh, rh, Ng) of (h, Nh).
template <class K>
Report check_nij_matched_pair(const MatchedPair<K>& mp, const std::string& name = "NIJ_MP") {
    if (!mp.Ng || !mp.Nh) throw AxiomFailure("Nijenhuis matched pair needs both operators");
    LinearMap<K> nh_on_h(mp.h.space, mp.h.space, mp.Nh->m);
    LinearMap<K> ng_on_g(mp.g.space, mp.g.space, mp.Ng->m);
    std::vector<Report> parts;
    parts.push_back(check_matched_pair(mp));
    Representation<K> r1 = mp.rep_of_g_on_h();
    parts.push_back(check_nijrep_l(r1, *mp.Ng, nh_on_h, "NIJREP_L(g on h)"));
    parts.push_back(check_nijrep_r(r1, *mp.Ng, nh_on_h, "NIJREP_R(g on h)"));
    Representation<K> r2 = mp.rep_of_h_on_g();
    parts.push_back(check_nijrep_l(r2, *mp.Nh, ng_on_g, "NIJREP_L(h on g)"));
    parts.push_back(check_nijrep_r(r2, *mp.Nh, ng_on_g, "NIJREP_R(h on g)"));
    return Report::combine(name, std::move(parts));
}

// Sum algebra of a matched pair: (a+x)(b+y) = ab + lh(x)b + a rh(y)
//                                          + xy + lg(a)y + x rg(b).
template <class K>
struct MatchedSum {
    PermAlgebra<K> algebra;
    std::optional<LinearMap<K>> op;
    std::size_t dim_g;
};

template <class K>
MatchedSum<K> matched_pair_sum(const MatchedPair<K>& mp) {
    std::size_t ng = mp.g.dim(), nh = mp.h.dim();
    Space sum = direct_sum(mp.g.space, mp.h.space);
    PermAlgebra<K> S(sum);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t k = 0; k < ng; ++k) S.at(i, j, k) = mp.g.at(i, j, k);
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t k = 0; k < nh; ++k) S.at(ng + i, ng + j, ng + k) = mp.h.at(i, j, k);
    // a * y = a rh(y) + lg(a) y
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Vec<K> in_g = mp.rh[j].apply(basis_vec<K>(ng, i));
            for (std::size_t k = 0; k < ng; ++k) S.at(i, ng + j, k) = in_g[k];
            Vec<K> in_h = mp.lg[i].apply(basis_vec<K>(nh, j));
            for (std::size_t k = 0; k < nh; ++k) S.at(i, ng + j, ng + k) = in_h[k];
        }
    // x * b = lh(x) b + x rg(b)
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < ng; ++j) {
            Vec<K> in_g = mp.lh[i].apply(basis_vec<K>(ng, j));
            for (std::size_t k = 0; k < ng; ++k) S.at(ng + i, j, k) = in_g[k];
            Vec<K> in_h = mp.rg[j].apply(basis_vec<K>(nh, i));
            for (std::size_t k = 0; k < nh; ++k) S.at(ng + i, j, ng + k) = in_h[k];
        }
    std::optional<LinearMap<K>> op;
    if (mp.Ng && mp.Nh) {
        Matrix<K> om(ng + nh, ng + nh);
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j) om.at(i, j) = mp.Ng->m.at(i, j);
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t j = 0; j < nh; ++j) om.at(ng + i, ng + j) = mp.Nh->m.at(i, j);
        op = LinearMap<K>(sum, sum, std::move(om));
    }
    return MatchedSum<K>{std::move(S), std::move(op), ng};
}

// Pencil product s(x.y) + t(x*y) as structure constants over the same space.
template <class K>
PermAlgebra<K> pencil(const PermAlgebra<K>& A, const PermAlgebra<K>& B, const K& s, const K& t) {
    require_same_space(A.space, B.space, "pencil of products");
    PermAlgebra<K> P(A.space);
    for (std::size_t i = 0; i < A.c.size(); ++i) P.c[i] = s * A.c[i] + t * B.c[i];
    return P;
}

template <class K>
Representation<K> pencil_rep(const Representation<K>& R1, const Representation<K>& R2,
                             const PermAlgebra<K>& combined, const K& s, const K& t) {
    require_same_space(R1.module, R2.module, "pencil of representations");
    std::vector<Matrix<K>> l, r;
    for (std::size_t i = 0; i < R1.algebra.dim(); ++i) {
        l.push_back(s * R1.left[i] + t * R2.left[i]);
        r.push_back(s * R1.right[i] + t * R2.right[i]);
    }
    return Representation<K>(combined, R1.module, std::move(l), std::move(r));
}

// Linear-combination compatibility for two products, the condition under
// which every pencil s,t is perm:
// (x*y).z + (x.y)*z = x.(y*z) + x*(y.z) = x.(z*y) + x*(z.y).
template <class K>
Report check_lincomb_alg(const PermAlgebra<K>& A, const PermAlgebra<K>& B,
                         const std::string& name = "LIN_COMB_ALG") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j), z = basis_vec<K>(n, k);
                Vec<K> a = A.multiply(B.multiply(x, y), z);
                vec_add_scaled(a, B.multiply(A.multiply(x, y), z), K(1));
                Vec<K> b = A.multiply(x, B.multiply(y, z));
                vec_add_scaled(b, B.multiply(x, A.multiply(y, z)), K(1));
                Vec<K> c = A.multiply(x, B.multiply(z, y));
                vec_add_scaled(c, B.multiply(x, A.multiply(z, y)), K(1));
                std::string w = "x=" + A.space.basis[i] + ",y=" + A.space.basis[j] + ",z=" + A.space.basis[k];
                for (std::size_t t = 0; t < n; ++t) {
                    acc.add(w + " eq(1,2) @" + A.space.basis[t], a[t] - b[t]);
                    acc.add(w + " eq(1,3) @" + A.space.basis[t], a[t] - c[t]);
                }
            }
    return acc.finish();
}

// The representation analogue over a pair of action families.
template <class K>
Report check_lincomb_rep(const Representation<K>& R1, const Representation<K>& R2,
                         const PermAlgebra<K>& A, const PermAlgebra<K>& B,
                         const std::string& name = "LIN_COMB_REP") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim(), m = R1.module.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            // left chain
            Matrix<K> a = R1.left_of(B.multiply(x, y)) + R2.left_of(A.multiply(x, y));
            Matrix<K> b = R1.left[i] * R2.left[j] + R2.left[i] * R1.left[j];
            Matrix<K> c = R1.left[i] * R2.right[j] + R2.left[i] * R1.right[j];
            Matrix<K> d = R1.right[j] * R2.left[i] + R2.right[j] * R1.left[i];
            // right chain
            Matrix<K> e = R1.right_of(B.multiply(x, y)) + R2.right_of(A.multiply(x, y));
            Matrix<K> f = R1.right[i] * R2.right[j] + R2.right[i] * R1.right[j];
            Matrix<K> g = R1.right[j] * R2.right[i] + R2.right[j] * R1.right[i];
            std::string w = "x=" + A.space.basis[i] + ",y=" + A.space.basis[j];
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t t = 0; t < m; ++t) {
                    std::string at = w + ",u=" + R1.module.basis[v] + " @" + R1.module.basis[t];
                    acc.add(at + " l(1,2)", a.at(t, v) - b.at(t, v));
                    acc.add(at + " l(1,3)", a.at(t, v) - c.at(t, v));
                    acc.add(at + " l(1,4)", a.at(t, v) - d.at(t, v));
                    acc.add(at + " r(1,2)", e.at(t, v) - f.at(t, v));
                    acc.add(at + " r(1,3)", e.at(t, v) - g.at(t, v));
                }
        }
    return acc.finish();
}

// Homomorphism of representations along phi: f(l1(x)v) = l2(phi(x))f(v) and
// f(v r1(x)) = f(v) r2(phi(x)), plus phi being an algebra homomorphism.
template <class K>
Report check_hom_rep(const Representation<K>& R1, const Representation<K>& R2, const LinearMap<K>& phi,
                     const LinearMap<K>& f, const std::string& name = "HOM_REP") {
    CheckAcc<K> acc(name);
    std::size_t n = R1.algebra.dim(), m = R1.module.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> phix = phi(basis_vec<K>(n, i));
        Matrix<K> dl = f.m * R1.left[i] - R2.left_of(phix) * f.m;
        Matrix<K> dr = f.m * R1.right[i] - R2.right_of(phix) * f.m;
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t t = 0; t < m; ++t) {
                std::string w = names::tup2(R1.algebra.space, i, R1.module, v) + " @" + R1.module.basis[t];
                acc.add(w + " left", dl.at(t, v));
                acc.add(w + " right", dr.at(t, v));
            }
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> lhs = phi(R1.algebra.multiply(basis_vec<K>(n, i), basis_vec<K>(n, j)));
            Vec<K> rhs = R2.algebra.multiply(phix, phi(basis_vec<K>(n, j)));
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x=" + R1.algebra.space.basis[i] + ",y=" + R1.algebra.space.basis[j] + " alghom @" +
                            R2.algebra.space.basis[t],
                        lhs[t] - rhs[t]);
        }
    }
    return acc.finish();
}

}  // namespace permlab
