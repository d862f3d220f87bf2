#pragma once

#include <string>
#include <vector>

#include "permlab/rep.hpp"

namespace permlab {

// Contraction of two placements in triple tensor space. Each placement
// occupies two slots; the factors must share exactly one slot, where the
// first factor's component multiplies the second's from the left. The free
// slots keep their components.
template <class K>
Tensor3<K> triple_contract(const PermAlgebra<K>& A, const Placement<K>& p1, const Placement<K>& p2) {
    require_same_space(p1.t->s1, A.space, "placement product");
    require_same_space(p2.t->s1, A.space, "placement product");
    int shared = 0, count = 0;
    for (int s : {p1.slot.first, p1.slot.second})
        if (s == p2.slot.first || s == p2.slot.second) {
            shared = s;
            ++count;
        }
    if (count != 1) throw BadLegIndex("placement product needs exactly one shared slot");
    std::size_t n = A.dim();
    Tensor3<K> out(A.space, A.space, A.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& c1 = p1.t->at(i, j);
            if (kzero(c1)) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const K& c2 = p2.t->at(k, l);
                    if (kzero(c2)) continue;
                    K w = c1 * c2;
                    // component of p1 at slot s: first comp at slot.first
                    std::size_t a1 = p1.slot.first == shared ? i : j;
                    std::size_t free1 = p1.slot.first == shared ? p1.slot.second : p1.slot.first;
                    std::size_t v1 = p1.slot.first == shared ? j : i;
                    std::size_t a2 = p2.slot.first == shared ? k : l;
                    std::size_t free2 = p2.slot.first == shared ? p2.slot.second : p2.slot.first;
                    std::size_t v2 = p2.slot.first == shared ? l : k;
                    for (std::size_t t = 0; t < n; ++t) {
                        const K& pc = A.at(a1, a2, t);
                        if (kzero(pc)) continue;
                        std::size_t idx[3];
                        idx[shared - 1] = t;
                        idx[free1 - 1] = v1;
                        idx[free2 - 1] = v2;
                        out.at(idx[0], idx[1], idx[2]) += w * pc;
                    }
                }
        }
    return out;
}

template <class K>
Tensor3<K> triple_product(const PermAlgebra<K>& A, const Tensor2<K>& r, Slot s1, const Tensor2<K>& s,
                          Slot s2) {
    Placement<K> p1 = place_in_triple(r, s1);
    Placement<K> p2 = place_in_triple(s, s2);
    return triple_contract(A, p1, p2);
}

// P(r) = r13 r12 - r13 r23 + r23 r12 - r12 r23.
template <class K>
Tensor3<K> ybe_p(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    return triple_product(A, r, kSlot13, r, kSlot12) - triple_product(A, r, kSlot13, r, kSlot23) +
           triple_product(A, r, kSlot23, r, kSlot12) - triple_product(A, r, kSlot12, r, kSlot23);
}

// Q(r) = r13 r12 - r13 r32 + r23 r12 - r12 r23.
template <class K>
Tensor3<K> ybe_q(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    return triple_product(A, r, kSlot13, r, kSlot12) - triple_product(A, r, kSlot13, r, kSlot32) +
           triple_product(A, r, kSlot23, r, kSlot12) - triple_product(A, r, kSlot12, r, kSlot23);
}

// J(r) = r12 r23 + r13 r23 - r12 r13 - r23 r13.
template <class K>
Tensor3<K> ybe_j(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    return triple_product(A, r, kSlot12, r, kSlot23) + triple_product(A, r, kSlot13, r, kSlot23) -
           triple_product(A, r, kSlot12, r, kSlot13) - triple_product(A, r, kSlot23, r, kSlot13);
}

// T(r) = r12 r23 + r13 r32 - r13 r12 - r32 r12.
template <class K>
Tensor3<K> ybe_t(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    return triple_product(A, r, kSlot12, r, kSlot23) + triple_product(A, r, kSlot13, r, kSlot32) -
           triple_product(A, r, kSlot13, r, kSlot12) - triple_product(A, r, kSlot32, r, kSlot12);
}

// M(r; x) = (id (x) L(x) (x) id)(r32 r12 - r23 r12)
//         + (id (x) R(x) (x) id)(r12 r23 - r12 r32).
template <class K>
Tensor3<K> ybe_m(const PermAlgebra<K>& A, const Tensor2<K>& r, const Vec<K>& x) {
    LinearMap<K> L(A.space, A.space, A.left_mult(x));
    LinearMap<K> R(A.space, A.space, A.right_mult(x));
    Tensor3<K> first = triple_product(A, r, kSlot32, r, kSlot12) - triple_product(A, r, kSlot23, r, kSlot12);
    Tensor3<K> second = triple_product(A, r, kSlot12, r, kSlot23) - triple_product(A, r, kSlot12, r, kSlot32);
    return leg_apply(L, first, 2) + leg_apply(R, second, 2);
}

template <class K>
struct YbeTensors {
    Tensor3<K> p, q, j, t;
    Tensor3<K> m_of_x;
};

template <class K>
YbeTensors<K> ybe_tensors(const PermAlgebra<K>& A, const Tensor2<K>& r, const Vec<K>& x) {
    return YbeTensors<K>{ybe_p(A, r), ybe_q(A, r), ybe_j(A, r), ybe_t(A, r), ybe_m(A, r, x)};
}

namespace detail {

template <class K>
void acc_tensor3(CheckAcc<K>& acc, const Space& sp, const Tensor3<K>& t, const std::string& prefix) {
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k)
                acc.add(prefix + " @(" + sp.basis[i] + "," + sp.basis[j] + "," + sp.basis[k] + ")",
                        t.at(i, j, k));
}

template <class K>
void acc_tensor2(CheckAcc<K>& acc, const Tensor2<K>& t, const std::string& prefix) {
    for (std::size_t i = 0; i < t.d.rows(); ++i)
        for (std::size_t j = 0; j < t.d.cols(); ++j)
            acc.add(prefix + " @(" + t.s1.basis[i] + "," + t.s2.basis[j] + ")", t.at(i, j));
}

}  // namespace detail

// Classical perm Yang-Baxter equation P(r) = 0.
template <class K>
Report check_pybe(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "PYBE") {
    CheckAcc<K> acc(name);
    detail::acc_tensor3(acc, A.space, ybe_p(A, r), "P(r)");
    return acc.finish();
}

// Coboundary comultiplication D_r(x) = x r1 (x) r2 + r1 (x) x r2 - r1 (x) r2 x.
template <class K>
PermCoalgebra<K> coboundary_delta(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    require_same_space(r.s1, A.space, "coboundary comultiplication");
    require_same_space(r.s2, A.space, "coboundary comultiplication");
    std::size_t n = A.dim();
    PermCoalgebra<K> C(A.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const K& w = r.at(a, b);
                if (kzero(w)) continue;
                for (std::size_t t = 0; t < n; ++t) {
                    C.at(i, t, b) += w * A.at(i, a, t);   // x r1 (x) r2
                    C.at(i, a, t) += w * A.at(i, b, t);   // r1 (x) x r2
                    C.at(i, a, t) -= w * A.at(b, i, t);   // r1 (x) r2 x
                }
            }
    return C;
}

// (S (x) id - id (x) N)(r) = 0.
template <class K>
Report check_rs_compat(const Tensor2<K>& r, const LinearMap<K>& N, const LinearMap<K>& S,
                       const std::string& name = "RS_COMPAT") {
    CheckAcc<K> acc(name);
    detail::acc_tensor2(acc, leg_apply(S, r, 1) - leg_apply(N, r, 2), "(S(x)id - id(x)N)(r)");
    return acc.finish();
}

// S-admissible perm Yang-Baxter equation: P(r) = 0 together with
// (S (x) id - id (x) N)(r) = 0; r must be symmetric and A perm.
template <class K>
Report check_s_admissible_ybe(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                              const Tensor2<K>& r) {
    if (!r.symmetric()) throw NotSymmetric("S-admissible perm YBE needs a symmetric r");
    Report p = check_perm(A);
    if (!p.ok()) throw AxiomFailure("S-admissible perm YBE requires a perm algebra: " + p.summary());
    return Report::combine("S_ADM_PYBE", {check_pybe(A, r), check_rs_compat(r, N, S)});
}

// r# : g* -> g, u* -> <u*, r1> r2.
template <class K>
LinearMap<K> r_sharp(const Tensor2<K>& r) {
    require_same_space(r.s1, r.s2, "r_sharp");
    std::size_t n = r.s1.dim();
    Matrix<K> m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = r.at(j, k);
    return LinearMap<K>(dual_of(r.s1), r.s1, std::move(m));
}

// r#(x*) r#(y*) = r#(y* R*(r#(x*)) - L*(r#(x*)) y* + x* R*(r#(y*))).
template <class K>
Report check_thx_op(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "THX_OP") {
    CheckAcc<K> acc(name);
    LinearMap<K> rs = r_sharp(r);
    std::size_t n = A.dim();
    Space dual = dual_of(A.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> xs = basis_vec<K>(n, i), ys = basis_vec<K>(n, j);
            Vec<K> rx = rs(xs), ry = rs(ys);
            Vec<K> lhs = A.multiply(rx, ry);
            Vec<K> arg = A.right_mult(rx).transpose().apply(ys);           // y* R*(r# x*)
            vec_add_scaled(arg, A.left_mult(rx).transpose().apply(ys), K(-1));  // - L*(r# x*) y*
            vec_add_scaled(arg, A.right_mult(ry).transpose().apply(xs), K(1));  // + x* R*(r# y*)
            Vec<K> rhs = rs(arg);
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x*=" + dual.basis[i] + ",y*=" + dual.basis[j] + " @" + A.space.basis[t],
                        lhs[t] - rhs[t]);
        }
    return acc.finish();
}

// N o r# = r# o S*.
template <class K>
Report check_thx_twist(const Tensor2<K>& r, const LinearMap<K>& N, const LinearMap<K>& S,
                       const std::string& name = "THX_TWIST") {
    CheckAcc<K> acc(name);
    LinearMap<K> rs = r_sharp(r);
    Matrix<K> diff = N.m * rs.m - rs.m * S.m.transpose();
    std::size_t n = rs.m.rows();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            acc.add("u*=" + rs.domain.basis[j] + " @" + rs.codomain.basis[i], diff.at(i, j));
    return acc.finish();
}

// Weak O-operator condition T(u)T(v) = T(l(T(u))v + u r(T(v))).
template <class K>
Report check_oop(const LinearMap<K>& T, const Representation<K>& rep, const std::string& name = "OOP") {
    require_same_space(T.domain, rep.module, "O-operator domain");
    require_same_space(T.codomain, rep.algebra.space, "O-operator codomain");
    CheckAcc<K> acc(name);
    std::size_t m = rep.module.dim(), n = rep.algebra.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec<K> u = basis_vec<K>(m, i), v = basis_vec<K>(m, j);
            Vec<K> tu = T(u), tv = T(v);
            Vec<K> lhs = rep.algebra.multiply(tu, tv);
            Vec<K> arg = rep.act_l(tu, v);
            vec_add_scaled(arg, rep.act_r(u, tv), K(1));
            Vec<K> rhs = T(arg);
            for (std::size_t t = 0; t < n; ++t)
                acc.add("u=" + rep.module.basis[i] + ",v=" + rep.module.basis[j] + " @" +
                            rep.algebra.space.basis[t],
                        lhs[t] - rhs[t]);
        }
    return acc.finish();
}

// N o T = T o alpha.
template <class K>
Report check_oop_twist(const LinearMap<K>& T, const LinearMap<K>& N, const LinearMap<K>& alpha,
                       const std::string& name = "OOP_TW") {
    CheckAcc<K> acc(name);
    Matrix<K> diff = N.m * T.m - T.m * alpha.m;
    for (std::size_t j = 0; j < T.m.cols(); ++j)
        for (std::size_t i = 0; i < T.m.rows(); ++i)
            acc.add("u=" + T.domain.basis[j] + " @" + T.codomain.basis[i], diff.at(i, j));
    return acc.finish();
}

// Weak O-operator verdict, upgraded to a full O-operator verdict when the
// quadruple (V, l, r, alpha) is a representation of (g, N).
template <class K>
struct OOperatorReport {
    Report weak;
    Report representation;
    bool is_weak() const { return weak.ok(); }
    bool is_full() const { return weak.ok() && representation.ok(); }
};

template <class K>
OOperatorReport<K> check_ooperator(const LinearMap<K>& T, const Representation<K>& rep,
                                   const LinearMap<K>& alpha, const LinearMap<K>& N) {
    OOperatorReport<K> out;
    out.weak = Report::combine("WEAK_OOP", {check_oop(T, rep), check_oop_twist(T, N, alpha)});
    out.representation = Report::combine(
        "NIJREP", {check_nijrep_l(rep, N, alpha), check_nijrep_r(rep, N, alpha)});
    return out;
}

// Lift T: V -> g to the symmetric tensor T + tau(T) over g (+) V*.
template <class K>
struct LiftedOOperator {
    Semidirect<K> semidirect;   // g x| V* with dual actions, operator N + beta*
    Tensor2<K> r;               // T + tau(T)
    LinearMap<K> combined_s;    // S + alpha* on the sum
};

template <class K>
LiftedOOperator<K> lift_ooperator(const LinearMap<K>& T, const Representation<K>& rep,
                                  const LinearMap<K>& N, const LinearMap<K>& S,
                                  const LinearMap<K>& alpha, const LinearMap<K>& beta) {
    Report rp = check_rep(rep);
    if (!rp.ok()) throw AxiomFailure("lift needs a verified representation: " + rp.summary());
    auto dual = dual_representation(rep, N, beta);
    Semidirect<K> sd = semidirect_product(rep.algebra, dual.base, N, dual.alpha);
    std::size_t ng = rep.algebra.dim(), nv = rep.module.dim();
    Tensor2<K> r(sd.algebra.space, sd.algebra.space);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            r.at(i, ng + j) = T.m.at(i, j);
            r.at(ng + j, i) = T.m.at(i, j);
        }
    // S + alpha* on g (+) V*
    Matrix<K> sm(ng + nv, ng + nv);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j) sm.at(i, j) = S.m.at(i, j);
    Matrix<K> at = alpha.m.transpose();
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) sm.at(ng + i, ng + j) = at.at(i, j);
    LinearMap<K> comb(sd.algebra.space, sd.algebra.space, std::move(sm));
    return LiftedOOperator<K>{std::move(sd), std::move(r), std::move(comb)};
}

// The three coboundary conditions equivalent to the Nijenhuis-coalgebra and
// dual-admissibility clauses for D_r. The shared x ranges over basis vectors.
template <class K>
Report check_nh1(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                 const Tensor2<K>& r, const std::string& name = "NH_1") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> a1 = leg_apply(S, r, 1) - leg_apply(N, r, 2);  // (S(x)id - id(x)N)(r)
    Tensor2<K> a2 = leg_apply(N, r, 1) - leg_apply(S, r, 2);  // (N(x)id - id(x)S)(r)
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Vec<K> sx = S(x);
        LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
        LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
        LinearMap<K> LSx(A.space, A.space, A.left_mult(sx));
        LinearMap<K> RSx(A.space, A.space, A.right_mult(sx));
        LinearMap<K> SLx(A.space, A.space, S.m * Lx.m);
        LinearMap<K> SRx(A.space, A.space, S.m * Rx.m);
        Tensor2<K> out = leg_apply(SLx, a1, 2) - leg_apply(SRx, a1, 2) - leg_apply(LSx, a1, 2) +
                         leg_apply(RSx, a1, 2) + leg_apply(LSx, a2, 1) - leg_apply(SLx, a2, 1);
        detail::acc_tensor2(acc, out, "x=" + A.space.basis[i]);
    }
    return acc.finish();
}

template <class K>
Report check_nh2(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                 const Tensor2<K>& r, const std::string& name = "NH_2") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> b2 = leg_apply(S, r, 2) - leg_apply(N, r, 1);  // (id(x)S - N(x)id)(r)
    LinearMap<K> S2(S.domain, S.codomain, S.m * S.m);
    LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
    Tensor2<K> c2 = leg_apply(S2, r, 2) - leg_apply(N2, r, 1);  // (id(x)S^2 - N^2(x)id)(r)
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Vec<K> nx = N(x);
        LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
        LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
        LinearMap<K> LNx(A.space, A.space, A.left_mult(nx));
        LinearMap<K> RNx(A.space, A.space, A.right_mult(nx));
        LinearMap<K> SLx(A.space, A.space, S.m * Lx.m);
        LinearMap<K> SRx(A.space, A.space, S.m * Rx.m);
        LinearMap<K> NLx(A.space, A.space, N.m * Lx.m);
        Tensor2<K> out = leg_apply(LNx, b2, 2) + leg_apply(LNx, b2, 1) + leg_apply(SLx, b2, 2) -
                         leg_apply(SRx, b2, 2) - leg_apply(RNx, b2, 2) - leg_apply(NLx, b2, 1) +
                         leg_apply(Rx, c2, 2) - leg_apply(Lx, c2, 2);
        detail::acc_tensor2(acc, out, "x=" + A.space.basis[i]);
    }
    return acc.finish();
}

template <class K>
Report check_nh3(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                 const Tensor2<K>& r, const std::string& name = "NH_3") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> a1 = leg_apply(S, r, 1) - leg_apply(N, r, 2);  // (S(x)id - id(x)N)(r)
    LinearMap<K> S2(S.domain, S.codomain, S.m * S.m);
    LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
    Tensor2<K> d2 = leg_apply(N2, r, 2) - leg_apply(S2, r, 1);  // (id(x)N^2 - S^2(x)id)(r)
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Vec<K> nx = N(x);
        LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
        LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
        LinearMap<K> LNx(A.space, A.space, A.left_mult(nx));
        LinearMap<K> RNx(A.space, A.space, A.right_mult(nx));
        LinearMap<K> SLx(A.space, A.space, S.m * Lx.m);
        LinearMap<K> NLx(A.space, A.space, N.m * Lx.m);
        LinearMap<K> NRx(A.space, A.space, N.m * Rx.m);
        Tensor2<K> out = leg_apply(LNx, a1, 2) + leg_apply(LNx, a1, 1) + leg_apply(SLx, a1, 1) -
                         leg_apply(RNx, a1, 2) - leg_apply(NLx, a1, 2) + leg_apply(NRx, a1, 2) +
                         leg_apply(Lx, d2, 1);
        detail::acc_tensor2(acc, out, "x=" + A.space.basis[i]);
    }
    return acc.finish();
}

// All three conditions, behind the S-admissibility prerequisite.
template <class K>
Report check_nh_conditions(const PermAlgebra<K>& A, const LinearMap<K>& N, const LinearMap<K>& S,
                           const Tensor2<K>& r) {
    Report nij = check_nijenhuis(A, N);
    if (!nij.ok()) throw AxiomFailure("coboundary conditions need a Nijenhuis operator: " + nij.summary());
    Report adm = check_admissible(A, N, S);
    if (!adm.ok()) throw AxiomFailure("coboundary conditions need an admissible S: " + adm.summary());
    return Report::combine("NH_CONDITIONS",
                           {check_nh1(A, N, S, r), check_nh2(A, N, S, r), check_nh3(A, N, S, r)});
}

// The four (r - tau r) compatibility conditions making D_r a perm bialgebra
// comultiplication, plus the two placement conditions with the shared x.
template <class K>
Report check_cob1(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_1") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> u = r - flip(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> xy = A.basis_product(i, j), yx = A.basis_product(j, i);
            LinearMap<K> Lxy(A.space, A.space, A.left_mult(xy));
            LinearMap<K> Lyx(A.space, A.space, A.left_mult(yx));
            Tensor2<K> lhs = leg_apply(Lxy, u, 1) + leg_apply(Lxy, u, 2);
            Tensor2<K> rhs = leg_apply(Lyx, u, 1) + leg_apply(Lyx, u, 2);
            detail::acc_tensor2(acc, lhs - rhs, "x=" + A.space.basis[i] + ",y=" + A.space.basis[j]);
        }
    return acc.finish();
}

// The condition pairing the antisymmetrized chain with the dual actions.
// Derived directly from the matched-pair translation; the chain member is
// (R(y)(x)L(x) + L(y)(x)R(x) + id(x)L(yx))(u) = (R(y)(x)R(x) + id(x)L(xy))(u).
template <class K>
Report check_cob2(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_2") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> u = r - flip(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LinearMap<K> Lx(A.space, A.space, A.left_mult_basis(i));
            LinearMap<K> Rx(A.space, A.space, A.right_mult_basis(i));
            LinearMap<K> Ly(A.space, A.space, A.left_mult_basis(j));
            LinearMap<K> Ry(A.space, A.space, A.right_mult_basis(j));
            LinearMap<K> Lyx(A.space, A.space, A.left_mult(A.basis_product(j, i)));
            LinearMap<K> Lxy(A.space, A.space, A.left_mult(A.basis_product(i, j)));
            Tensor2<K> lhs = leg_apply(Lx, leg_apply(Ry, u, 1), 2) + leg_apply(Rx, leg_apply(Ly, u, 1), 2) +
                             leg_apply(Lyx, u, 2);
            Tensor2<K> rhs = leg_apply(Rx, leg_apply(Ry, u, 1), 2) + leg_apply(Lxy, u, 2);
            detail::acc_tensor2(acc, lhs - rhs, "x=" + A.space.basis[i] + ",y=" + A.space.basis[j]);
        }
    return acc.finish();
}

template <class K>
Report check_cob3(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_3") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> u = r - flip(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LinearMap<K> Lx(A.space, A.space, A.left_mult_basis(i));
            LinearMap<K> Ly(A.space, A.space, A.left_mult_basis(j));
            detail::acc_tensor2(acc, leg_apply(Ly, leg_apply(Lx, u, 1), 2),
                                "x=" + A.space.basis[i] + ",y=" + A.space.basis[j]);
        }
    return acc.finish();
}

template <class K>
Report check_cob4(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_4") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor2<K> u = r - flip(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LinearMap<K> Lx(A.space, A.space, A.left_mult_basis(i));
            LinearMap<K> Rx(A.space, A.space, A.right_mult_basis(i));
            LinearMap<K> Ly(A.space, A.space, A.left_mult_basis(j));
            LinearMap<K> Ry(A.space, A.space, A.right_mult_basis(j));
            LinearMap<K> Lyx(A.space, A.space, A.left_mult(A.basis_product(j, i)));
            LinearMap<K> Lxy(A.space, A.space, A.left_mult(A.basis_product(i, j)));
            Tensor2<K> lhs = leg_apply(Lx, leg_apply(Ry, u, 1), 2) + leg_apply(Rx, leg_apply(Ly, u, 1), 2) +
                             leg_apply(Lyx, u, 2);
            Tensor2<K> rhs = leg_apply(Rx, leg_apply(Ry, u, 1), 2) + leg_apply(Lx, leg_apply(Ly, u, 1), 2) +
                             leg_apply(Lxy, u, 2);
            detail::acc_tensor2(acc, lhs - rhs, "x=" + A.space.basis[i] + ",y=" + A.space.basis[j]);
        }
    return acc.finish();
}

template <class K>
Report check_cob5(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_5") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    Tensor3<K> p = ybe_p(A, r), j = ybe_j(A, r);
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
        LinearMap<K> LmR(A.space, A.space, A.left_mult(x) - A.right_mult(x));
        Tensor3<K> lhs = leg_apply(LmR, p, 3);
        Tensor3<K> rhs = leg_apply(Lx, j, 1);
        detail::acc_tensor3(acc, A.space, lhs - rhs, "x=" + A.space.basis[i]);
    }
    return acc.finish();
}

// Placement form of the flipped-leg half of coassociativity for the
// coboundary comultiplication, expanded term by term with associativity and
// right-symmetry only:
//   (L(x)(x)id(x)id)(r12r23 + r13r23 - r23r13 - r13r32 - r12r32 + r32r12)
// + (id(x)(L(x)-R(x))(x)id)(r12r23 - r12r32)
// + (id(x)id(x)(L(x)-R(x)))(r13r23 - r13r32) = 0.
template <class K>
Report check_cob6(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "COB_6") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    auto tp = [&](Slot s1, Slot s2) { return triple_product(A, r, s1, r, s2); };
    Tensor3<K> head = tp(kSlot12, kSlot23) + tp(kSlot13, kSlot23) - tp(kSlot23, kSlot13) -
                      tp(kSlot13, kSlot32) - tp(kSlot12, kSlot32) + tp(kSlot32, kSlot12);
    Tensor3<K> w2 = tp(kSlot12, kSlot23) - tp(kSlot12, kSlot32);
    Tensor3<K> w3 = tp(kSlot13, kSlot23) - tp(kSlot13, kSlot32);
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
        LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
        Tensor3<K> out = leg_apply(Lx, head, 1) + leg_apply(Lx, w2, 2) - leg_apply(Rx, w2, 2) +
                         leg_apply(Lx, w3, 3) - leg_apply(Rx, w3, 3);
        detail::acc_tensor3(acc, A.space, out, "x=" + A.space.basis[i]);
    }
    return acc.finish();
}

template <class K>
Report check_coboundary_conditions(const PermAlgebra<K>& A, const Tensor2<K>& r) {
    return Report::combine("COB_CONDITIONS", {check_cob1(A, r), check_cob2(A, r), check_cob3(A, r),
                                              check_cob4(A, r), check_cob5(A, r), check_cob6(A, r)});
}

// Quasitriangular fusion identities for symmetric r.
// (D_r (x) id)(r) = r1 (x) rr1 (x) r2 rr2.
template <class K>
Report check_qt1(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "QT1") {
    CheckAcc<K> acc(name);
    PermCoalgebra<K> C = coboundary_delta(A, r);
    std::size_t n = A.dim();
    Tensor3<K> lhs(A.space, A.space, A.space), rhs(A.space, A.space, A.space);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k) {
            const K& w = r.at(a, k);
            if (kzero(w)) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) lhs.at(p, q, k) += w * C.at(a, p, q);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t b = 0; b < n; ++b) {
                    K w = r.at(i, a) * r.at(j, b);
                    if (kzero(w)) continue;
                    for (std::size_t t = 0; t < n; ++t) rhs.at(i, j, t) += w * A.at(a, b, t);
                }
    detail::acc_tensor3(acc, A.space, lhs - rhs, "fusion1");
    return acc.finish();
}

// (id (x) D_r)(r) = r1 rr1 (x) r2 (x) rr2.
template <class K>
Report check_qt2(const PermAlgebra<K>& A, const Tensor2<K>& r, const std::string& name = "QT2") {
    CheckAcc<K> acc(name);
    PermCoalgebra<K> C = coboundary_delta(A, r);
    std::size_t n = A.dim();
    Tensor3<K> lhs(A.space, A.space, A.space), rhs(A.space, A.space, A.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b) {
            const K& w = r.at(i, b);
            if (kzero(w)) continue;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) lhs.at(i, p, q) += w * C.at(b, p, q);
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t k = 0; k < n; ++k) {
                    K w = r.at(a, j) * r.at(b, k);
                    if (kzero(w)) continue;
                    for (std::size_t t = 0; t < n; ++t) rhs.at(t, j, k) += w * A.at(a, b, t);
                }
    detail::acc_tensor3(acc, A.space, lhs - rhs, "fusion2");
    return acc.finish();
}

}  // namespace permlab
