#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/ybe.hpp"

namespace permlab {

// Perm bialgebra candidate: a product and a coproduct on one space, with
// optional Nijenhuis operators N (algebra side) and S (coalgebra side).
template <class K>
struct PermBialgebra {
    PermAlgebra<K> algebra;
    PermCoalgebra<K> coalgebra;
    std::optional<LinearMap<K>> N, S;
};

// The antisymmetrized compatibility chain: three expressions, pairwise.
template <class K>
Report check_bialg_skew(const PermAlgebra<K>& A, const PermCoalgebra<K>& C,
                        const std::string& name = "BIALG_SKEW") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
            LinearMap<K> Ry(A.space, A.space, A.right_mult(y));
            Tensor2<K> dxy = C.cop(A.multiply(x, y));
            Tensor2<K> dyx = C.cop(A.multiply(y, x));
            Tensor2<K> dx = C.cop(x), dy = C.cop(y);
            Tensor2<K> e1 = dxy - flip(dxy);
            Tensor2<K> e2 = dyx - flip(dyx);
            Tensor2<K> e3 = leg_apply(Ry, dx, 1) - flip(leg_apply(Ry, dx, 2)) + leg_apply(Rx, dy, 2) -
                            flip(leg_apply(Rx, dy, 1));
            std::string w = "x=" + A.space.basis[i] + ",y=" + A.space.basis[j];
            detail::acc_tensor2(acc, e1 - e2, w + " eq(1,2)");
            detail::acc_tensor2(acc, e1 - e3, w + " eq(1,3)");
            detail::acc_tensor2(acc, e2 - e3, w + " eq(2,3)");
        }
    return acc.finish();
}

// The four-expression compatibility chain for Delta(xy), pairwise.
template <class K>
Report check_bialg_main(const PermAlgebra<K>& A, const PermCoalgebra<K>& C,
                        const std::string& name = "BIALG_MAIN") {
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            LinearMap<K> Lx(A.space, A.space, A.left_mult(x));
            LinearMap<K> Ly(A.space, A.space, A.left_mult(y));
            LinearMap<K> Rx(A.space, A.space, A.right_mult(x));
            LinearMap<K> Ry(A.space, A.space, A.right_mult(y));
            Tensor2<K> dx = C.cop(x), dy = C.cop(y);
            Tensor2<K> f1 = C.cop(A.multiply(x, y));
            Tensor2<K> f2 = leg_apply(Lx, dy, 1) + leg_apply(Ry, dx, 2) - leg_apply(Ly, dx, 2);
            // second chain member with the sign forced by the dual matched
            // pair translation: x1(lh(a)x2) contracts Delta - tau Delta
            Tensor2<K> f3 = leg_apply(Lx, dy, 1) - flip(leg_apply(Lx, dy, 2)) + leg_apply(Ry, dx, 2);
            Tensor2<K> f4 = leg_apply(Ry, dx, 1) + leg_apply(Rx, dy, 2) - leg_apply(Lx, dy, 2) -
                            flip(leg_apply(Rx, dy, 1)) + flip(leg_apply(Lx, dy, 1));
            std::array<const Tensor2<K>*, 4> e{&f1, &f2, &f3, &f4};
            std::string w = "x=" + A.space.basis[i] + ",y=" + A.space.basis[j];
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = p + 1; q < 4; ++q)
                    detail::acc_tensor2(acc, *e[p] - *e[q],
                                        w + " eq(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
        }
    return acc.finish();
}

template <class K>
Report check_bialg(const PermAlgebra<K>& A, const PermCoalgebra<K>& C, const std::string& name = "BIALG") {
    return Report::combine(name, {check_bialg_skew(A, C), check_bialg_main(A, C)});
}

// Dual-admissibility conditions on the operator pair, expressed through the
// coproduct: (S (x) id) D N + (id (x) N^2) D - (S (x) N) D - (id (x) N) D N = 0.
template <class K>
Report check_nadm_co1(const PermCoalgebra<K>& C, const LinearMap<K>& N, const LinearMap<K>& S,
                      const std::string& name = "NADM_CO_1") {
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Tensor2<K> dx = C.cop(x), dnx = C.cop(N(x));
        Tensor2<K> out = leg_apply(S, dnx, 1) + leg_apply(N2, dx, 2) -
                         leg_apply(S, leg_apply(N, dx, 2), 1) - leg_apply(N, dnx, 2);
        detail::acc_tensor2(acc, out, "x=" + C.space.basis[i]);
    }
    return acc.finish();
}

// (id (x) S) D N + (N^2 (x) id) D - (N (x) S) D - (N (x) id) D N = 0.
template <class K>
Report check_nadm_co2(const PermCoalgebra<K>& C, const LinearMap<K>& N, const LinearMap<K>& S,
                      const std::string& name = "NADM_CO_2") {
    CheckAcc<K> acc(name);
    std::size_t n = C.dim();
    LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> x = basis_vec<K>(n, i);
        Tensor2<K> dx = C.cop(x), dnx = C.cop(N(x));
        Tensor2<K> out = leg_apply(S, dnx, 2) + leg_apply(N2, dx, 1) -
                         leg_apply(N, leg_apply(S, dx, 2), 1) - leg_apply(N, dnx, 1);
        detail::acc_tensor2(acc, out, "x=" + C.space.basis[i]);
    }
    return acc.finish();
}

// Full candidate verdict: the perm bialgebra clauses plus, when operators
// are present, the five Nijenhuis clauses.
template <class K>
Report check_bialgebra(const PermBialgebra<K>& B) {
    std::vector<Report> parts;
    parts.push_back(check_perm(B.algebra));
    parts.push_back(check_coperm(B.coalgebra));
    parts.push_back(check_bialg(B.algebra, B.coalgebra));
    if (B.N && B.S) {
        parts.push_back(check_nijenhuis(B.algebra, *B.N));
        parts.push_back(check_conijenhuis(B.coalgebra, *B.S));
        parts.push_back(check_adm1(B.algebra, *B.N, *B.S));
        parts.push_back(check_adm2(B.algebra, *B.N, *B.S));
        parts.push_back(check_nadm_co1(B.coalgebra, *B.N, *B.S));
        parts.push_back(check_nadm_co2(B.coalgebra, *B.N, *B.S));
    }
    return Report::combine(B.N && B.S ? "NIJ_PERM_BIALGEBRA" : "PERM_BIALGEBRA", std::move(parts));
}

// Matched pair on g and g* built from the dual actions of both products.
template <class K>
MatchedPair<K> extract_matched_pair(const PermBialgebra<K>& B) {
    std::size_t n = B.algebra.dim();
    MatchedPair<K> mp;
    mp.g = B.algebra;
    mp.h = dualize_coalgebra(B.coalgebra);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> lt = B.algebra.left_mult_basis(i).transpose();
        Matrix<K> rt = B.algebra.right_mult_basis(i).transpose();
        mp.lg.push_back(rt - lt);
        mp.rg.push_back(rt);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> lt = mp.h.left_mult_basis(i).transpose();
        Matrix<K> rt = mp.h.right_mult_basis(i).transpose();
        mp.lh.push_back(rt - lt);
        mp.rh.push_back(rt);
    }
    if (B.N) mp.Ng = LinearMap<K>(mp.g.space, mp.g.space, B.N->m);
    if (B.S) mp.Nh = LinearMap<K>(mp.h.space, mp.h.space, B.S->m.transpose());
    return mp;
}

// Standard Manin form B(x+a, y+b) = <x,b> - <y,a> on g (+) g*.
template <class K>
BilinearForm<K> manin_form(const Space& sum, std::size_t dim_g) {
    std::size_t n = sum.dim();
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < dim_g; ++i) {
        m.at(i, dim_g + i) = K(1);
        m.at(dim_g + i, i) = K(-1);
    }
    return BilinearForm<K>(sum, std::move(m), Symmetry::skew);
}

template <class K>
struct ManinTriple {
    PermAlgebra<K> ambient;
    BilinearForm<K> form;
    std::size_t dim_g;
    std::optional<LinearMap<K>> op;  // N + S* when operators are present
};

// Assemble the Manin triple through the matched pair route.
template <class K>
ManinTriple<K> assemble_manin(const PermBialgebra<K>& B) {
    MatchedPair<K> mp = extract_matched_pair(B);
    Report mpr = check_matched_pair(mp);
    if (!mpr.ok()) throw AxiomFailure("Manin assembly needs a matched pair: " + mpr.summary());
    MatchedSum<K> sum = matched_pair_sum(mp);
    BilinearForm<K> form = manin_form<K>(sum.algebra.space, sum.dim_g);
    return ManinTriple<K>{std::move(sum.algebra), std::move(form), sum.dim_g, std::move(sum.op)};
}

// Ambient structure checks without the matched-pair gate, for equivalence
// sweeps where the candidate may fail.
template <class K>
ManinTriple<K> assemble_manin_unchecked(const PermBialgebra<K>& B) {
    MatchedPair<K> mp = extract_matched_pair(B);
    MatchedSum<K> sum = matched_pair_sum(mp);
    BilinearForm<K> form = manin_form<K>(sum.algebra.space, sum.dim_g);
    return ManinTriple<K>{std::move(sum.algebra), std::move(form), sum.dim_g, std::move(sum.op)};
}

// Verdict that (ambient, form[, op]) is a (skew, NF) Frobenius perm algebra
// containing g and g* as subalgebras.
template <class K>
Report check_manin(const ManinTriple<K>& t) {
    std::vector<Report> parts;
    parts.push_back(check_perm(t.ambient));
    parts.push_back(check_frobenius(t.ambient, t.form));
    {
        CheckAcc<K> closure("SUBALGEBRA_CLOSURE");
        std::size_t n = t.ambient.dim(), g = t.dim_g;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                for (std::size_t k = g; k < n; ++k)
                    closure.add("g block @" + t.ambient.space.basis[k], t.ambient.at(i, j, k));
        for (std::size_t i = g; i < n; ++i)
            for (std::size_t j = g; j < n; ++j)
                for (std::size_t k = 0; k < g; ++k)
                    closure.add("g* block @" + t.ambient.space.basis[k], t.ambient.at(i, j, k));
        parts.push_back(closure.finish());
    }
    if (t.op) parts.push_back(check_nijenhuis(t.ambient, *t.op));
    return Report::combine("MANIN_TRIPLE", std::move(parts));
}

// Adjoint of a map with respect to a nondegenerate form:
// B(f(x), y) = B(x, f_hat(y)), i.e. f_hat = B^-1 f^T B.
template <class K>
LinearMap<K> adjoint_wrt_form(const LinearMap<K>& f, const BilinearForm<K>& form) {
    auto inv = form.m.inverse();
    if (!inv) throw DegenerateForm("adjoint needs a nondegenerate form");
    return LinearMap<K>(form.space, form.space, *inv * f.m.transpose() * form.m);
}

// B(N(x), y) = B(x, Nh(y)) on all basis pairs.
template <class K>
Report check_adjoint_identity(const BilinearForm<K>& form, const LinearMap<K>& f, const LinearMap<K>& fhat,
                              const std::string& name = "ADJ") {
    CheckAcc<K> acc(name);
    std::size_t n = form.space.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> x = basis_vec<K>(n, i), y = basis_vec<K>(n, j);
            acc.add("x=" + form.space.basis[i] + ",y=" + form.space.basis[j],
                    form.value(f(x), y) - form.value(x, fhat(y)));
        }
    return acc.finish();
}

// The adjoint of N + S* on an assembled Manin triple equals S + N*.
template <class K>
Report check_manin_adjoint(const PermBialgebra<K>& B) {
    if (!B.N || !B.S) throw AxiomFailure("Manin adjoint check needs both operators");
    ManinTriple<K> t = assemble_manin_unchecked(B);
    LinearMap<K> combined = *t.op;
    LinearMap<K> adj = adjoint_wrt_form(combined, t.form);
    std::size_t g = t.dim_g;
    Matrix<K> expected(t.ambient.dim(), t.ambient.dim());
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            expected.at(i, j) = B.S->m.at(i, j);
            expected.at(g + i, g + j) = B.N->m.at(j, i);
        }
    CheckAcc<K> acc("MANIN_ADJ");
    for (std::size_t i = 0; i < t.ambient.dim(); ++i)
        for (std::size_t j = 0; j < t.ambient.dim(); ++j)
            acc.add("@(" + t.ambient.space.basis[i] + "," + t.ambient.space.basis[j] + ")",
                    adj.m.at(i, j) - expected.at(i, j));
    return acc.finish();
}

// psi(x) = B(x, .) intertwines (g, L, R, N) with (g*, R*-L*, R*, Nhat*),
// and the reconstructed form matches. The adjoint candidate may be supplied
// (a structure's claimed Nhat); by default it is computed from the form.
template <class K>
Report psi_equivalence(const PermAlgebra<K>& A, const LinearMap<K>& N, const BilinearForm<K>& form,
                       const std::optional<LinearMap<K>>& nhat_claimed = std::nullopt) {
    if (!(form.m == -form.m.transpose())) throw NotSymmetricForm("psi equivalence needs a skew form");
    Report nij = check_nijenhuis(A, N);
    if (!nij.ok()) throw AxiomFailure("psi equivalence needs a Nijenhuis operator: " + nij.summary());
    Report frob = check_frobenius(A, form);
    if (!frob.ok()) throw AxiomFailure("psi equivalence needs an invariant form: " + frob.summary());
    if (!form.nondegenerate()) throw DegenerateForm("psi equivalence needs a nondegenerate form");

    std::size_t n = A.dim();
    // <psi(x), y> = B(x, y): psi matrix in the dual basis is B^T
    Matrix<K> psi = form.m.transpose();
    LinearMap<K> nhat = nhat_claimed ? *nhat_claimed : adjoint_wrt_form(N, form);
    std::vector<Report> parts;
    {
        CheckAcc<K> acc("PSI_L");
        for (std::size_t i = 0; i < n; ++i) {
            Matrix<K> Lx = A.left_mult_basis(i);
            Matrix<K> Rx = A.right_mult_basis(i);
            // psi(L(x)y) = (R* - L*)(x) psi(y)
            Matrix<K> diff = psi * Lx - (Rx.transpose() - Lx.transpose()) * psi;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    acc.add("x=" + A.space.basis[i] + " @(" + std::to_string(a) + "," + std::to_string(b) + ")",
                            diff.at(a, b));
        }
        parts.push_back(acc.finish());
    }
    {
        CheckAcc<K> acc("PSI_R");
        for (std::size_t i = 0; i < n; ++i) {
            Matrix<K> Rx = A.right_mult_basis(i);
            // psi(y R(x)) = psi(y) R*(x)
            Matrix<K> diff = psi * Rx - Rx.transpose() * psi;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    acc.add("x=" + A.space.basis[i] + " @(" + std::to_string(a) + "," + std::to_string(b) + ")",
                            diff.at(a, b));
        }
        parts.push_back(acc.finish());
    }
    {
        CheckAcc<K> acc("PSI_N");
        // psi o N = Nhat* o psi
        Matrix<K> diff = psi * N.m - nhat.m.transpose() * psi;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                acc.add("@(" + std::to_string(a) + "," + std::to_string(b) + ")", diff.at(a, b));
        parts.push_back(acc.finish());
    }
    {
        CheckAcc<K> acc("PSI_FORM");
        // the converse construction B'(x,y) := <psi(x), y> returns the form
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                K reconstructed = psi.at(j, i);  // <psi(e_i), e_j>
                acc.add("@(" + A.space.basis[i] + "," + A.space.basis[j] + ")",
                        reconstructed - form.m.at(i, j));
            }
        parts.push_back(acc.finish());
    }
    return Report::combine("PSI_EQUIV", std::move(parts));
}

// The three-way equivalence verdicts for a bialgebra candidate with
// operators: Nijenhuis matched pair, Manin triple of an NF perm algebra,
// and the five-clause bialgebra verdict.
template <class K>
struct TriangleVerdicts {
    bool matched_pair;
    bool manin;
    bool bialgebra;
};

template <class K>
TriangleVerdicts<K> triangle_verdicts(const PermBialgebra<K>& B) {
    TriangleVerdicts<K> out{};
    MatchedPair<K> mp = extract_matched_pair(B);
    out.matched_pair = check_nij_matched_pair(mp).ok();
    ManinTriple<K> t = assemble_manin_unchecked(B);
    out.manin = check_manin(t).ok();
    out.bialgebra = check_bialgebra(B).ok();
    return out;
}

}  // namespace permlab
