// Acceptance suite: one pass/fail line per criterion, with wall-clock
// budgets pinned in code. Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "permlab/solver.hpp"

using namespace permlab;
using namespace permlab::testing;
namespace idn = permlab::identity;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::ostream&)> run;
};

bool expect(std::ostream& log, bool cond, const std::string& what) {
    if (!cond) log << "    FAILED: " << what << "\n";
    return cond;
}

// ---- criterion 1 & 2: classification reproduction --------------------

bool criterion_classification(std::ostream& log) {
    bool ok = true;
    auto rows = classify2d({3, 5, 7});
    ok &= expect(log, rows.size() == 5, "five classification rows");
    for (const auto& r : rows) {
        ok &= expect(log, r.pybe_holds, "P(r)=0 symbolically for (" + r.algebra_id + ")");
        if (r.algebra_id == "c" && r.row == 1) {
            // the printed coproduct sign is off by lambda -> -lambda; the
            // discrepancy must be detected and surfaced, and the
            // sign-corrected family must match exactly
            ok &= expect(log, !r.delta_matches_listed, "(c) row 1 sign discrepancy detected");
            ok &= expect(log, r.delta_matches_upto_sign, "(c) row 1 matches after lambda -> -lambda");
            bool surfaced = false;
            for (const auto& f : r.findings)
                if (f.find("sign") != std::string::npos) surfaced = true;
            ok &= expect(log, surfaced, "(c) row 1 discrepancy surfaced as a finding");
            log << "    finding surfaced: computed Delta(e2) = -lambda e1(x)e1, listed +lambda\n";
        } else {
            ok &= expect(log, r.delta_matches_listed,
                         "coboundary reproduces the listed coproduct for (" + r.algebra_id + ") row " +
                             std::to_string(r.row));
        }
    }
    // item (a) exact values
    const auto& a = rows[0];
    ok &= expect(log, a.computed_delta ==
                          "Delta(e1) = (lambda)*e1(x)e1 + (-nu)*e2(x)e2; "
                          "Delta(e2) = (lambda)*e1(x)e2 + (lambda)*e2(x)e1 + (2*kappa)*e2(x)e2",
                 "item (a) coproduct values");
    return ok;
}

bool criterion_sign_fix(std::ostream& log) {
    // lambda = kappa = 0, nu = 1 in item (a): Delta(e1) = -e2 (x) e2
    PermAlgebra<Rational> A = intro_algebra<Rational>();
    Tensor2<Rational> r(A.space, A.space);
    r.at(1, 1) = Rational(1);
    PermCoalgebra<Rational> C = coboundary_delta(A, r);
    bool ok = expect(log, C.at(0, 1, 1) == Rational(-1), "Delta(e1) has coefficient -1 at e2(x)e2");
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
            if (j == 1 && k == 1) continue;
            ok &= expect(log, C.at(0, j, k).is_zero(), "Delta(e1) has no other terms");
        }
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) ok &= expect(log, C.at(1, j, k).is_zero(), "Delta(e2) = 0");
    return ok;
}

// ---- criterion 3: the five clauses of the worked bialgebra ------------

bool criterion_example_226(std::ostream& log) {
    const CorpusEntry* entry = nullptr;
    static const auto corpus = builtin_corpus();
    for (const auto& e : corpus)
        if (e.name == "example-2-26") entry = &e;
    if (!expect(log, entry != nullptr, "corpus entry present")) return false;
    BoundContext<PolyQ> bc = bind_bundle(entry->bundle, {});
    bool ok = true;
    // clause 1: perm bialgebra
    ok &= expect(log, idn::check_builtin(idn::IdentityId::PERM, bc.ctx).ok(), "PERM");
    ok &= expect(log, idn::check_builtin(idn::IdentityId::COPERM, bc.ctx).ok(), "COPERM");
    ok &= expect(log, idn::check_builtin(idn::IdentityId::BIALG, bc.ctx).ok(), "BIALG");
    // clause 2: Nijenhuis perm algebra
    ok &= expect(log, idn::check_builtin(idn::IdentityId::NIJ, bc.ctx).ok(), "NIJ");
    // clause 3: Nijenhuis perm coalgebra
    ok &= expect(log, idn::check_builtin(idn::IdentityId::NIJ_CO, bc.ctx).ok(), "NIJ_CO");
    // clause 4: admissibility. The data does NOT satisfy the left identity
    // unconditionally; the exact polynomial constraint is surfaced here
    // rather than suppressed.
    Report adm1 = idn::check_builtin(idn::IdentityId::ADM_1, bc.ctx);
    ok &= expect(log, adm1.verdict == Verdict::conditional, "ADM_1 reports its constraint");
    ok &= expect(log, adm1.constraints == std::vector<std::string>{"k1*k4 - k3*k4"},
                 "ADM_1 constraint is exactly k1*k4 - k3*k4");
    log << "    documented discrepancy: clause (4) holds only under k4*(k1 - k3) = 0;\n"
           "    all other clauses hold unconditionally in k1..k4\n";
    ok &= expect(log, idn::check_builtin(idn::IdentityId::ADM_2, bc.ctx).ok(), "ADM_2");
    // clause 5: dual admissibility
    ok &= expect(log, idn::check_builtin(idn::IdentityId::NADM_CO_1, bc.ctx).ok(), "NADM_CO_1");
    ok &= expect(log, idn::check_builtin(idn::IdentityId::NADM_CO_2, bc.ctx).ok(), "NADM_CO_2");
    return ok;
}

// ---- criterion 4: the two operator constructions ----------------------

bool criterion_section3(std::ostream& log) {
    bool ok = true;
    auto ctx = make_ctx<Rational>({"lambda", "nu"});
    PolyQ lam = PolyQ::var(ctx, "lambda"), nu = PolyQ::var(ctx, "nu");

    // symplectic side
    PermAlgebra<PolyQ> A = intro_algebra<PolyQ>();
    Matrix<PolyQ> wm(2, 2);
    wm.at(0, 0) = nu;
    BilinearForm<PolyQ> omega(A.space, wm, Symmetry::symmetric);
    Tensor2<PolyQ> r(A.space, A.space);
    r.at(0, 0) = lam;
    LinearMap<PolyQ> N = nijenhuis_from_symplectic(A, omega, r);
    ok &= expect(log, N.m.at(0, 0) == lam * nu, "N(e1) = lambda*nu e1");
    ok &= expect(log, N.m.at(1, 1).is_zero() && N.m.at(0, 1).is_zero() && N.m.at(1, 0).is_zero(),
                 "N(e2) = 0");
    ok &= expect(log, check_nijenhuis(A, N).ok(), "constructed N passes the Nijenhuis condition");

    // cosymplectic side
    PermCoalgebra<PolyQ> C(A.space);
    C.at(0, 0, 0) = PolyQ(1);
    C.at(1, 1, 0) = PolyQ(1);
    LinearMap<PolyQ> S = nijenhuis_from_cosymplectic(C, omega, r);
    ok &= expect(log, S.m.at(0, 0) == lam * nu, "S(e1) = lambda*nu e1");
    ok &= expect(log, S.m.at(1, 1).is_zero() && S.m.at(0, 1).is_zero() && S.m.at(1, 0).is_zero(),
                 "S(e2) = 0");
    ok &= expect(log, check_conijenhuis(C, S).ok(), "constructed S passes the coalgebra condition");

    // the listed multiplication table of the induced product
    PermAlgebra<PolyQ> P = omega_product(C, omega);
    ok &= expect(log, P.at(0, 0, 0) == nu, "e1.e1 = nu e1");
    ok &= expect(log, P.at(0, 1, 1) == nu, "e1.e2 = nu e2");
    ok &= expect(log, P.at(1, 0, 1) == nu, "e2.e1 = nu e2");
    bool zero22 = P.at(1, 1, 0).is_zero() && P.at(1, 1, 1).is_zero();
    bool offdiag = P.at(0, 0, 1).is_zero() && P.at(0, 1, 0).is_zero() && P.at(1, 0, 0).is_zero();
    ok &= expect(log, zero22 && offdiag, "remaining table entries vanish");
    return ok;
}

// ---- criterion 5: finite-field completeness probe ---------------------

bool criterion_enumeration(std::ostream& log) {
    bool ok = true;
    for (std::uint32_t p : {3u, 5u}) {
        PermAlgebra<Fp> A(g2());
        A.at(0, 0, 0) = Fp::make(p, 1);
        A.at(1, 0, 1) = Fp::make(p, 1);
        auto sols = enumerate_symmetric_solutions(A, p);
        std::size_t expected = p == 3 ? 9 : 25;
        ok &= expect(log, sols.size() == expected,
                     "F_" + std::to_string(p) + " count " + std::to_string(sols.size()) + " == " +
                         std::to_string(expected));
        // set equality with the family {r12^2 = r11 r22}
        std::size_t family = 0;
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b)
                for (long long c = 0; c < p; ++c) {
                    bool in_family = ((b * b - a * c) % p + p) % p == 0;
                    if (in_family) ++family;
                    bool found = std::binary_search(
                        sols.begin(), sols.end(), SymSolution{{a, b, c}},
                        [](const SymSolution& x, const SymSolution& y) { return x.upper < y.upper; });
                    ok &= expect(log, in_family == found,
                                 "family membership matches enumeration at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
                }
        ok &= expect(log, family == expected, "family point count");
        // determinism
        auto again = enumerate_symmetric_solutions(A, p);
        ok &= expect(log, again.size() == sols.size(), "deterministic rerun");
    }
    return ok;
}

// ---- criterion 6: bidirectional equivalence sweeps ---------------------

bool criterion_equivalences(std::ostream& log) {
    bool ok = true;
    auto pybe_ok = [](const PermAlgebra<Fp>& A, const Tensor2<Fp>& r) { return check_pybe(A, r).ok(); };

    {  // O-operator lifting
        std::mt19937_64 rng(1001);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> A = rand_perm_algebra(rng, 7);
            Representation<Fp> rep = it % 2 == 0 ? Representation<Fp>::adjoint(A)
                                                 : Representation<Fp>::trivial(A, A.space);
            LinearMap<Fp> zero = LinearMap<Fp>::zero(A.space, A.space);
            LinearMap<Fp> T(rep.module, A.space, rand_fp_matrix(rng, 2, 2, 7));
            auto lifted = lift_ooperator(T, rep, zero, zero, zero, zero);
            bool lhs = check_pybe(lifted.semidirect.algebra, lifted.r).ok();
            bool rhs = check_oop(T, rep).ok();
            if (lhs != rhs) ok = expect(log, false, "lifting equivalence violated");
            (lhs ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "lifting sweep mixed " + std::to_string(t) + "/" +
                                                          std::to_string(f));
    }
    {  // PYBE + twist vs the transported-operator conditions
        std::mt19937_64 rng(1002);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> A = rand_perm_algebra(rng, 7);
            Tensor2<Fp> r(A.space, A.space);
            if (it % 4 == 0) {
                auto sols = symmetric_solutions(A, 7, pybe_ok);
                std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
                r = sols[pick(rng)];
            } else {
                r.at(0, 0) = rand_fp(rng, 7);
                r.at(0, 1) = rand_fp(rng, 7);
                r.at(1, 0) = r.at(0, 1);
                r.at(1, 1) = rand_fp(rng, 7);
            }
            auto njs = nijenhuis_maps(A, 7);
            std::uniform_int_distribution<std::size_t> pick(0, njs.size() - 1);
            LinearMap<Fp> N(A.space, A.space, njs[pick(rng)]);
            LinearMap<Fp> S(A.space, A.space,
                            it % 5 == 0 ? N.m : rand_fp_matrix(rng, 2, 2, 7));
            bool lhs = check_pybe(A, r).ok() && check_rs_compat(r, N, S).ok();
            bool rhs = check_thx_op(A, r).ok() && check_thx_twist(r, N, S).ok();
            if (lhs != rhs) ok = expect(log, false, "r# equivalence violated");
            (lhs ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "r# sweep mixed " + std::to_string(t) + "/" +
                                                          std::to_string(f));
    }
    {  // semidirect Nijenhuis vs representation quadruple
        std::mt19937_64 rng(1003);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> A = rand_perm_algebra(rng, 7);
            auto njs = nijenhuis_maps(A, 7);
            std::uniform_int_distribution<std::size_t> pick(0, njs.size() - 1);
            LinearMap<Fp> N(A.space, A.space, njs[pick(rng)]);
            Representation<Fp> rep = it % 2 == 0 ? Representation<Fp>::adjoint(A)
                                                 : Representation<Fp>::trivial(A, A.space);
            LinearMap<Fp> alpha(rep.module, rep.module,
                                it % 3 == 0 ? N.m : rand_fp_matrix(rng, 2, 2, 7));
            auto sd = semidirect_product(A, rep, N, alpha);
            bool lhs = check_nijenhuis(sd.algebra, sd.op).ok();
            bool rhs = check_nijrep_l(rep, N, alpha).ok() && check_nijrep_r(rep, N, alpha).ok();
            if (lhs != rhs) ok = expect(log, false, "semidirect equivalence violated");
            (lhs ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "semidirect sweep mixed " + std::to_string(t) +
                                                          "/" + std::to_string(f));
    }
    {  // matched pair vs sum algebra
        std::mt19937_64 rng(1004);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> G = rand_perm_algebra(rng, 5);
            PermAlgebra<Fp> H2 = rand_perm_algebra(rng, 5);
            MatchedPair<Fp> mp;
            mp.g = G;
            mp.h = H2;
            for (std::size_t i = 0; i < 2; ++i) {
                Matrix<Fp> lt = G.left_mult_basis(i).transpose();
                Matrix<Fp> rt = G.right_mult_basis(i).transpose();
                mp.lg.push_back(rt - lt);
                mp.rg.push_back(rt);
            }
            for (std::size_t i = 0; i < 2; ++i) {
                Matrix<Fp> lt = H2.left_mult_basis(i).transpose();
                Matrix<Fp> rt = H2.right_mult_basis(i).transpose();
                mp.lh.push_back(rt - lt);
                mp.rh.push_back(rt);
            }
            if (it % 3 == 0) {
                for (auto& m : mp.lg) m = Matrix<Fp>(2, 2);
                for (auto& m : mp.rg) m = Matrix<Fp>(2, 2);
                for (auto& m : mp.lh) m = Matrix<Fp>(2, 2);
                for (auto& m : mp.rh) m = Matrix<Fp>(2, 2);
            }
            bool lhs = check_matched_pair(mp).ok();
            bool rhs = check_perm(matched_pair_sum(mp).algebra).ok();
            if (lhs != rhs) ok = expect(log, false, "matched pair equivalence violated");
            (lhs ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "matched pair sweep mixed " + std::to_string(t) +
                                                          "/" + std::to_string(f));
    }
    {  // fusion identities vs PYBE
        std::mt19937_64 rng(1005);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> A = rand_perm_algebra(rng, 5);
            Tensor2<Fp> r(A.space, A.space);
            if (it % 4 == 0) {
                auto sols = symmetric_solutions(A, 5, pybe_ok);
                std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
                r = sols[pick(rng)];
            } else {
                r.at(0, 0) = rand_fp(rng, 5);
                r.at(0, 1) = rand_fp(rng, 5);
                r.at(1, 0) = r.at(0, 1);
                r.at(1, 1) = rand_fp(rng, 5);
            }
            bool pybe = check_pybe(A, r).ok();
            if (check_qt1(A, r).ok() != pybe || check_qt2(A, r).ok() != pybe)
                ok = expect(log, false, "fusion equivalence violated");
            (pybe ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "fusion sweep mixed " + std::to_string(t) + "/" +
                                                          std::to_string(f));
    }
    {  // dual fusion identities vs the co-perm YBE
        std::mt19937_64 rng(1006);
        int t = 0, f = 0, n = 0;
        for (int it = 0; it < 210; ++it) {
            PermAlgebra<Fp> base = rand_perm_algebra(rng, 5);
            PermCoalgebra<Fp> C(base.space);
            {
                PermCoalgebra<Fp> dual = dualize_algebra(base);
                C.d = dual.d;
            }
            Matrix<Fp> wm(2, 2);
            wm.at(0, 0) = rand_fp(rng, 5);
            wm.at(0, 1) = rand_fp(rng, 5);
            wm.at(1, 0) = wm.at(0, 1);
            wm.at(1, 1) = rand_fp(rng, 5);
            BilinearForm<Fp> w(C.space, wm, Symmetry::symmetric);
            PermAlgebra<Fp> prod = omega_product(C, w);
            bool coybe = check_coybe(C, w).ok();
            if (check_dqt1(C, w, prod).ok() != coybe || check_dqt2(C, w, prod).ok() != coybe)
                ok = expect(log, false, "dual fusion equivalence violated");
            (coybe ? t : f)++;
            ++n;
        }
        ok &= expect(log, n >= 200 && t > 5 && f > 5, "dual fusion sweep mixed " + std::to_string(t) +
                                                          "/" + std::to_string(f));
    }
    return ok;
}

// ---- criterion 7: oracle equivalence over the corpus -------------------

bool criterion_oracle(std::ostream& log) {
    bool ok = true;
    static const auto corpus = builtin_corpus();
    std::size_t bundles = 0, comparisons = 0;
    for (const auto& e : corpus) {
        BoundContext<PolyQ> bc = bind_bundle(e.bundle, {});
        idn::EvalContext<PolyQ> ctx = bc.ctx;
        const Space& g = ctx.product ? ctx.product->space : ctx.cop->space;

        // deterministic fillers for slots the bundle does not carry
        PermCoalgebra<PolyQ> cop_fill(g);
        if (!ctx.cop) {
            PermCoalgebra<PolyQ> dual = dualize_algebra(*ctx.product);
            cop_fill.d = dual.d;
            ctx.cop = &cop_fill;
        }
        Matrix<PolyQ> nm(2, 2), sm(2, 2);
        nm.at(0, 0) = PolyQ(1);
        nm.at(0, 1) = PolyQ(2);
        nm.at(1, 1) = PolyQ(3);
        sm.at(0, 0) = PolyQ(2);
        sm.at(1, 0) = PolyQ(1);
        sm.at(1, 1) = PolyQ(1);
        LinearMap<PolyQ> n_fill(g, g, nm), s_fill(g, g, sm);
        if (!ctx.maps.count("N")) ctx.maps["N"] = &n_fill;
        if (!ctx.maps.count("S")) ctx.maps["S"] = &s_fill;
        if (!ctx.maps.count("A")) ctx.maps["A"] = ctx.maps["N"];
        if (!ctx.maps.count("b")) ctx.maps["b"] = ctx.maps["S"];
        if (!ctx.maps.count("phi")) ctx.maps["phi"] = ctx.maps["N"];
        if (!ctx.maps.count("f")) ctx.maps["f"] = ctx.maps["A"];
        if (!ctx.maps.count("Nh")) ctx.maps["Nh"] = ctx.maps["S"];
        Matrix<PolyQ> bmat(2, 2);
        bmat.at(0, 1) = PolyQ(1);
        bmat.at(1, 0) = PolyQ(-1);
        BilinearForm<PolyQ> b_fill(g, bmat, Symmetry::skew);
        if (!ctx.forms.count("B")) ctx.forms["B"] = &b_fill;
        Matrix<PolyQ> wmat(2, 2);
        wmat.at(0, 0) = PolyQ(1);
        wmat.at(1, 1) = PolyQ(2);
        BilinearForm<PolyQ> w_fill(g, wmat, Symmetry::symmetric);
        if (!ctx.forms.count("w")) ctx.forms["w"] = &w_fill;
        Tensor2<PolyQ> r_fill(g, g);
        r_fill.at(0, 0) = PolyQ(1);
        r_fill.at(0, 1) = PolyQ(2);
        r_fill.at(1, 0) = PolyQ(2);
        r_fill.at(1, 1) = PolyQ(3);
        if (!ctx.tensors.count("r")) ctx.tensors["r"] = &r_fill;
        PermAlgebra<PolyQ> p2_fill(g);
        if (!ctx.product2) {
            p2_fill = deformed_product(*ctx.product, *ctx.maps.at("N"));
            ctx.product2 = &p2_fill;
        }
        // COSYMP requires a symmetric tensor on both routes; the bound
        // tensor in every corpus bundle is symmetric already
        std::size_t here = 0;
        for (const auto& ident : idn::registry()) {
            if (ident.dsl.empty()) continue;
            Report hand = idn::check_builtin(ident.id, ctx);
            Report dsl = idn::check_dsl(ident.id, ctx);
            bool agree = hand.verdict == dsl.verdict;
            if (agree && hand.verdict == Verdict::conditional)
                agree = hand.constraints == dsl.constraints;
            if (!agree)
                ok = expect(log, false,
                            std::string(ident.name) + " disagrees on " + e.name + " (" +
                                verdict_str(hand.verdict) + " vs " + verdict_str(dsl.verdict) + ")");
            ++here;
        }
        ok &= expect(log, here >= 30, e.name + " compared " + std::to_string(here) + " identities");
        comparisons += here;
        ++bundles;
    }
    ok &= expect(log, bundles >= 7, "at least 7 corpus bundles");
    log << "    " << comparisons << " hand-coded/DSL comparisons across " << bundles << " bundles\n";
    return ok;
}

// ---- criterion 8: the three-way characterization ------------------------

bool criterion_triangle(std::ostream& log) {
    bool ok = true;
    auto make226 = [&](long k1, long k2, long k3, long k4) {
        PermBialgebra<Rational> B;
        B.algebra = intro_algebra<Rational>();
        B.coalgebra = PermCoalgebra<Rational>(B.algebra.space);
        B.coalgebra.at(0, 1, 1) = Rational(-1);
        Matrix<Rational> nm(2, 2), sm(2, 2);
        nm.at(0, 0) = Rational(k1);
        nm.at(1, 0) = Rational(k2);
        nm.at(1, 1) = Rational(k3);
        sm.at(0, 0) = Rational(k3);
        sm.at(1, 0) = Rational(k4);
        sm.at(1, 1) = Rational(k3);
        B.N = LinearMap<Rational>(B.algebra.space, B.algebra.space, nm);
        B.S = LinearMap<Rational>(B.algebra.space, B.algebra.space, sm);
        return B;
    };
    // the worked instance at admissible and generic parameters
    for (auto [k1, k4, expect_true] :
         {std::tuple<long, long, bool>{5, 7, true}, {2, 0, true}, {2, 7, false}}) {
        TriangleVerdicts<Rational> v = triangle_verdicts(make226(k1, 3, 5, k4));
        ok &= expect(log, v.matched_pair == v.manin && v.manin == v.bialgebra,
                     "verdicts pairwise equal at k1=" + std::to_string(k1) + ",k4=" + std::to_string(k4));
        ok &= expect(log, v.bialgebra == expect_true,
                     "expected verdict at k1=" + std::to_string(k1) + ",k4=" + std::to_string(k4));
    }

    // 20 randomized candidates over F5 with hypothesis-safe data; every
    // fourth is built from a quasitriangular solution with zero operators,
    // which is a genuine Nijenhuis perm bialgebra
    std::mt19937_64 rng(1208);
    auto pybe_ok = [](const PermAlgebra<Fp>& A, const Tensor2<Fp>& r) { return check_pybe(A, r).ok(); };
    int t = 0, f = 0;
    for (int it = 0; it < 20; ++it) {
        PermAlgebra<Fp> A = rand_perm_algebra(rng, 5);
        PermBialgebra<Fp> B;
        B.algebra = A;
        if (it % 4 == 0) {
            auto sols = symmetric_solutions(A, 5, pybe_ok);
            std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
            B.coalgebra = coboundary_delta(A, sols[pick(rng)]);
            Matrix<Fp> z(2, 2);
            B.N = LinearMap<Fp>(A.space, A.space, z);
            B.S = *B.N;
            TriangleVerdicts<Fp> v = triangle_verdicts(B);
            bool equal = v.matched_pair == v.manin && v.manin == v.bialgebra;
            if (!equal)
                ok = expect(log, false, "triangle verdicts diverge on candidate " + std::to_string(it));
            (v.bialgebra ? t : f)++;
            continue;
        }
        PermCoalgebra<Fp> C(A.space);
        {
            PermCoalgebra<Fp> dual = dualize_algebra(rand_perm_algebra(rng, 5));
            C.d = dual.d;
        }
        auto njs = nijenhuis_maps(A, 5);
        PermAlgebra<Fp> dualA = dualize_coalgebra(C);
        auto sjs = nijenhuis_maps(dualA, 5);
        std::uniform_int_distribution<std::size_t> pickn(0, njs.size() - 1), picks(0, sjs.size() - 1);
        B.coalgebra = C;
        B.N = LinearMap<Fp>(A.space, A.space, njs[pickn(rng)]);
        B.S = LinearMap<Fp>(A.space, A.space, sjs[picks(rng)].transpose());
        TriangleVerdicts<Fp> v = triangle_verdicts(B);
        bool equal = v.matched_pair == v.manin && v.manin == v.bialgebra;
        if (!equal) ok = expect(log, false, "triangle verdicts diverge on candidate " + std::to_string(it));
        (v.bialgebra ? t : f)++;
    }
    ok &= expect(log, t + f == 20, "twenty candidates");
    log << "    candidates split " << t << " true / " << f << " false, verdicts pairwise equal\n";
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "classification reproduction (symbolic families and coproduct tables)", 5.0,
         criterion_classification},
        {2, "sign of the induced coproduct at lambda=kappa=0, nu=1", 1.0, criterion_sign_fix},
        {3, "five-clause verification of the parametric bialgebra", 10.0, criterion_example_226},
        {4, "operator constructions from (co)symplectic data", 5.0, criterion_section3},
        {5, "finite-field completeness probe over F3 and F5", 2.0, criterion_enumeration},
        {6, "bidirectional equivalence sweeps (6 lemmas x 200+ instances)", 60.0,
         criterion_equivalences},
        {7, "hand-coded vs DSL oracle agreement across the corpus", 30.0, criterion_oracle},
        {8, "matched pair / Manin triple / bialgebra three-way agreement", 30.0, criterion_triangle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs <= c.budget_seconds;
        bool pass = ok && in_budget;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
                  << static_cast<long>(secs * 1000) << " ms, budget "
                  << static_cast<long>(c.budget_seconds * 1000) << " ms)\n";
        std::cout << log.str();
        if (!in_budget) std::cout << "    FAILED: over time budget\n";
        if (!pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
