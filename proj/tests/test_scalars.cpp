#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permlab/scalar.hpp"

using namespace permlab;

namespace {

PolyCtxPtr<Rational> lnk_ctx() {
    // kappa first so kappa^2 -> lambda*nu is decreasing in graded lex
    return make_ctx<Rational>({"kappa", "lambda", "nu"});
}

std::vector<RewriteRule<Rational>> kappa_rule(const PolyCtxPtr<Rational>& ctx) {
    // kappa^2 -> lambda*nu
    RewriteRule<Rational> r;
    r.lhs = Monomial::var(0, 2);
    Poly<Rational> rhs = Poly<Rational>::var(ctx, "lambda") * Poly<Rational>::var(ctx, "nu");
    r.rhs.assign(rhs.terms().begin(), rhs.terms().end());
    return {r};
}

PolyQ rand_poly(std::mt19937_64& rng, const PolyCtxPtr<Rational>& ctx) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(0, 2);
    PolyQ p = PolyQ::constant(Rational(0), ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        PolyQ term = PolyQ::constant(Rational(coef(rng)), ctx);
        for (const auto& v : ctx->vars) {
            int e = expo(rng);
            for (int k = 0; k < e; ++k) term = term * PolyQ::var(ctx, v);
        }
        p = p + term;
    }
    return p;
}

}  // namespace

TEST_CASE("rational parse and canonical printing") {
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-0").is_zero());
    CHECK((Rational::parse("1/3") + Rational::parse("1/6")).str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), BadScalar);
    CHECK_THROWS_AS(Rational::parse("x"), BadScalar);
    CHECK_THROWS_AS(Rational::parse("1.5"), BadScalar);
}

TEST_CASE("rational invariants: canonical form") {
    Rational a = Rational::parse("6/4");
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    Rational b = Rational::parse("-6/4");
    CHECK(b.numerator() == -3);
    CHECK(b.denominator() == 2);
}

TEST_CASE("finite field basics and characteristic-2 rejection") {
    Fp a = Fp::make(7, 10);
    CHECK(a.residue() == 3);
    CHECK((a + Fp(5)).residue() == 1);
    CHECK((a * a).residue() == 2);
    CHECK((a - Fp::make(7, 4)).residue() == 6);
    CHECK((a / Fp::make(7, 3)).residue() == 1);
    CHECK((Fp::make(7, 3).inverse() * Fp::make(7, 3)).residue() == 1);
    CHECK_THROWS_AS(Fp::make(2, 1), BadScalar);
    CHECK_THROWS_AS(Fp::make(9, 1), BadScalar);
    CHECK_THROWS_AS(Fp::make(1, 0), BadScalar);
    CHECK_THROWS_AS((void)(Fp::make(5, 1) + Fp::make(7, 1)), BadScalar);
}

TEST_CASE("poly parse/print round trip") {
    auto ctx = lnk_ctx();
    PolyQ p = PolyQ::parse("3/2*kappa^2*lambda - 2*nu + 1", ctx);
    CHECK(p.str() == "3/2*kappa^2*lambda - 2*nu + 1");
    CHECK(PolyQ::parse(p.str(), ctx) == p);
    CHECK(PolyQ::parse("0", ctx).is_zero());
    CHECK(PolyQ::parse("-lambda", ctx).str() == "-lambda");
    CHECK_THROWS_AS(PolyQ::parse("lambda + ", ctx), BadScalar);
    CHECK_THROWS_AS(PolyQ::parse("bogus", ctx), BadScalar);
}

TEST_CASE("normalize: single substitution kappa^2 -> lambda*nu") {
    auto ctx = lnk_ctx();
    auto rules = kappa_rule(ctx);
    auto rctx = make_ctx<Rational>(ctx->vars, rules);

    PolyQ k2l = PolyQ::parse("kappa^2*lambda", ctx);
    CHECK(normalize(k2l, rules).str() == "lambda^2*nu");

    // apply twice: kappa^4 -> lambda^2*nu^2
    PolyQ k4 = PolyQ::parse("kappa^4", ctx);
    CHECK(normalize(k4, rules).str() == "lambda^2*nu^2");

    // the constraint's own normal form is zero
    PolyQ cons = PolyQ::parse("lambda*nu - kappa^2", ctx);
    CHECK(is_zero(cons, rules));
    CHECK_FALSE(cons.is_zero());
    // without rules it is nonzero: witness point lambda=nu=1, kappa=0
    CHECK(cons.eval({Rational(0), Rational(1), Rational(1)}) == Rational(1));

    // eager arithmetic in a rewrite context stays in normal form
    PolyQ k = PolyQ::var(rctx, "kappa");
    CHECK((k * k).str() == "lambda*nu");
}

TEST_CASE("normalize is idempotent") {
    auto ctx = lnk_ctx();
    auto rules = kappa_rule(ctx);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        PolyQ p = rand_poly(rng, ctx);
        PolyQ n1 = normalize(p, rules);
        PolyQ n2 = normalize(n1, rules);
        CHECK((n1 - n2).is_zero());
        // no monomial of the normal form is divisible by the rule lhs
        for (const auto& t : n1.terms()) CHECK_FALSE(rules[0].lhs.divides(t.m));
    }
}

TEST_CASE("overlapping rewrite rules are rejected") {
    auto ctx = lnk_ctx();
    RewriteRule<Rational> r1, r2;
    r1.lhs = Monomial::var(0, 2);                      // kappa^2
    r2.lhs = Monomial::var(0, 3);                      // kappa^3, divisible by kappa^2
    CHECK_THROWS_AS(make_ctx<Rational>(ctx->vars, {r1, r2}), OverlappingRules);

    RewriteRule<Rational> bad;
    bad.lhs = Monomial::var(1, 1);  // lambda -> lambda*nu is not decreasing
    PolyQ rhs = PolyQ::var(ctx, "lambda") * PolyQ::var(ctx, "nu");
    bad.rhs.assign(rhs.terms().begin(), rhs.terms().end());
    CHECK_THROWS_AS(make_ctx<Rational>(ctx->vars, {bad}), BadRewriteRule);
}

TEST_CASE("ring laws on randomized triples") {
    auto ctx = lnk_ctx();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        PolyQ a = rand_poly(rng, ctx), b = rand_poly(rng, ctx), c = rand_poly(rng, ctx);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("grid PIT soundness") {
    auto ctx = lnk_ctx();
    std::mt19937_64 rng(13);
    int nonzero_seen = 0;
    for (int i = 0; i < 200; ++i) {
        PolyQ p = rand_poly(rng, ctx);
        CHECK(grid_is_zero(p) == p.is_zero());
        if (!p.is_zero()) ++nonzero_seen;
    }
    CHECK(nonzero_seen > 100);
}

TEST_CASE("evaluation commutes with reduction mod p") {
    auto ctx = lnk_ctx();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> pt(-6, 6);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (int i = 0; i < 50; ++i) {
            PolyQ a = rand_poly(rng, ctx), b = rand_poly(rng, ctx);
            long x = pt(rng), y = pt(rng), z = pt(rng);
            auto evalq = [&](const PolyQ& q) {
                return q.eval({Rational(x), Rational(y), Rational(z)});
            };
            Rational rq = evalq(a * b + a - b);
            // integer-valued at integer points for integer-coefficient inputs
            REQUIRE(rq.denominator() == 1);
            long long rqll = static_cast<long long>(rq.numerator());
            Fp lhs = Fp::make(p, rqll);

            auto fp_poly = [&](const PolyQ& q) {
                std::vector<PTerm<Fp>> ts;
                for (const auto& t : q.terms()) {
                    REQUIRE(t.c.denominator() == 1);
                    ts.push_back({t.m, Fp::make(p, static_cast<long long>(t.c.numerator()))});
                }
                return PolyFp::from_terms(std::move(ts), make_ctx<Fp>(ctx->vars));
            };
            PolyFp am = fp_poly(a), bm = fp_poly(b);
            Fp rhs = (am * bm + am - bm)
                         .eval({Fp::make(p, x), Fp::make(p, y), Fp::make(p, z)});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("exact division") {
    auto ctx = lnk_ctx();
    PolyQ a = PolyQ::parse("lambda^2 - nu^2", ctx);
    PolyQ d = PolyQ::parse("lambda - nu", ctx);
    auto q = a.try_divide(d);
    REQUIRE(q.has_value());
    CHECK(q->str() == "lambda + nu");
    PolyQ nd = PolyQ::parse("lambda + kappa", ctx);
    CHECK_FALSE(PolyQ::parse("lambda*nu + 1", ctx).try_divide(nd).has_value());
}

TEST_CASE("scalar traits") {
    auto ctx = lnk_ctx();
    CHECK(scalar_is_symbolic_v<PolyQ>);
    CHECK_FALSE(scalar_is_symbolic_v<Fp>);
    CHECK_FALSE(scalar_is_symbolic_v<Rational>);
    PolyQ lam = PolyQ::var(ctx, "lambda");
    CHECK_FALSE(ScalarInfo<PolyQ>::is_constant(lam));
    CHECK_FALSE(try_invert(lam).has_value());
    auto inv = try_invert(PolyQ::parse("3/2", ctx));
    REQUIRE(inv.has_value());
    CHECK(inv->str() == "2/3");
}
