#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/fp.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Exponent vector over the context's parameter list; trailing zeros trimmed
// so a constant is the empty vector. Ordered graded-lexicographically over
// the declaration order.
struct Monomial {
    std::vector<std::uint32_t> e;

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return e.empty(); }

    void trim() {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    static Monomial var(std::size_t idx, std::uint32_t pow = 1) {
        Monomial m;
        m.e.assign(idx + 1, 0);
        m.e[idx] = pow;
        m.trim();
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.e.resize(std::max(a.e.size(), b.e.size()), 0);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] += a.e[i];
        for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        if (e.size() > m.e.size()) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    // Quotient m / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& m) const {
        Monomial r = m;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        r.trim();
        return r;
    }

    // Graded lex: total degree first, then earlier variables dominate.
    static int cmp(const Monomial& a, const Monomial& b) {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        std::size_t n = std::max(a.e.size(), b.e.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t xa = i < a.e.size() ? a.e[i] : 0;
            std::uint32_t xb = i < b.e.size() ? b.e[i] : 0;
            if (xa != xb) return xa < xb ? -1 : 1;
        }
        return 0;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return cmp(a, b) == 0; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }
};

template <class C>
struct PTerm {
    Monomial m;
    C c;
};

// lhs -> rhs with every rhs monomial strictly below lhs in the monomial
// order; rule sets with pairwise non-overlapping lhs are confluent for free.
template <class C>
struct RewriteRule {
    Monomial lhs;
    std::vector<PTerm<C>> rhs;
};

template <class C>
struct PolyCtx {
    std::vector<std::string> vars;
    std::vector<RewriteRule<C>> rules;

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        for (std::size_t i = 0; i < rules.size(); ++i) {
            if (rules[i].lhs.is_one()) throw BadRewriteRule("rewrite lhs must be a non-constant monomial");
            for (const auto& t : rules[i].rhs)
                if (Monomial::cmp(t.m, rules[i].lhs) >= 0)
                    throw BadRewriteRule("rewrite rhs must be strictly smaller than lhs");
            for (std::size_t j = 0; j < rules.size(); ++j)
                if (i != j && rules[i].lhs.divides(rules[j].lhs))
                    throw OverlappingRules("rewrite lhs monomials overlap");
        }
    }
};

template <class C>
using PolyCtxPtr = std::shared_ptr<const PolyCtx<C>>;

template <class C>
PolyCtxPtr<C> make_ctx(std::vector<std::string> vars, std::vector<RewriteRule<C>> rules = {}) {
    auto ctx = std::make_shared<PolyCtx<C>>();
    ctx->vars = std::move(vars);
    ctx->rules = std::move(rules);
    ctx->validate();
    return ctx;
}

// Sparse multivariate polynomial over C, kept in normal form with respect to
// the context's rewrite rules. Terms are stored leading-monomial-first.
template <class C>
class Poly {
  public:
    Poly() = default;
    Poly(long n) {  // NOLINT: implicit constant
        C c(n);
        if (!c.is_zero()) terms_.push_back({Monomial{}, c});
    }

    static Poly constant(C c, PolyCtxPtr<C> ctx = nullptr) {
        Poly p;
        p.ctx_ = std::move(ctx);
        if (!c.is_zero()) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }

    static Poly var(const PolyCtxPtr<C>& ctx, const std::string& name) {
        int idx = ctx ? ctx->var_index(name) : -1;
        if (idx < 0) throw BadScalar("unknown parameter '" + name + "'");
        Poly p;
        p.ctx_ = ctx;
        p.terms_.push_back({Monomial::var(static_cast<std::size_t>(idx)), C(1)});
        p.reduce();
        return p;
    }

    static Poly from_terms(std::vector<PTerm<C>> ts, PolyCtxPtr<C> ctx) {
        Poly p;
        p.ctx_ = std::move(ctx);
        p.terms_ = std::move(ts);
        p.combine();
        p.reduce();
        return p;
    }

    const PolyCtxPtr<C>& ctx() const { return ctx_; }
    const std::vector<PTerm<C>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw BadScalar("polynomial is not constant: " + str());
        return terms_[0].c;
    }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.ctx_ = merge_ctx(a, b);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        r.terms_ = a.terms_;
        for (const auto& t : b.terms_) r.terms_.push_back(t);
        r.combine();
        // addition of normal forms cannot create reducible monomials
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        r.ctx_ = merge_ctx(a, b);
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                r.terms_.push_back({ta.m * tb.m, ta.c * tb.c});
        r.combine();
        r.reduce();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division; returns nullopt if the quotient does not exist in the
    // ring. The candidate quotient is verified by multiplying back, which
    // keeps the answer sound under rewrite rules.
    std::optional<Poly> try_divide(const Poly& d) const {
        if (d.is_zero()) return std::nullopt;
        if (d.is_constant()) {
            auto inv = invert_coeff(d.terms_[0].c);
            if (!inv) return std::nullopt;
            return *this * Poly::constant(*inv, merge_ctx(*this, d));
        }
        Poly rem = *this;
        Poly quot = Poly::constant(C(0), merge_ctx(*this, d));
        const auto& dl = d.terms_[0];
        auto dlc_inv = invert_coeff(dl.c);
        if (!dlc_inv) return std::nullopt;
        while (!rem.is_zero()) {
            const auto& rl = rem.terms_[0];
            if (!dl.m.divides(rl.m)) return std::nullopt;
            Poly t;
            t.ctx_ = quot.ctx_;
            t.terms_.push_back({dl.m.divide_into(rl.m), rl.c * *dlc_inv});
            quot = quot + t;
            rem = rem - t * d;
        }
        if (!(quot * d == *this)) return std::nullopt;
        return quot;
    }

    // Substitute coefficients for every parameter; entries beyond the point
    // vector evaluate as 0.
    C eval(const std::vector<C>& point) const {
        C acc(0);
        for (const auto& t : terms_) {
            C v = t.c;
            for (std::size_t i = 0; i < t.m.e.size(); ++i) {
                C x = i < point.size() ? point[i] : C(0);
                for (std::uint32_t k = 0; k < t.m.e[i]; ++k) v = v * x;
            }
            acc = acc + v;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = t.c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = mono_str(t.m);
            if (mono.empty()) {
                out += mag;
            } else if (mag == "1") {
                out += mono;
            } else {
                out += mag + "*" + mono;
            }
        }
        return out;
    }

    static Poly parse(const std::string& text, const PolyCtxPtr<C>& ctx);

  private:
    static PolyCtxPtr<C> merge_ctx(const Poly& a, const Poly& b) {
        if (!a.ctx_) return b.ctx_;
        if (!b.ctx_) return a.ctx_;
        if (a.ctx_ == b.ctx_) return a.ctx_;
        if (a.ctx_->vars == b.ctx_->vars) return a.ctx_;
        throw BadScalar("mixing polynomials from different parameter contexts");
    }

    static std::optional<C> invert_coeff(const C& c) {
        if (c.is_zero()) return std::nullopt;
        return C(1) / c;
    }

    std::string mono_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ctx_ ? ctx_->vars[i] : ("x" + std::to_string(i));
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    // Sort descending, merge equal monomials, drop zeros.
    void combine() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const PTerm<C>& a, const PTerm<C>& b) { return Monomial::cmp(a.m, b.m) > 0; });
        std::vector<PTerm<C>> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c += t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else if (!t.c.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    // Apply the context rules to fixpoint. Non-overlapping lhs make the
    // result independent of application order; termination follows from the
    // rhs-below-lhs invariant.
    void reduce() {
        if (!ctx_ || ctx_->rules.empty()) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                for (const auto& rule : ctx_->rules) {
                    if (!rule.lhs.divides(terms_[i].m)) continue;
                    Monomial rest = rule.lhs.divide_into(terms_[i].m);
                    C coeff = terms_[i].c;
                    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
                    for (const auto& rt : rule.rhs)
                        terms_.push_back({rest * rt.m, coeff * rt.c});
                    combine();
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }

    PolyCtxPtr<C> ctx_;
    std::vector<PTerm<C>> terms_;
};

// --- parsing -----------------------------------------------------------

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::string scan_ident(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
}

inline std::string scan_number(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
        std::size_t save = i;
        ++i;
        std::size_t den = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den) i = save;
    }
    return s.substr(start, i - start);
}

template <class C>
C coeff_from_string(const std::string& s);

template <>
inline Rational coeff_from_string<Rational>(const std::string& s) { return Rational::parse(s); }

template <>
inline Fp coeff_from_string<Fp>(const std::string& s) {
    // Integer literals only; reduced when attached to a modulus downstream.
    bool neg = !s.empty() && s[0] == '-';
    std::size_t i = neg ? 1 : 0;
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw BadScalar("bad F_p literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return Fp(neg ? -v : v);
}

}  // namespace detail

// Grammar: poly := ['-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := number | ident ['^' uint]
template <class C>
Poly<C> Poly<C>::parse(const std::string& text, const PolyCtxPtr<C>& ctx) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    Poly<C> acc = Poly<C>::constant(C(0), ctx);
    bool expect_term = true;
    int sign = 1;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (true) {
        detail::skip_ws(text, i);
        if (i >= text.size()) {
            if (expect_term) throw BadScalar("empty term in scalar '" + text + "'");
            break;
        }
        // one term
        Poly<C> term = Poly<C>::constant(C(1), ctx);
        bool any_factor = false;
        while (true) {
            detail::skip_ws(text, i);
            if (i >= text.size()) break;
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = detail::scan_number(text, i);
                term = term * Poly<C>::constant(detail::coeff_from_string<C>(num), ctx);
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = detail::scan_ident(text, i);
                std::uint32_t pow = 1;
                detail::skip_ws(text, i);
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    detail::skip_ws(text, i);
                    std::size_t start = i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    if (i == start) throw BadScalar("missing exponent in scalar '" + text + "'");
                    pow = static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start)));
                }
                Poly<C> v = Poly<C>::var(ctx, name);
                for (std::uint32_t k = 0; k < pow; ++k) term = term * v;
                any_factor = true;
            } else {
                break;
            }
            detail::skip_ws(text, i);
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_factor) throw BadScalar("bad scalar literal '" + text + "'");
        if (sign < 0) term = -term;
        acc = acc + term;
        expect_term = false;
        detail::skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            expect_term = true;
            continue;
        }
        throw BadScalar("trailing characters in scalar '" + text + "'");
    }
    return acc;
}

// normalize(p, rules): re-normalize against an explicit rule set. With the
// eager representation this re-wraps p in a context carrying the rules.
template <class C>
Poly<C> normalize(const Poly<C>& p, std::vector<RewriteRule<C>> rules) {
    std::vector<std::string> vars = p.ctx() ? p.ctx()->vars : std::vector<std::string>{};
    auto ctx = make_ctx<C>(vars, std::move(rules));
    std::vector<PTerm<C>> ts(p.terms().begin(), p.terms().end());
    return Poly<C>::from_terms(std::move(ts), ctx);
}

template <class C>
bool is_zero(const Poly<C>& p, const std::vector<RewriteRule<C>>& rules) {
    return normalize(p, rules).is_zero();
}

// Independent polynomial-identity-testing oracle: a polynomial of total
// degree d in k parameters vanishes identically iff it vanishes on the
// (d+1)^k integer grid {0..d}^k.
inline bool grid_is_zero(const Poly<Rational>& p) {
    if (p.is_zero()) return true;
    std::size_t k = p.ctx() ? p.ctx()->vars.size() : 0;
    std::uint64_t d = p.total_degree();
    std::vector<Rational> point(k, Rational(0));
    std::vector<std::uint64_t> idx(k, 0);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) point[i] = Rational(static_cast<long>(idx[i]));
        if (!p.eval(point).is_zero()) return false;
        std::size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] <= d) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return true;
}

using PolyQ = Poly<Rational>;
using PolyFp = Poly<Fp>;

}  // namespace permlab
