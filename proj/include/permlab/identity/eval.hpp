#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "permlab/identity/ast.hpp"
#include "permlab/perm.hpp"

namespace permlab::identity {

// Binding of DSL names to concrete structures. '*' is the first product,
// '@' the second; `cop1`/`cop2` expand the coproduct; unary calls apply the
// bound map of that name; binary calls pair through the bound form; `t1`/
// `t2` expand a bound rank-2 tensor constant.
template <class K>
struct EvalContext {
    const PermAlgebra<K>* product = nullptr;
    const PermAlgebra<K>* product2 = nullptr;
    const PermCoalgebra<K>* cop = nullptr;
    std::map<std::string, const LinearMap<K>*> maps;
    std::map<std::string, const BilinearForm<K>*> forms;
    std::map<std::string, const Tensor2<K>*> tensors;
    std::map<std::string, Space> var_space;
    Space default_space;

    Space space_of_var(const std::string& name) const {
        auto it = var_space.find(name);
        return it == var_space.end() ? default_space : it->second;
    }
};

namespace detail {

struct LegRef {
    std::string key;      // "cop:<printed inner>" or "ten:<name>"
    bool is_cop;
    int leg;              // 1 or 2
    ExprPtr inner;        // cop argument; null for tensors
    std::string ten_name;
};

inline bool is_leg_call(const Expr& e, bool& is_cop, int& leg) {
    if (e.kind != Kind::Call || e.args.size() != 1) return false;
    if (e.name == "cop1" || e.name == "cop2") {
        is_cop = true;
        leg = e.name == "cop1" ? 1 : 2;
        return true;
    }
    if (e.name == "t1" || e.name == "t2") {
        is_cop = false;
        leg = e.name == "t1" ? 1 : 2;
        return true;
    }
    return false;
}

// Collect free variables and leg references of one additive term. Both
// legs of one Sweedler expansion share their bound inner expression, so the
// recursion into an inner expression happens once per distinct key and the
// variables inside count once.
template <class K>
void scan_impl(const Expr& e, const EvalContext<K>& ctx, std::map<std::string, int>& vars,
               std::vector<LegRef>& legs, std::set<std::string>& visited) {
    bool is_cop = false;
    int leg = 0;
    if (is_leg_call(e, is_cop, leg)) {
        LegRef ref;
        ref.is_cop = is_cop;
        ref.leg = leg;
        if (is_cop) {
            ref.inner = e.args[0];
            ref.key = "cop:" + print_expr(*e.args[0]);
            if (visited.insert(ref.key).second) scan_impl(*e.args[0], ctx, vars, legs, visited);
        } else {
            if (e.args[0]->kind != Kind::Var)
                throw ParseError("tensor leg expects a bound tensor name", 0);
            ref.ten_name = e.args[0]->name;
            ref.key = "ten:" + ref.ten_name;
            if (!ctx.tensors.count(ref.ten_name))
                throw UnboundName("tensor '" + ref.ten_name + "' is not bound");
        }
        legs.push_back(std::move(ref));
        return;
    }
    switch (e.kind) {
        case Kind::Var:
            vars[e.name] += 1;
            break;
        case Kind::ScalarLit:
            break;
        default:
            for (const auto& a : e.args) scan_impl(*a, ctx, vars, legs, visited);
    }
}

template <class K>
void scan(const Expr& e, const EvalContext<K>& ctx, std::map<std::string, int>& vars,
          std::vector<LegRef>& legs) {
    std::set<std::string> visited;
    scan_impl(e, ctx, vars, legs, visited);
}

// A partially evaluated factor value: scalar coefficient plus 0..3 legs.
template <class K>
struct Val {
    K coeff{1};
    std::vector<std::pair<Space, Vec<K>>> legs;
    std::size_t rank() const { return legs.size(); }
};

template <class K>
struct TermEval {
    const EvalContext<K>& ctx;
    const std::map<std::string, std::pair<Space, Vec<K>>>& assignment;  // free vars
    std::map<std::string, std::pair<std::size_t, std::size_t>> leg_idx;  // key -> (p,q)

    Val<K> eval(const Expr& e) const {
        bool is_cop = false;
        int leg = 0;
        if (is_leg_call(e, is_cop, leg)) {
            std::string key = is_cop ? "cop:" + print_expr(*e.args[0]) : "ten:" + e.args[0]->name;
            auto it = leg_idx.find(key);
            if (it == leg_idx.end()) throw Error("internal: unexpanded leg " + key);
            std::size_t idx = leg == 1 ? it->second.first : it->second.second;
            Space sp = is_cop ? ctx.cop->space : (leg == 1 ? ctx.tensors.at(e.args[0]->name)->s1
                                                           : ctx.tensors.at(e.args[0]->name)->s2);
            Val<K> v;
            v.legs.push_back({sp, basis_vec<K>(sp.dim(), idx)});
            return v;
        }
        switch (e.kind) {
            case Kind::Var: {
                auto it = assignment.find(e.name);
                if (it == assignment.end()) throw UnboundName("variable '" + e.name + "' has no value");
                Val<K> v;
                v.legs.push_back(it->second);
                return v;
            }
            case Kind::ScalarLit: {
                Val<K> v;
                v.coeff = K(e.num);
                if (e.den != 1) {
                    auto inv = try_invert(K(e.den));
                    if (!inv) throw BadScalar("denominator not invertible in this scalar ring");
                    v.coeff = v.coeff * *inv;
                }
                return v;
            }
            case Kind::Call: {
                if (e.name == "tau") {
                    Val<K> v = eval(*e.args[0]);
                    if (v.rank() != 2) throw RankMismatch("tau needs a rank-2 argument");
                    std::swap(v.legs[0], v.legs[1]);
                    return v;
                }
                if (e.args.size() == 1) {
                    auto it = ctx.maps.find(e.name);
                    if (it == ctx.maps.end()) throw UnboundName("map '" + e.name + "' is not bound");
                    Val<K> v = eval(*e.args[0]);
                    if (v.rank() != 1) throw RankMismatch("map application needs a rank-1 argument");
                    require_same_space(it->second->domain, v.legs[0].first, "map application");
                    v.legs[0] = {it->second->codomain, it->second->m.apply(v.legs[0].second)};
                    return v;
                }
                if (e.args.size() == 2) {
                    auto it = ctx.forms.find(e.name);
                    if (it == ctx.forms.end()) throw UnboundName("form '" + e.name + "' is not bound");
                    Val<K> a = eval(*e.args[0]);
                    Val<K> b = eval(*e.args[1]);
                    if (a.rank() != 1 || b.rank() != 1)
                        throw RankMismatch("form pairing needs rank-1 arguments");
                    require_same_space(it->second->space, a.legs[0].first, "form pairing");
                    require_same_space(it->second->space, b.legs[0].first, "form pairing");
                    Val<K> v;
                    v.coeff = a.coeff * b.coeff * it->second->value(a.legs[0].second, b.legs[0].second);
                    return v;
                }
                throw UnboundName("cannot resolve call '" + e.name + "'");
            }
            case Kind::Mul: {
                Val<K> a = eval(*e.args[0]);
                Val<K> b = eval(*e.args[1]);
                if (a.rank() == 0 || b.rank() == 0) {
                    Val<K>& big = a.rank() == 0 ? b : a;
                    big.coeff = big.coeff * (a.rank() == 0 ? a.coeff : b.coeff);
                    return big;
                }
                if (a.rank() == 1 && b.rank() == 1) {
                    const PermAlgebra<K>* alg = e.name == "@" ? ctx.product2 : ctx.product;
                    if (!alg)
                        throw UnboundName(e.name == "@" ? "second product is not bound"
                                                        : "product is not bound");
                    require_same_space(alg->space, a.legs[0].first, "product");
                    require_same_space(alg->space, b.legs[0].first, "product");
                    Val<K> v;
                    v.coeff = a.coeff * b.coeff;
                    v.legs.push_back({alg->space, alg->multiply(a.legs[0].second, b.legs[0].second)});
                    return v;
                }
                throw RankMismatch("cannot multiply tensor-valued factors");
            }
            case Kind::Concat: {
                Val<K> a = eval(*e.args[0]);
                Val<K> b = eval(*e.args[1]);
                Val<K> v;
                v.coeff = a.coeff * b.coeff;
                v.legs = std::move(a.legs);
                for (auto& l : b.legs) v.legs.push_back(std::move(l));
                if (v.rank() > 3) throw RankMismatch("tensor rank above 3 is not supported");
                return v;
            }
            case Kind::Neg: {
                Val<K> v = eval(*e.args[0]);
                v.coeff = -v.coeff;
                return v;
            }
            case Kind::Sum: {
                // sums below the term level are supported for rank <= 1
                Val<K> first = eval(*e.args[0]);
                if (first.rank() == 0) {
                    K acc = first.coeff;
                    for (std::size_t i = 1; i < e.args.size(); ++i) {
                        Val<K> next = eval(*e.args[i]);
                        if (next.rank() != 0) throw RankMismatch("mixed ranks in a sum");
                        acc += next.coeff;
                    }
                    Val<K> v;
                    v.coeff = acc;
                    return v;
                }
                if (first.rank() == 1) {
                    Vec<K> acc = first.legs[0].second;
                    for (auto& x : acc) x = x * first.coeff;
                    for (std::size_t i = 1; i < e.args.size(); ++i) {
                        Val<K> next = eval(*e.args[i]);
                        if (next.rank() != 1) throw RankMismatch("mixed ranks in a sum");
                        require_same_space(first.legs[0].first, next.legs[0].first, "sum");
                        vec_add_scaled(acc, next.legs[0].second, next.coeff);
                    }
                    Val<K> v;
                    v.legs.push_back({first.legs[0].first, std::move(acc)});
                    return v;
                }
                throw RankMismatch("sums of tensor-valued factors are not supported inside a term");
            }
        }
        throw Error("internal: unhandled node");
    }
};

// Flatten a side into signed additive terms.
inline void split_terms(const ExprPtr& e, int sign, std::vector<std::pair<int, ExprPtr>>& out) {
    if (e->kind == Kind::Sum) {
        for (const auto& c : e->args) split_terms(c, sign, out);
    } else if (e->kind == Kind::Neg) {
        split_terms(e->args[0], -sign, out);
    } else {
        out.push_back({sign, e});
    }
}

}  // namespace detail

// Dense accumulator for the evaluated difference of one equation at one
// assignment of the free variables.
template <class K>
struct EvalResult {
    std::vector<Space> leg_spaces;
    std::vector<K> data;  // dense, row-major over the legs; rank 0 = single K

    std::size_t size() const { return data.size(); }

    static EvalResult scalar() {
        EvalResult r;
        r.data.assign(1, K(0));
        return r;
    }
};

template <class K>
class EquationEvaluator {
  public:
    EquationEvaluator(const Equation& eq, const EvalContext<K>& ctx) : eq_(eq), ctx_(ctx) { validate(); }

    const std::vector<std::string>& free_vars() const { return free_vars_; }

    // Evaluate LHS - RHS at an arbitrary assignment of vectors.
    EvalResult<K> eval_at(const std::map<std::string, std::pair<Space, Vec<K>>>& assignment) const {
        EvalResult<K> acc;
        bool first = true;
        accumulate(eq_.lhs, 1, assignment, acc, first);
        accumulate(eq_.rhs, -1, assignment, acc, first);
        if (first) acc = EvalResult<K>::scalar();
        return acc;
    }

    // Evaluate over all tuples of basis vectors and report.
    Report evaluate(const std::string& name) const {
        CheckAcc<K> acc(name);
        std::vector<Space> spaces;
        for (const auto& v : free_vars_) spaces.push_back(ctx_.space_of_var(v));
        std::vector<std::size_t> idx(free_vars_.size(), 0);
        while (true) {
            std::map<std::string, std::pair<Space, Vec<K>>> assignment;
            std::string where;
            for (std::size_t i = 0; i < free_vars_.size(); ++i) {
                assignment[free_vars_[i]] = {spaces[i], basis_vec<K>(spaces[i].dim(), idx[i])};
                if (!where.empty()) where += ",";
                where += free_vars_[i] + "=" + spaces[i].basis[idx[i]];
            }
            EvalResult<K> diff = eval_at(assignment);
            record(acc, where, diff);
            std::size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < spaces[pos].dim()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
            if (idx.empty()) break;
        }
        return acc.finish();
    }

  private:
    void validate() {
        std::vector<std::pair<int, ExprPtr>> lhs_terms, rhs_terms;
        detail::split_terms(eq_.lhs, 1, lhs_terms);
        detail::split_terms(eq_.rhs, 1, rhs_terms);
        std::set<std::string> lhs_vars, rhs_vars;
        auto check_side = [&](const std::vector<std::pair<int, ExprPtr>>& terms,
                              std::set<std::string>& side_vars, bool allow_zero) {
            for (const auto& [sign, term] : terms) {
                (void)sign;
                if (allow_zero && term->kind == Kind::ScalarLit && term->num == 0) continue;
                std::map<std::string, int> vars;
                std::vector<detail::LegRef> legs;
                detail::scan(*term, ctx_, vars, legs);
                for (const auto& [v, count] : vars) {
                    if (count != 1)
                        throw FreeVarMismatch("variable '" + v + "' must occur exactly once per term");
                    side_vars.insert(v);
                }
                std::map<std::string, int> leg_mask;
                for (const auto& l : legs) leg_mask[l.key] |= l.leg;
                for (const auto& [key, mask] : leg_mask)
                    if (mask != 3)
                        throw RankMismatch("both legs of '" + key + "' must occur in each term");
                if (ctx_.cop == nullptr)
                    for (const auto& l : legs)
                        if (l.is_cop) throw UnboundName("coproduct is not bound");
            }
        };
        check_side(lhs_terms, lhs_vars, true);
        check_side(rhs_terms, rhs_vars, true);
        // a pure-zero side imposes no variable constraints
        bool lhs_zero = lhs_terms.size() == 1 && lhs_terms[0].second->kind == Kind::ScalarLit &&
                        lhs_terms[0].second->num == 0;
        bool rhs_zero = rhs_terms.size() == 1 && rhs_terms[0].second->kind == Kind::ScalarLit &&
                        rhs_terms[0].second->num == 0;
        if (!lhs_zero && !rhs_zero && lhs_vars != rhs_vars)
            throw FreeVarMismatch("sides use different free variables in '" + eq_.text + "'");
        const std::set<std::string>& vars = lhs_zero ? rhs_vars : lhs_vars;
        free_vars_.assign(vars.begin(), vars.end());
    }

    void accumulate(const ExprPtr& side, int sign,
                    const std::map<std::string, std::pair<Space, Vec<K>>>& assignment, EvalResult<K>& acc,
                    bool& first) const {
        std::vector<std::pair<int, ExprPtr>> terms;
        detail::split_terms(side, sign, terms);
        for (const auto& [s, term] : terms) {
            if (term->kind == Kind::ScalarLit && term->num == 0) continue;
            eval_term(*term, s, assignment, acc, first);
        }
    }

    void eval_term(const Expr& term, int sign,
                   const std::map<std::string, std::pair<Space, Vec<K>>>& assignment, EvalResult<K>& acc,
                   bool& first) const {
        std::map<std::string, int> vars;
        std::vector<detail::LegRef> legs;
        detail::scan(term, ctx_, vars, legs);
        std::map<std::string, detail::LegRef> keys;
        for (const auto& l : legs)
            if (!keys.count(l.key)) keys[l.key] = l;
        detail::TermEval<K> te{ctx_, assignment, {}};
        expand(term, sign, keys, te, K(1), assignment, acc, first);
    }

    // Recursively expand unassigned Sweedler/tensor legs, then add the
    // fully expanded term into the accumulator.
    void expand(const Expr& term, int sign, std::map<std::string, detail::LegRef> pending,
                detail::TermEval<K>& te, K weight,
                const std::map<std::string, std::pair<Space, Vec<K>>>& assignment, EvalResult<K>& acc,
                bool& first) const {
        if (pending.empty()) {
            detail::Val<K> v = te.eval(term);
            add_val(v, sign, weight, acc, first);
            return;
        }
        // pick a ready key: all leg refs inside its inner expression are
        // already assigned
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            const detail::LegRef& ref = it->second;
            if (ref.is_cop) {
                std::map<std::string, int> ivars;
                std::vector<detail::LegRef> ilegs;
                detail::scan(*ref.inner, ctx_, ivars, ilegs);
                bool ready = true;
                for (const auto& l : ilegs)
                    if (!te.leg_idx.count(l.key)) ready = false;
                if (!ready) continue;
                detail::Val<K> inner = te.eval(*ref.inner);
                if (inner.rank() != 1) throw RankMismatch("coproduct leg needs a rank-1 argument");
                require_same_space(ctx_.cop->space, inner.legs[0].first, "coproduct leg");
                std::map<std::string, detail::LegRef> rest = pending;
                rest.erase(it->first);
                std::size_t n = ctx_.cop->space.dim();
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        K w(0);
                        for (std::size_t i2 = 0; i2 < n; ++i2)
                            w += inner.legs[0].second[i2] * ctx_.cop->at(i2, p, q);
                        w = w * inner.coeff;
                        if (kzero(w)) continue;
                        te.leg_idx[it->first] = {p, q};
                        expand(term, sign, rest, te, weight * w, assignment, acc, first);
                    }
                te.leg_idx.erase(it->first);
                return;
            }
            const Tensor2<K>& t = *ctx_.tensors.at(ref.ten_name);
            std::map<std::string, detail::LegRef> rest = pending;
            rest.erase(it->first);
            for (std::size_t p = 0; p < t.s1.dim(); ++p)
                for (std::size_t q = 0; q < t.s2.dim(); ++q) {
                    const K& w = t.at(p, q);
                    if (kzero(w)) continue;
                    te.leg_idx[it->first] = {p, q};
                    expand(term, sign, rest, te, weight * w, assignment, acc, first);
                }
            te.leg_idx.erase(it->first);
            return;
        }
        throw Error("internal: circular Sweedler leg dependency");
    }

    void add_val(const detail::Val<K>& v, int sign, const K& weight, EvalResult<K>& acc, bool& first) const {
        K coeff = v.coeff * weight;
        if (sign < 0) coeff = -coeff;
        if (first) {
            acc.leg_spaces.clear();
            std::size_t total = 1;
            for (const auto& [sp, vec] : v.legs) {
                acc.leg_spaces.push_back(sp);
                total *= vec.size();
            }
            acc.data.assign(total, K(0));
            first = false;
        } else {
            if (acc.leg_spaces.size() != v.rank()) throw RankMismatch("terms have different tensor ranks");
            for (std::size_t i = 0; i < v.rank(); ++i)
                require_same_space(acc.leg_spaces[i], v.legs[i].first, "term leg space");
        }
        // dense outer product accumulation
        if (v.rank() == 0) {
            if (!kzero(coeff)) acc.data[0] += coeff;
            return;
        }
        for (std::size_t flat = 0; flat < acc.data.size(); ++flat) {
            K val = coeff;
            std::size_t rem = flat;
            for (std::size_t i = v.rank(); i-- > 0;) {
                std::size_t sz = v.legs[i].second.size();
                val = val * v.legs[i].second[rem % sz];
                rem /= sz;
            }
            if (!kzero(val)) acc.data[flat] += val;
        }
    }

    void record(CheckAcc<K>& acc, const std::string& where, const EvalResult<K>& diff) const {
        if (diff.leg_spaces.empty()) {
            acc.add(where, diff.data[0]);
            return;
        }
        std::vector<std::size_t> idx(diff.leg_spaces.size(), 0);
        for (std::size_t flat = 0; flat < diff.data.size(); ++flat) {
            std::string at = where + " @(";
            std::size_t rem = flat;
            std::vector<std::size_t> coords(diff.leg_spaces.size());
            for (std::size_t i = diff.leg_spaces.size(); i-- > 0;) {
                coords[i] = rem % diff.leg_spaces[i].dim();
                rem /= diff.leg_spaces[i].dim();
            }
            for (std::size_t i = 0; i < coords.size(); ++i) {
                if (i) at += ",";
                at += diff.leg_spaces[i].basis[coords[i]];
            }
            at += ")";
            acc.add(at, diff.data[flat]);
        }
        (void)idx;
    }

    Equation eq_;
    const EvalContext<K>& ctx_;
    std::vector<std::string> free_vars_;
};

// Parse and evaluate one equation against a context.
template <class K>
Report evaluate(const Equation& eq, const EvalContext<K>& ctx, const std::string& name) {
    EquationEvaluator<K> ev(eq, ctx);
    return ev.evaluate(name);
}

template <class K>
Report evaluate_lines(const std::vector<std::string>& lines, const EvalContext<K>& ctx,
                      const std::string& name) {
    std::vector<Report> parts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Equation eq = parse(lines[i]);
        parts.push_back(evaluate(eq, ctx, name + "[" + std::to_string(i + 1) + "]"));
    }
    return Report::combine(name, std::move(parts));
}

}  // namespace permlab::identity
