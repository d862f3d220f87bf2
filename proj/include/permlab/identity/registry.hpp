#pragma once

#include <string>
#include <vector>

#include "permlab/bialgebra.hpp"
#include "permlab/identity/eval.hpp"
#include "permlab/symplectic.hpp"

namespace permlab::identity {

// Builtin identity checks. Every entry has a hand-coded evaluator over
// structure constants; entries whose statement fits the one-space DSL also
// carry DSL source lines, and the two routes must agree (the DSL evaluator
// is the independent oracle for the hand-coded path).
//
// Conventions for bundle-level checking: action identities are instantiated
// on the adjoint representation of the bound product ('*', with '@' the
// second product and alpha/beta the bound maps A and b); operator-transport
// identities bind T = r# on the dual space with Sd = S* and A2 = alpha*.
enum class IdentityId {
    PERM, COPERM, REP_R, REP_L, HOM_REP,
    LIN_COMB_ALG, LIN_COMB_REP,
    RL_PRODUCT, NIJ_HOM, RL_L, RL_L2, RL_R, RL_R2,
    NIJ, NIJREP_L, NIJREP_R, ADMREP_L, ADMREP_R, ADM_1, ADM_2,
    MP, FROB, FROB_SKEW_ID, NIJ_CO, BIALG, NADM_CO_1, NADM_CO_2,
    COB_1, COB_2, COB_3, COB_4, COB_5, COB_6,
    PYBE, RS_COMPAT, NH_1, NH_2, NH_3,
    LPQ_1, LPQ_2, LPQ_3,
    THX_OP, THX_TWIST, OOP, OOP_TW, FV_A, FV_B,
    ADJ, MANIN_ADJ, QT1, QT2,
    COYBE, OMEGA_PROD, DQT1, DQT2, SYMP, COSYMP, CQT_SYM,
};

struct IdentityInfo {
    IdentityId id;
    const char* name;
    std::vector<std::string> dsl;     // empty when not expressible in the DSL
    std::vector<std::string> slots;   // consumed context slots
};

inline const std::vector<IdentityInfo>& registry() {
    static const std::vector<IdentityInfo> table = [] {
        std::vector<IdentityInfo> t;
        auto add = [&](IdentityId id, const char* name, std::vector<std::string> slots,
                       std::vector<std::string> dsl) {
            t.push_back({id, name, std::move(dsl), std::move(slots)});
        };
        add(IdentityId::PERM, "PERM", {"product"},
            {"(x*y)*z == x*(y*z)", "(x*y)*z == x*(z*y)", "x*(y*z) == x*(z*y)"});
        add(IdentityId::COPERM, "COPERM", {"cop"},
            {"cop1(cop1(x)) ox cop2(cop1(x)) ox cop2(x) == cop1(x) ox cop1(cop2(x)) ox cop2(cop2(x))",
             "cop1(cop1(x)) ox cop2(cop1(x)) ox cop2(x) == cop1(x) ox cop2(cop2(x)) ox cop1(cop2(x))",
             "cop1(x) ox cop1(cop2(x)) ox cop2(cop2(x)) == cop1(x) ox cop2(cop2(x)) ox cop1(cop2(x))"});
        add(IdentityId::REP_R, "REP_R", {"product"},
            {"v*(x*y) == (v*x)*y", "v*(x*y) == (v*y)*x", "(v*x)*y == (v*y)*x"});
        add(IdentityId::REP_L, "REP_L", {"product"},
            {"(x*y)*v == x*(y*v)", "(x*y)*v == x*(v*y)", "(x*y)*v == (x*v)*y",
             "x*(y*v) == x*(v*y)", "x*(y*v) == (x*v)*y", "x*(v*y) == (x*v)*y"});
        add(IdentityId::HOM_REP, "HOM_REP", {"product", "product2", "phi", "f"},
            {"f(x*v) == phi(x)@f(v)", "f(v*x) == f(v)@phi(x)", "phi(x*y) == phi(x)@phi(y)"});
        add(IdentityId::LIN_COMB_ALG, "LIN_COMB_ALG", {"product", "product2"},
            {"(x@y)*z + (x*y)@z == x*(y@z) + x@(y*z)", "(x@y)*z + (x*y)@z == x*(z@y) + x@(z*y)",
             "x*(y@z) + x@(y*z) == x*(z@y) + x@(z*y)"});
        add(IdentityId::LIN_COMB_REP, "LIN_COMB_REP", {"product", "product2"},
            {"(x@y)*u + (x*y)@u == x*(y@u) + x@(y*u)", "(x@y)*u + (x*y)@u == x*(u@y) + x@(u*y)",
             "(x@y)*u + (x*y)@u == (x@u)*y + (x*u)@y", "u*(x@y) + u@(x*y) == (u@y)*x + (u*y)@x",
             "u*(x@y) + u@(x*y) == (u@x)*y + (u*x)@y"});
        add(IdentityId::RL_PRODUCT, "RL_PRODUCT", {"product", "product2", "N"},
            {"x@y == N(x)*y + x*N(y) - N(x*y)"});
        add(IdentityId::NIJ_HOM, "NIJ_HOM", {"product", "product2", "N"},
            {"N(x@y) == N(x)*N(y)"});
        add(IdentityId::RL_L, "RL_L", {"product", "product2", "N", "A"},
            {"x@v == N(x)*v + x*A(v) - A(x*v)"});
        add(IdentityId::RL_L2, "RL_L2", {"product", "product2", "N", "A"},
            {"N(x)*A(v) == A(x@v)"});
        add(IdentityId::RL_R, "RL_R", {"product", "product2", "N", "A"},
            {"v@x == v*N(x) + A(v)*x - A(v*x)"});
        add(IdentityId::RL_R2, "RL_R2", {"product", "product2", "N", "A"},
            {"A(v)*N(x) == A(v@x)"});
        add(IdentityId::NIJ, "NIJ", {"product", "N"},
            {"N(x)*N(y) + N(N(x*y)) == N(N(x)*y) + N(x*N(y))"});
        add(IdentityId::NIJREP_L, "NIJREP_L", {"product", "N", "A"},
            {"N(x)*A(v) + A(A(x*v)) == A(N(x)*v) + A(x*A(v))"});
        add(IdentityId::NIJREP_R, "NIJREP_R", {"product", "N", "A"},
            {"A(v)*N(x) + A(A(v*x)) == A(v*N(x)) + A(A(v)*x)"});
        add(IdentityId::ADMREP_L, "ADMREP_L", {"product", "N", "b"},
            {"b(N(x)*u) + x*b(b(u)) - N(x)*b(u) - b(x*b(u)) == 0"});
        add(IdentityId::ADMREP_R, "ADMREP_R", {"product", "N", "b"},
            {"b(u*N(x)) + b(b(u))*x - b(u)*N(x) - b(b(u)*x) == 0"});
        add(IdentityId::ADM_1, "ADM_1", {"product", "N", "S"},
            {"S(N(x)*y) + x*S(S(y)) - N(x)*S(y) - S(x*S(y)) == 0"});
        add(IdentityId::ADM_2, "ADM_2", {"product", "N", "S"},
            {"S(x*N(y)) + S(S(x))*y - S(x)*N(y) - S(S(x)*y) == 0"});
        add(IdentityId::MP, "MP", {"product", "cop"}, {});
        add(IdentityId::FROB, "FROB", {"product", "B"},
            {"B(x*y,z) == B(y,z*x) - B(y,x*z)"});
        add(IdentityId::FROB_SKEW_ID, "FROB_SKEW_ID", {"product", "B"},
            {"B(x*y,z) == B(x,z*y)"});
        add(IdentityId::NIJ_CO, "NIJ_CO", {"cop", "S"},
            {"S(cop1(x)) ox S(cop2(x)) + cop1(S(S(x))) ox cop2(S(S(x))) == "
             "S(cop1(S(x))) ox cop2(S(x)) + cop1(S(x)) ox S(cop2(S(x)))"});
        add(IdentityId::BIALG, "BIALG", {"product", "cop"},
            {// antisymmetrized chain, pairwise
             "cop1(x*y) ox cop2(x*y) - cop2(x*y) ox cop1(x*y) == "
             "cop1(y*x) ox cop2(y*x) - cop2(y*x) ox cop1(y*x)",
             "cop1(x*y) ox cop2(x*y) - cop2(x*y) ox cop1(x*y) == "
             "cop1(x)*y ox cop2(x) - cop2(x)*y ox cop1(x) + cop1(y) ox cop2(y)*x - cop2(y) ox cop1(y)*x",
             "cop1(y*x) ox cop2(y*x) - cop2(y*x) ox cop1(y*x) == "
             "cop1(x)*y ox cop2(x) - cop2(x)*y ox cop1(x) + cop1(y) ox cop2(y)*x - cop2(y) ox cop1(y)*x",
             // main chain, pairwise
             "cop1(x*y) ox cop2(x*y) == "
             "x*cop1(y) ox cop2(y) + cop1(x) ox cop2(x)*y - cop1(x) ox y*cop2(x)",
             "cop1(x*y) ox cop2(x*y) == "
             "x*cop1(y) ox cop2(y) - x*cop2(y) ox cop1(y) + cop1(x) ox cop2(x)*y",
             "cop1(x*y) ox cop2(x*y) == "
             "cop1(x)*y ox cop2(x) + cop1(y) ox cop2(y)*x - cop1(y) ox x*cop2(y) - cop2(y) ox cop1(y)*x "
             "+ cop2(y) ox x*cop1(y)",
             "x*cop1(y) ox cop2(y) + cop1(x) ox cop2(x)*y - cop1(x) ox y*cop2(x) == "
             "x*cop1(y) ox cop2(y) - x*cop2(y) ox cop1(y) + cop1(x) ox cop2(x)*y",
             "x*cop1(y) ox cop2(y) + cop1(x) ox cop2(x)*y - cop1(x) ox y*cop2(x) == "
             "cop1(x)*y ox cop2(x) + cop1(y) ox cop2(y)*x - cop1(y) ox x*cop2(y) - cop2(y) ox cop1(y)*x "
             "+ cop2(y) ox x*cop1(y)",
             "x*cop1(y) ox cop2(y) - x*cop2(y) ox cop1(y) + cop1(x) ox cop2(x)*y == "
             "cop1(x)*y ox cop2(x) + cop1(y) ox cop2(y)*x - cop1(y) ox x*cop2(y) - cop2(y) ox cop1(y)*x "
             "+ cop2(y) ox x*cop1(y)"});
        add(IdentityId::NADM_CO_1, "NADM_CO_1", {"cop", "N", "S"},
            {"S(cop1(N(x))) ox cop2(N(x)) + cop1(x) ox N(N(cop2(x))) == "
             "S(cop1(x)) ox N(cop2(x)) + cop1(N(x)) ox N(cop2(N(x)))"});
        add(IdentityId::NADM_CO_2, "NADM_CO_2", {"cop", "N", "S"},
            {"cop1(N(x)) ox S(cop2(N(x))) + N(N(cop1(x))) ox cop2(x) == "
             "N(cop1(x)) ox S(cop2(x)) + N(cop1(N(x))) ox cop2(N(x))"});
        add(IdentityId::COB_1, "COB_1", {"product", "r"}, {});
        add(IdentityId::COB_2, "COB_2", {"product", "r"}, {});
        add(IdentityId::COB_3, "COB_3", {"product", "r"}, {});
        add(IdentityId::COB_4, "COB_4", {"product", "r"}, {});
        add(IdentityId::COB_5, "COB_5", {"product", "r"}, {});
        add(IdentityId::COB_6, "COB_6", {"product", "r"}, {});
        add(IdentityId::PYBE, "PYBE", {"product", "r"}, {});
        add(IdentityId::RS_COMPAT, "RS_COMPAT", {"r", "N", "S"},
            {"S(t1(r)) ox t2(r) == t1(r) ox N(t2(r))"});
        add(IdentityId::NH_1, "NH_1", {"product", "N", "S", "r"},
            {"S(t1(r)) ox S(x*t2(r)) - t1(r) ox S(x*N(t2(r))) - S(t1(r)) ox S(t2(r)*x) "
             "+ t1(r) ox S(N(t2(r))*x) - S(t1(r)) ox S(x)*t2(r) + t1(r) ox S(x)*N(t2(r)) "
             "+ S(t1(r)) ox t2(r)*S(x) - t1(r) ox N(t2(r))*S(x) + S(x)*N(t1(r)) ox t2(r) "
             "- S(x)*t1(r) ox S(t2(r)) - S(x*N(t1(r))) ox t2(r) + S(x*t1(r)) ox S(t2(r)) == 0"});
        add(IdentityId::NH_2, "NH_2", {"product", "N", "S", "r"},
            {"t1(r) ox N(x)*S(t2(r)) - N(t1(r)) ox N(x)*t2(r) + N(x)*t1(r) ox S(t2(r)) "
             "- N(x)*N(t1(r)) ox t2(r) + t1(r) ox S(x*S(t2(r))) - N(t1(r)) ox S(x*t2(r)) "
             "- t1(r) ox S(S(t2(r))*x) + N(t1(r)) ox S(t2(r)*x) - t1(r) ox S(t2(r))*N(x) "
             "+ N(t1(r)) ox t2(r)*N(x) - N(x*t1(r)) ox S(t2(r)) + N(x*N(t1(r))) ox t2(r) "
             "+ t1(r) ox S(S(t2(r)))*x - N(N(t1(r))) ox t2(r)*x - t1(r) ox x*S(S(t2(r))) "
             "+ N(N(t1(r))) ox x*t2(r) == 0"});
        add(IdentityId::NH_3, "NH_3", {"product", "N", "S", "r"},
            {"S(t1(r)) ox N(x)*t2(r) - t1(r) ox N(x)*N(t2(r)) + N(x)*S(t1(r)) ox t2(r) "
             "- N(x)*t1(r) ox N(t2(r)) + S(x*S(t1(r))) ox t2(r) - S(x*t1(r)) ox N(t2(r)) "
             "- S(t1(r)) ox t2(r)*N(x) + t1(r) ox N(t2(r))*N(x) - S(t1(r)) ox N(x*t2(r)) "
             "+ t1(r) ox N(x*N(t2(r))) + S(t1(r)) ox N(t2(r)*x) - t1(r) ox N(N(t2(r))*x) "
             "+ x*t1(r) ox N(N(t2(r))) - x*S(S(t1(r))) ox t2(r) == 0"});
        add(IdentityId::LPQ_1, "LPQ_1", {"r", "N", "S"},
            {"t1(r) ox N(N(t2(r))) == S(S(t1(r))) ox t2(r)"});
        add(IdentityId::LPQ_2, "LPQ_2", {"r", "N", "S"},
            {"N(N(t1(r))) ox t2(r) == t1(r) ox S(S(t2(r)))"});
        add(IdentityId::LPQ_3, "LPQ_3", {"r", "N", "S"},
            {"N(t1(r)) ox t2(r) == t1(r) ox S(t2(r))"});
        add(IdentityId::THX_OP, "THX_OP", {"product", "r"}, {});
        add(IdentityId::THX_TWIST, "THX_TWIST", {"product", "r", "N", "S"},
            {"N(T(u)) == T(Sd(u))"});
        add(IdentityId::OOP, "OOP", {"product", "r"}, {});
        add(IdentityId::OOP_TW, "OOP_TW", {"product", "r", "N", "S"},
            {"N(T(u)) == T(A2(u))"});
        add(IdentityId::FV_A, "FV_A", {"product", "N", "S", "A", "b"},
            {"b(x*A(u)) + S(S(x))*u == S(x)*A(u) + b(S(x)*u)"});
        add(IdentityId::FV_B, "FV_B", {"product", "N", "S", "A", "b"},
            {"b(A(u)*x) + u*S(S(x)) == A(u)*S(x) + b(u*S(x))"});
        add(IdentityId::ADJ, "ADJ", {"B", "N", "Nh"}, {"B(N(x),y) == B(x,Nh(y))"});
        add(IdentityId::MANIN_ADJ, "MANIN_ADJ", {"product", "cop", "N", "S"}, {});
        add(IdentityId::QT1, "QT1", {"product", "r"}, {});
        add(IdentityId::QT2, "QT2", {"product", "r"}, {});
        add(IdentityId::COYBE, "COYBE", {"cop", "w"},
            {"w(cop1(x),z)*w(cop2(x),y) - w(x,cop1(z))*w(y,cop2(z)) + w(cop1(y),z)*w(x,cop2(y)) "
             "- w(x,cop1(y))*w(cop2(y),z) == 0"});
        add(IdentityId::OMEGA_PROD, "OMEGA_PROD", {"product2", "cop", "w"},
            {"x@y == cop1(x)*w(cop2(x),y) + cop1(y)*w(x,cop2(y)) - cop2(y)*w(x,cop1(y))"});
        add(IdentityId::DQT1, "DQT1", {"product2", "cop", "w"},
            {"w(x@y,z) == w(x,cop1(z))*w(y,cop2(z))"});
        add(IdentityId::DQT2, "DQT2", {"product2", "cop", "w"},
            {"w(x,y@z) == w(cop1(x),y)*w(cop2(x),z)"});
        add(IdentityId::SYMP, "SYMP", {"product", "w"},
            {"w(x*y,z) + w(x*z,y) == w(z*x,y) + w(z*y,x)"});
        add(IdentityId::COSYMP, "COSYMP", {"cop", "r"},
            {"cop1(t1(r)) ox cop2(t1(r)) ox t2(r) + cop1(t1(r)) ox t2(r) ox cop2(t1(r)) "
             "- cop2(t1(r)) ox t2(r) ox cop1(t1(r)) - t2(r) ox cop2(t1(r)) ox cop1(t1(r)) == 0"});
        add(IdentityId::CQT_SYM, "CQT_SYM", {"product", "w", "r"},
            {"w(t2(r),y)*w(z*x,t1(r)) - w(t2(r),y)*w(x*z,t1(r)) - w(t1(r),z)*w(x*y,t2(r)) "
             "+ w(x,t1(r))*w(z*y,t2(r)) == 0"});
        return t;
    }();
    return table;
}

inline const IdentityInfo& info(IdentityId id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw UnboundName("unknown identity id");
}

inline const IdentityInfo* find_identity(const std::string& name) {
    for (const auto& e : registry())
        if (name == e.name) return &e;
    return nullptr;
}

namespace detail_reg {

template <class K>
const PermAlgebra<K>& need_product(const EvalContext<K>& c) {
    if (!c.product) throw UnboundName("identity needs the product slot");
    return *c.product;
}
template <class K>
const PermAlgebra<K>& need_product2(const EvalContext<K>& c) {
    if (!c.product2) throw UnboundName("identity needs the second product slot");
    return *c.product2;
}
template <class K>
const PermCoalgebra<K>& need_cop(const EvalContext<K>& c) {
    if (!c.cop) throw UnboundName("identity needs the coproduct slot");
    return *c.cop;
}
template <class K>
const LinearMap<K>& need_map(const EvalContext<K>& c, const std::string& n) {
    auto it = c.maps.find(n);
    if (it == c.maps.end()) throw UnboundName("identity needs map '" + n + "'");
    return *it->second;
}
template <class K>
const BilinearForm<K>& need_form(const EvalContext<K>& c, const std::string& n) {
    auto it = c.forms.find(n);
    if (it == c.forms.end()) throw UnboundName("identity needs form '" + n + "'");
    return *it->second;
}
template <class K>
const Tensor2<K>& need_tensor(const EvalContext<K>& c, const std::string& n) {
    auto it = c.tensors.find(n);
    if (it == c.tensors.end()) throw UnboundName("identity needs tensor '" + n + "'");
    return *it->second;
}

// Operator pencil identities on adjoint actions, checked with matrices.
template <class K>
Report rl_matrix_check(const EvalContext<K>& c, IdentityId id, const std::string& name) {
    const PermAlgebra<K>& A = need_product(c);
    const PermAlgebra<K>& B = need_product2(c);
    const LinearMap<K>& N = need_map(c, "N");
    const Matrix<K>& a = need_map(c, "A").m;
    CheckAcc<K> acc(name);
    std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> nx = N(basis_vec<K>(n, i));
        Matrix<K> diff(n, n);
        switch (id) {
            case IdentityId::RL_L:
                diff = B.left_mult_basis(i) - (A.left_mult(nx) + A.left_mult_basis(i) * a - a * A.left_mult_basis(i));
                break;
            case IdentityId::RL_L2:
                diff = A.left_mult(nx) * a - a * B.left_mult_basis(i);
                break;
            case IdentityId::RL_R:
                diff = B.right_mult_basis(i) -
                       (A.right_mult(nx) + A.right_mult_basis(i) * a - a * A.right_mult_basis(i));
                break;
            case IdentityId::RL_R2:
                diff = A.right_mult(nx) * a - a * B.right_mult_basis(i);
                break;
            default:
                throw Error("internal: not an operator pencil identity");
        }
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t t = 0; t < n; ++t)
                acc.add("x=" + A.space.basis[i] + ",v=" + A.space.basis[v] + " @" + A.space.basis[t],
                        diff.at(t, v));
    }
    return acc.finish();
}

}  // namespace detail_reg

// Hand-coded evaluation of a builtin identity against a context.
template <class K>
Report check_builtin(IdentityId id, const EvalContext<K>& c) {
    using namespace detail_reg;
    switch (id) {
        case IdentityId::PERM: return check_perm(need_product(c));
        case IdentityId::COPERM: return check_coperm(need_cop(c));
        case IdentityId::REP_R: return check_rep_r(Representation<K>::adjoint(need_product(c)));
        case IdentityId::REP_L: return check_rep_l(Representation<K>::adjoint(need_product(c)));
        case IdentityId::HOM_REP:
            return check_hom_rep(Representation<K>::adjoint(need_product(c)),
                                 Representation<K>::adjoint(need_product2(c)), need_map(c, "phi"),
                                 need_map(c, "f"));
        case IdentityId::LIN_COMB_ALG: return check_lincomb_alg(need_product(c), need_product2(c));
        case IdentityId::LIN_COMB_REP:
            return check_lincomb_rep(Representation<K>::adjoint(need_product(c)),
                                     Representation<K>::adjoint(need_product2(c)), need_product(c),
                                     need_product2(c));
        case IdentityId::RL_PRODUCT: {
            PermAlgebra<K> expect = deformed_product(need_product(c), need_map(c, "N"));
            CheckAcc<K> acc("RL_PRODUCT");
            const PermAlgebra<K>& B = need_product2(c);
            for (std::size_t i = 0; i < expect.c.size(); ++i)
                acc.add("entry " + std::to_string(i), B.c[i] - expect.c[i]);
            return acc.finish();
        }
        case IdentityId::NIJ_HOM:
            return check_nij_hom(need_product(c), need_product2(c), need_map(c, "N"));
        case IdentityId::RL_L:
        case IdentityId::RL_L2:
        case IdentityId::RL_R:
        case IdentityId::RL_R2:
            return rl_matrix_check(c, id, info(id).name);
        case IdentityId::NIJ: return check_nijenhuis(need_product(c), need_map(c, "N"));
        case IdentityId::NIJREP_L:
            return check_nijrep_l(Representation<K>::adjoint(need_product(c)), need_map(c, "N"),
                                  need_map(c, "A"));
        case IdentityId::NIJREP_R:
            return check_nijrep_r(Representation<K>::adjoint(need_product(c)), need_map(c, "N"),
                                  need_map(c, "A"));
        case IdentityId::ADMREP_L:
            return check_admrep_l(Representation<K>::adjoint(need_product(c)), need_map(c, "N"),
                                  need_map(c, "b"));
        case IdentityId::ADMREP_R:
            return check_admrep_r(Representation<K>::adjoint(need_product(c)), need_map(c, "N"),
                                  need_map(c, "b"));
        case IdentityId::ADM_1: return check_adm1(need_product(c), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::ADM_2: return check_adm2(need_product(c), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::MP: {
            PermBialgebra<K> B{need_product(c), need_cop(c), {}, {}};
            return check_matched_pair(extract_matched_pair(B));
        }
        case IdentityId::FROB: return check_frobenius(need_product(c), need_form(c, "B"));
        case IdentityId::FROB_SKEW_ID:
            return check_frobenius_skew_id(need_product(c), need_form(c, "B"));
        case IdentityId::NIJ_CO: return check_conijenhuis(need_cop(c), need_map(c, "S"));
        case IdentityId::BIALG: return check_bialg(need_product(c), need_cop(c));
        case IdentityId::NADM_CO_1:
            return check_nadm_co1(need_cop(c), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::NADM_CO_2:
            return check_nadm_co2(need_cop(c), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::COB_1: return check_cob1(need_product(c), need_tensor(c, "r"));
        case IdentityId::COB_2: return check_cob2(need_product(c), need_tensor(c, "r"));
        case IdentityId::COB_3: return check_cob3(need_product(c), need_tensor(c, "r"));
        case IdentityId::COB_4: return check_cob4(need_product(c), need_tensor(c, "r"));
        case IdentityId::COB_5: return check_cob5(need_product(c), need_tensor(c, "r"));
        case IdentityId::COB_6: return check_cob6(need_product(c), need_tensor(c, "r"));
        case IdentityId::PYBE: return check_pybe(need_product(c), need_tensor(c, "r"));
        case IdentityId::RS_COMPAT:
            return check_rs_compat(need_tensor(c, "r"), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::NH_1:
            return check_nh1(need_product(c), need_map(c, "N"), need_map(c, "S"), need_tensor(c, "r"));
        case IdentityId::NH_2:
            return check_nh2(need_product(c), need_map(c, "N"), need_map(c, "S"), need_tensor(c, "r"));
        case IdentityId::NH_3:
            return check_nh3(need_product(c), need_map(c, "N"), need_map(c, "S"), need_tensor(c, "r"));
        case IdentityId::LPQ_1: {
            const Tensor2<K>& r = need_tensor(c, "r");
            const LinearMap<K>& N = need_map(c, "N");
            const LinearMap<K>& S = need_map(c, "S");
            LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
            LinearMap<K> S2(S.domain, S.codomain, S.m * S.m);
            CheckAcc<K> acc("LPQ_1");
            ::permlab::detail::acc_tensor2(acc, leg_apply(N2, r, 2) - leg_apply(S2, r, 1), "lpq1");
            return acc.finish();
        }
        case IdentityId::LPQ_2: {
            const Tensor2<K>& r = need_tensor(c, "r");
            const LinearMap<K>& N = need_map(c, "N");
            const LinearMap<K>& S = need_map(c, "S");
            LinearMap<K> N2(N.domain, N.codomain, N.m * N.m);
            LinearMap<K> S2(S.domain, S.codomain, S.m * S.m);
            CheckAcc<K> acc("LPQ_2");
            ::permlab::detail::acc_tensor2(acc, leg_apply(N2, r, 1) - leg_apply(S2, r, 2), "lpq2");
            return acc.finish();
        }
        case IdentityId::LPQ_3: {
            const Tensor2<K>& r = need_tensor(c, "r");
            CheckAcc<K> acc("LPQ_3");
            ::permlab::detail::acc_tensor2(
                acc, leg_apply(need_map(c, "N"), r, 1) - leg_apply(need_map(c, "S"), r, 2), "lpq3");
            return acc.finish();
        }
        case IdentityId::THX_OP: return check_thx_op(need_product(c), need_tensor(c, "r"));
        case IdentityId::THX_TWIST:
            return check_thx_twist(need_tensor(c, "r"), need_map(c, "N"), need_map(c, "S"));
        case IdentityId::OOP: {
            const PermAlgebra<K>& A = need_product(c);
            LinearMap<K> zero = LinearMap<K>::zero(A.space, A.space);
            auto dual = dual_representation(Representation<K>::adjoint(A), zero, zero);
            return check_oop(r_sharp(need_tensor(c, "r")), dual.base);
        }
        case IdentityId::OOP_TW: {
            LinearMap<K> rs = r_sharp(need_tensor(c, "r"));
            const LinearMap<K>& S = need_map(c, "S");
            LinearMap<K> sstar(rs.domain, rs.domain, S.m.transpose());
            return check_oop_twist(rs, need_map(c, "N"), sstar);
        }
        case IdentityId::FV_A: {
            const PermAlgebra<K>& A = need_product(c);
            const Matrix<K>& a = need_map(c, "A").m;
            const Matrix<K>& b = need_map(c, "b").m;
            const LinearMap<K>& S = need_map(c, "S");
            CheckAcc<K> acc("FV_A");
            std::size_t n = A.dim();
            for (std::size_t i = 0; i < n; ++i) {
                Vec<K> x = basis_vec<K>(n, i);
                Vec<K> sx = S(x);
                Matrix<K> Lx = A.left_mult(x), LSx = A.left_mult(sx), LS2x = A.left_mult(S(sx));
                Matrix<K> diff = b * (Lx * a) + LS2x - LSx * a - b * LSx;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t t = 0; t < n; ++t)
                        acc.add("x=" + A.space.basis[i] + ",u=" + A.space.basis[u] + " @" + A.space.basis[t],
                                diff.at(t, u));
            }
            return acc.finish();
        }
        case IdentityId::FV_B: {
            const PermAlgebra<K>& A = need_product(c);
            const Matrix<K>& a = need_map(c, "A").m;
            const Matrix<K>& b = need_map(c, "b").m;
            const LinearMap<K>& S = need_map(c, "S");
            CheckAcc<K> acc("FV_B");
            std::size_t n = A.dim();
            for (std::size_t i = 0; i < n; ++i) {
                Vec<K> x = basis_vec<K>(n, i);
                Vec<K> sx = S(x);
                Matrix<K> Rx = A.right_mult(x), RSx = A.right_mult(sx), RS2x = A.right_mult(S(sx));
                Matrix<K> diff = b * (Rx * a) + RS2x - RSx * a - b * RSx;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t t = 0; t < n; ++t)
                        acc.add("x=" + A.space.basis[i] + ",u=" + A.space.basis[u] + " @" + A.space.basis[t],
                                diff.at(t, u));
            }
            return acc.finish();
        }
        case IdentityId::ADJ:
            return check_adjoint_identity(need_form(c, "B"), need_map(c, "N"), need_map(c, "Nh"));
        case IdentityId::MANIN_ADJ: {
            PermBialgebra<K> B{need_product(c), need_cop(c), need_map(c, "N"), need_map(c, "S")};
            return check_manin_adjoint(B);
        }
        case IdentityId::QT1: return check_qt1(need_product(c), need_tensor(c, "r"));
        case IdentityId::QT2: return check_qt2(need_product(c), need_tensor(c, "r"));
        case IdentityId::COYBE: return check_coybe(need_cop(c), need_form(c, "w"));
        case IdentityId::OMEGA_PROD: {
            PermAlgebra<K> expect = omega_product(need_cop(c), need_form(c, "w"));
            const PermAlgebra<K>& B = need_product2(c);
            CheckAcc<K> acc("OMEGA_PROD");
            for (std::size_t i = 0; i < expect.c.size(); ++i)
                acc.add("entry " + std::to_string(i), B.c[i] - expect.c[i]);
            return acc.finish();
        }
        case IdentityId::DQT1: return check_dqt1(need_cop(c), need_form(c, "w"), need_product2(c));
        case IdentityId::DQT2: return check_dqt2(need_cop(c), need_form(c, "w"), need_product2(c));
        case IdentityId::SYMP: return check_symplectic(need_product(c), need_form(c, "w"));
        case IdentityId::COSYMP: return check_cosymplectic(need_cop(c), need_tensor(c, "r"));
        case IdentityId::CQT_SYM:
            return check_cqt_sym(need_product(c), need_form(c, "w"), need_tensor(c, "r"));
    }
    throw UnboundName("unknown identity id");
}

// DSL-route evaluation of the same identity; throws for entries without a
// DSL source. Derived slots (r#, S*, alpha*) are materialized locally.
template <class K>
Report check_dsl(IdentityId id, const EvalContext<K>& c) {
    const IdentityInfo& in = info(id);
    if (in.dsl.empty()) throw UnboundName(std::string(in.name) + " has no DSL source");
    EvalContext<K> ctx = c;
    LinearMap<K> rs, twist;
    if (id == IdentityId::THX_TWIST || id == IdentityId::OOP_TW) {
        rs = r_sharp(detail_reg::need_tensor(c, "r"));
        const LinearMap<K>& S = detail_reg::need_map(c, "S");
        twist = LinearMap<K>(rs.domain, rs.domain, S.m.transpose());
        ctx.maps["T"] = &rs;
        ctx.maps[id == IdentityId::THX_TWIST ? "Sd" : "A2"] = &twist;
        ctx.var_space["u"] = rs.domain;
    }
    std::vector<Report> parts;
    for (std::size_t i = 0; i < in.dsl.size(); ++i) {
        Equation eq = parse(in.dsl[i]);
        parts.push_back(evaluate(eq, ctx, std::string(in.name) + "[" + std::to_string(i + 1) + "]"));
    }
    return Report::combine(std::string(in.name) + " (dsl)", std::move(parts));
}

}  // namespace permlab::identity
