#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/identity/registry.hpp"

namespace permlab {

using Json = nlohmann::ordered_json;

// A named collection of spaces, algebras, coalgebras, maps, forms, and
// rank-2 tensors over one scalar field: the unit of file I/O. Scalars are
// strings in the polynomial grammar; nothing is parsed as floating point.
template <class K>
struct StructureBundle {
    using Coeff = typename std::conditional<std::is_same_v<K, PolyQ>, Rational, Fp>::type;

    std::string field;  // "Q" or "Fp"
    std::uint32_t p = 0;
    PolyCtxPtr<Coeff> ctx;
    std::map<std::string, Space> spaces;
    std::map<std::string, PermAlgebra<K>> algebras;
    std::map<std::string, PermCoalgebra<K>> coalgebras;
    std::map<std::string, LinearMap<K>> maps;
    std::map<std::string, BilinearForm<K>> forms;
    std::map<std::string, Tensor2<K>> tensors;

    const Space& space(const std::string& name) const {
        auto it = spaces.find(name);
        if (it == spaces.end()) throw SchemaError("unknown space '" + name + "'", "/spaces");
        return it->second;
    }
};

using QBundle = StructureBundle<PolyQ>;
using FpBundle = StructureBundle<PolyFp>;

namespace bundle_detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'", where);
    return *it;
}

inline std::string str_member(const Json& j, const char* key, const std::string& where) {
    const Json& m = member(j, key, where);
    if (!m.is_string()) throw SchemaError(std::string("'") + key + "' must be a string", where);
    return m.get<std::string>();
}

inline std::size_t basis_index(const Space& s, const std::string& name, const std::string& where) {
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        if (s.basis[i] == name) return i;
    throw SchemaError("unknown basis vector '" + name + "' in space '" + s.name + "'", where);
}

template <class K>
K parse_scalar(const StructureBundle<K>& b, const std::string& text, const std::string& where) {
    try {
        return K::parse(text, b.ctx);
    } catch (const BadScalar& e) {
        throw SchemaError(e.what(), where);
    }
}

}  // namespace bundle_detail

// Parse a bundle from JSON. Every named reference is resolved, dimensions
// are checked, declared form symmetries verified, and rewrite rules must be
// non-overlapping and strictly decreasing.
template <class K>
StructureBundle<K> bundle_from_json(const Json& root) {
    using namespace bundle_detail;
    using Coeff = typename StructureBundle<K>::Coeff;
    StructureBundle<K> b;
    if (!root.is_object()) throw SchemaError("bundle must be a JSON object", "/");
    b.field = str_member(root, "field", "/field");
    if constexpr (std::is_same_v<K, PolyQ>) {
        if (b.field != "Q") throw SchemaError("expected field 'Q'", "/field");
    } else {
        if (b.field != "Fp") throw SchemaError("expected field 'Fp'", "/field");
        const Json& pj = member(root, "p", "/p");
        if (!pj.is_number_unsigned()) throw SchemaError("'p' must be an unsigned integer", "/p");
        b.p = pj.template get<std::uint32_t>();
        if (!Fp::is_odd_prime(b.p)) throw SchemaError("'p' must be an odd prime >= 3", "/p");
    }

    std::vector<std::string> params;
    if (root.contains("parameters")) {
        for (const auto& v : root.at("parameters")) params.push_back(v.template get<std::string>());
    }
    // rules are parsed against a rule-free context first
    auto plain = make_ctx<Coeff>(params);
    std::vector<RewriteRule<Coeff>> rules;
    if (root.contains("rewrites")) {
        std::size_t idx = 0;
        for (const auto& rj : root.at("rewrites")) {
            std::string where = "/rewrites/" + std::to_string(idx++);
            Poly<Coeff> lhs = Poly<Coeff>::parse(str_member(rj, "lhs", where), plain);
            if (lhs.terms().size() != 1 || !lhs.terms()[0].c.is_one() ||
                lhs.terms()[0].m.is_one())
                throw SchemaError("rewrite lhs must be a single monic monomial", where);
            Poly<Coeff> rhs = Poly<Coeff>::parse(str_member(rj, "rhs", where), plain);
            RewriteRule<Coeff> rule;
            rule.lhs = lhs.terms()[0].m;
            rule.rhs.assign(rhs.terms().begin(), rhs.terms().end());
            rules.push_back(std::move(rule));
        }
    }
    b.ctx = make_ctx<Coeff>(params, std::move(rules));  // throws OverlappingRules / BadRewriteRule

    for (const auto& [name, bj] : member(root, "spaces", "/spaces").items()) {
        std::vector<std::string> basis;
        for (const auto& v : bj) basis.push_back(v.template get<std::string>());
        b.spaces.emplace(name, make_space(name, std::move(basis)));
    }

    auto parse_k = [&](const std::string& text, const std::string& where) -> K {
        try {
            if constexpr (std::is_same_v<K, PolyQ>) {
                return PolyQ::parse(text, b.ctx);
            } else {
                PolyFp raw = PolyFp::parse(text, b.ctx);
                // attach the modulus to every coefficient
                std::vector<PTerm<Fp>> ts;
                for (const auto& t : raw.terms()) ts.push_back({t.m, t.c + Fp::make(b.p, 0)});
                return PolyFp::from_terms(std::move(ts), b.ctx);
            }
        } catch (const BadScalar& e) {
            throw SchemaError(e.what(), where);
        } catch (const OverlappingRules& e) {
            throw SchemaError(e.what(), where);
        }
    };

    if (root.contains("algebras")) {
        for (const auto& [name, aj] : root.at("algebras").items()) {
            std::string where = "/algebras/" + name;
            const Space& sp = [&]() -> const Space& {
                std::string sn = str_member(aj, "space", where);
                auto it = b.spaces.find(sn);
                if (it == b.spaces.end()) throw SchemaError("unknown space '" + sn + "'", where);
                return it->second;
            }();
            PermAlgebra<K> A(sp);
            for (const auto& ej : member(aj, "table", where)) {
                std::size_t i = basis_index(sp, str_member(ej, "i", where), where);
                std::size_t j = basis_index(sp, str_member(ej, "j", where), where);
                for (const auto& [bn, sv] : member(ej, "out", where).items()) {
                    std::size_t k = basis_index(sp, bn, where);
                    A.at(i, j, k) = parse_k(sv.template get<std::string>(), where);
                }
            }
            b.algebras.emplace(name, std::move(A));
        }
    }

    if (root.contains("coalgebras")) {
        for (const auto& [name, cj] : root.at("coalgebras").items()) {
            std::string where = "/coalgebras/" + name;
            std::string sn = str_member(cj, "space", where);
            auto it = b.spaces.find(sn);
            if (it == b.spaces.end()) throw SchemaError("unknown space '" + sn + "'", where);
            PermCoalgebra<K> C(it->second);
            for (const auto& ej : member(cj, "table", where)) {
                std::size_t i = basis_index(it->second, str_member(ej, "i", where), where);
                std::size_t j = basis_index(it->second, str_member(ej, "j", where), where);
                std::size_t k = basis_index(it->second, str_member(ej, "k", where), where);
                C.at(i, j, k) = parse_k(str_member(ej, "c", where), where);
            }
            b.coalgebras.emplace(name, std::move(C));
        }
    }

    if (root.contains("maps")) {
        for (const auto& [name, mj] : root.at("maps").items()) {
            std::string where = "/maps/" + name;
            std::string dn = str_member(mj, "domain", where);
            std::string cn = str_member(mj, "codomain", where);
            auto dit = b.spaces.find(dn), cit = b.spaces.find(cn);
            if (dit == b.spaces.end()) throw SchemaError("unknown space '" + dn + "'", where);
            if (cit == b.spaces.end()) throw SchemaError("unknown space '" + cn + "'", where);
            Matrix<K> m(cit->second.dim(), dit->second.dim());
            for (const auto& [col, colj] : member(mj, "cols", where).items()) {
                std::size_t j = basis_index(dit->second, col, where);
                for (const auto& [row, sv] : colj.items()) {
                    std::size_t i = basis_index(cit->second, row, where);
                    m.at(i, j) = parse_k(sv.template get<std::string>(), where);
                }
            }
            b.maps.emplace(name, LinearMap<K>(dit->second, cit->second, std::move(m)));
        }
    }

    if (root.contains("forms")) {
        for (const auto& [name, fj] : root.at("forms").items()) {
            std::string where = "/forms/" + name;
            std::string sn = str_member(fj, "space", where);
            auto it = b.spaces.find(sn);
            if (it == b.spaces.end()) throw SchemaError("unknown space '" + sn + "'", where);
            Symmetry sym = Symmetry::none;
            if (fj.contains("symmetry")) {
                std::string sy = fj.at("symmetry").template get<std::string>();
                if (sy == "symmetric") sym = Symmetry::symmetric;
                else if (sy == "skew") sym = Symmetry::skew;
                else if (sy != "none") throw SchemaError("symmetry must be symmetric/skew/none", where);
            }
            Matrix<K> m(it->second.dim(), it->second.dim());
            for (const auto& ej : member(fj, "entries", where)) {
                std::size_t i = basis_index(it->second, str_member(ej, "i", where), where);
                std::size_t j = basis_index(it->second, str_member(ej, "j", where), where);
                m.at(i, j) = parse_k(str_member(ej, "c", where), where);
            }
            try {
                b.forms.emplace(name, BilinearForm<K>(it->second, std::move(m), sym));
            } catch (const NotSymmetricForm& e) {
                throw SchemaError(e.what(), where);
            }
        }
    }

    if (root.contains("tensors")) {
        for (const auto& [name, tj] : root.at("tensors").items()) {
            std::string where = "/tensors/" + name;
            std::string sn = str_member(tj, "space", where);
            auto it = b.spaces.find(sn);
            if (it == b.spaces.end()) throw SchemaError("unknown space '" + sn + "'", where);
            Tensor2<K> t(it->second, it->second);
            for (const auto& ej : member(tj, "entries", where)) {
                std::size_t i = basis_index(it->second, str_member(ej, "i", where), where);
                std::size_t j = basis_index(it->second, str_member(ej, "j", where), where);
                t.at(i, j) = parse_k(str_member(ej, "c", where), where);
            }
            b.tensors.emplace(name, std::move(t));
        }
    }

    return b;
}

// Serialize with deterministic ordering and canonical scalar strings, so
// save(load(x)) round-trips byte for byte.
template <class K>
Json bundle_to_json(const StructureBundle<K>& b) {
    Json root;
    root["field"] = b.field;
    if (b.field == "Fp") root["p"] = b.p;
    if (b.ctx && !b.ctx->vars.empty()) root["parameters"] = b.ctx->vars;
    if (b.ctx && !b.ctx->rules.empty()) {
        Json rules = Json::array();
        for (const auto& rule : b.ctx->rules) {
            Json rj;
            using Coeff = typename StructureBundle<K>::Coeff;
            Poly<Coeff> lhs = Poly<Coeff>::from_terms({{rule.lhs, Coeff(1)}}, make_ctx<Coeff>(b.ctx->vars));
            Poly<Coeff> rhs = Poly<Coeff>::from_terms(
                std::vector<PTerm<Coeff>>(rule.rhs.begin(), rule.rhs.end()), make_ctx<Coeff>(b.ctx->vars));
            rj["lhs"] = lhs.str();
            rj["rhs"] = rhs.str();
            rules.push_back(rj);
        }
        root["rewrites"] = rules;
    }
    Json spaces;
    for (const auto& [name, sp] : b.spaces) spaces[name] = sp.basis;
    root["spaces"] = spaces;

    if (!b.algebras.empty()) {
        Json algs;
        for (const auto& [name, A] : b.algebras) {
            Json aj;
            aj["space"] = A.space.name;
            Json table = Json::array();
            for (std::size_t i = 0; i < A.dim(); ++i)
                for (std::size_t j = 0; j < A.dim(); ++j) {
                    Json out;
                    for (std::size_t k = 0; k < A.dim(); ++k)
                        if (!kzero(A.at(i, j, k))) out[A.space.basis[k]] = kstr(A.at(i, j, k));
                    if (!out.empty())
                        table.push_back(Json{{"i", A.space.basis[i]}, {"j", A.space.basis[j]}, {"out", out}});
                }
            aj["table"] = table;
            algs[name] = aj;
        }
        root["algebras"] = algs;
    }
    if (!b.coalgebras.empty()) {
        Json cos;
        for (const auto& [name, C] : b.coalgebras) {
            Json cj;
            cj["space"] = C.space.name;
            Json table = Json::array();
            for (std::size_t i = 0; i < C.dim(); ++i)
                for (std::size_t j = 0; j < C.dim(); ++j)
                    for (std::size_t k = 0; k < C.dim(); ++k)
                        if (!kzero(C.at(i, j, k)))
                            table.push_back(Json{{"i", C.space.basis[i]},
                                                 {"j", C.space.basis[j]},
                                                 {"k", C.space.basis[k]},
                                                 {"c", kstr(C.at(i, j, k))}});
            cj["table"] = table;
            cos[name] = cj;
        }
        root["coalgebras"] = cos;
    }
    if (!b.maps.empty()) {
        Json maps;
        for (const auto& [name, f] : b.maps) {
            Json mj;
            mj["domain"] = f.domain.name;
            mj["codomain"] = f.codomain.name;
            Json cols;
            for (std::size_t j = 0; j < f.domain.dim(); ++j) {
                Json col;
                for (std::size_t i = 0; i < f.codomain.dim(); ++i)
                    if (!kzero(f.m.at(i, j))) col[f.codomain.basis[i]] = kstr(f.m.at(i, j));
                if (!col.empty()) cols[f.domain.basis[j]] = col;
            }
            mj["cols"] = cols;
            maps[name] = mj;
        }
        root["maps"] = maps;
    }
    if (!b.forms.empty()) {
        Json forms;
        for (const auto& [name, f] : b.forms) {
            Json fj;
            fj["space"] = f.space.name;
            fj["symmetry"] = f.declared == Symmetry::symmetric ? "symmetric"
                             : f.declared == Symmetry::skew    ? "skew"
                                                               : "none";
            Json entries = Json::array();
            for (std::size_t i = 0; i < f.space.dim(); ++i)
                for (std::size_t j = 0; j < f.space.dim(); ++j)
                    if (!kzero(f.m.at(i, j)))
                        entries.push_back(Json{{"i", f.space.basis[i]},
                                               {"j", f.space.basis[j]},
                                               {"c", kstr(f.m.at(i, j))}});
            fj["entries"] = entries;
            forms[name] = fj;
        }
        root["forms"] = forms;
    }
    if (!b.tensors.empty()) {
        Json tensors;
        for (const auto& [name, t] : b.tensors) {
            Json tj;
            tj["space"] = t.s1.name;
            Json entries = Json::array();
            for (std::size_t i = 0; i < t.s1.dim(); ++i)
                for (std::size_t j = 0; j < t.s2.dim(); ++j)
                    if (!kzero(t.at(i, j)))
                        entries.push_back(
                            Json{{"i", t.s1.basis[i]}, {"j", t.s2.basis[j]}, {"c", kstr(t.at(i, j))}});
            tj["entries"] = entries;
            tensors[name] = tj;
        }
        root["tensors"] = tensors;
    }
    return root;
}

struct AnyBundle {
    std::optional<QBundle> q;
    std::optional<FpBundle> fp;
    bool is_q() const { return q.has_value(); }
};

inline AnyBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open bundle file '" + path + "'");
    Json root;
    try {
        in >> root;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), "/");
    }
    AnyBundle out;
    if (!root.is_object() || !root.contains("field"))
        throw SchemaError("bundle must be an object with a 'field' key", "/");
    std::string field = root.at("field").get<std::string>();
    if (field == "Q") out.q = bundle_from_json<PolyQ>(root);
    else if (field == "Fp") out.fp = bundle_from_json<PolyFp>(root);
    else throw SchemaError("field must be 'Q' or 'Fp'", "/field");
    return out;
}

inline void save_bundle_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write bundle file '" + path + "'");
    out << j.dump(2) << "\n";
}

// Resolve an evaluation context from a bundle, honoring explicit binding
// pairs registry-slot=bundle-name and falling back to conventional names.
template <class K>
struct BoundContext {
    identity::EvalContext<K> ctx;
    // storage for derived structures kept alive alongside the context
    std::vector<std::shared_ptr<void>> owned;

    template <class T>
    const T* own(T value) {
        auto p = std::make_shared<T>(std::move(value));
        owned.push_back(p);
        return p.get();
    }
};

template <class K>
BoundContext<K> bind_bundle(const StructureBundle<K>& b, const std::map<std::string, std::string>& binds) {
    BoundContext<K> out;
    auto pick = [&](const char* slot) -> std::string {
        auto it = binds.find(slot);
        return it == binds.end() ? std::string() : it->second;
    };
    auto find_algebra = [&](const std::string& name) -> const PermAlgebra<K>* {
        if (name.empty()) return nullptr;
        auto it = b.algebras.find(name);
        if (it == b.algebras.end()) throw UnboundName("no algebra named '" + name + "' in the bundle");
        return &it->second;
    };

    std::string prod = pick("product");
    if (!prod.empty()) {
        out.ctx.product = find_algebra(prod);
    } else if (b.algebras.count("product")) {
        out.ctx.product = &b.algebras.at("product");
    } else if (b.algebras.size() == 1) {
        out.ctx.product = &b.algebras.begin()->second;
    }

    std::string prod2 = pick("product2");
    if (!prod2.empty()) out.ctx.product2 = find_algebra(prod2);

    std::string cop = pick("cop");
    if (!cop.empty()) {
        auto it = b.coalgebras.find(cop);
        if (it == b.coalgebras.end()) throw UnboundName("no coalgebra named '" + cop + "' in the bundle");
        out.ctx.cop = &it->second;
    } else if (b.coalgebras.count("cop")) {
        out.ctx.cop = &b.coalgebras.at("cop");
    } else if (b.coalgebras.size() == 1) {
        out.ctx.cop = &b.coalgebras.begin()->second;
    }

    for (const char* name : {"N", "S", "A", "b", "phi", "f", "Nh"}) {
        std::string bound = pick(name);
        if (bound.empty() && b.maps.count(name)) bound = name;
        if (!bound.empty()) {
            auto it = b.maps.find(bound);
            if (it == b.maps.end()) throw UnboundName("no map named '" + bound + "' in the bundle");
            out.ctx.maps[name] = &it->second;
        }
    }
    // alpha defaults to N and beta to S when absent
    if (!out.ctx.maps.count("A") && out.ctx.maps.count("N")) out.ctx.maps["A"] = out.ctx.maps["N"];
    if (!out.ctx.maps.count("b") && out.ctx.maps.count("S")) out.ctx.maps["b"] = out.ctx.maps["S"];

    for (const char* name : {"B", "w"}) {
        std::string bound = pick(name);
        if (bound.empty() && b.forms.count(name)) bound = name;
        if (bound.empty() && name == std::string("w") && b.forms.count("omega")) bound = "omega";
        if (!bound.empty()) {
            auto it = b.forms.find(bound);
            if (it == b.forms.end()) throw UnboundName("no form named '" + bound + "' in the bundle");
            out.ctx.forms[name] = &it->second;
        }
    }

    std::string rname = pick("r");
    if (rname.empty() && b.tensors.count("r")) rname = "r";
    if (rname.empty() && b.tensors.size() == 1) rname = b.tensors.begin()->first;
    if (!rname.empty()) {
        auto it = b.tensors.find(rname);
        if (it == b.tensors.end()) throw UnboundName("no tensor named '" + rname + "' in the bundle");
        out.ctx.tensors["r"] = &it->second;
    }

    // second product defaults: the omega product when a coalgebra and form
    // are present, else the deformed product when N is bound
    if (!out.ctx.product2) {
        if (out.ctx.cop && out.ctx.forms.count("w")) {
            out.ctx.product2 =
                out.own(omega_product(*out.ctx.cop, *out.ctx.forms.at("w")));
        } else if (out.ctx.product && out.ctx.maps.count("N")) {
            out.ctx.product2 = out.own(deformed_product(*out.ctx.product, *out.ctx.maps.at("N")));
        }
    }

    if (out.ctx.product) out.ctx.default_space = out.ctx.product->space;
    else if (out.ctx.cop) out.ctx.default_space = out.ctx.cop->space;
    else if (!b.spaces.empty()) out.ctx.default_space = b.spaces.begin()->second;
    return out;
}

}  // namespace permlab
