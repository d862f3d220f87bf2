#pragma once

#include <optional>
#include <string>

#include "permlab/fp.hpp"
#include "permlab/poly.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Uniform scalar interface for the generic algebra layer. "Symbolic" scalars
// (polynomials) can yield conditional verdicts; field scalars cannot.

template <class K>
struct ScalarInfo {
    static constexpr bool symbolic = false;
};

template <>
struct ScalarInfo<Rational> {
    static constexpr bool symbolic = false;
    static bool is_constant(const Rational&) { return true; }
    static std::optional<Rational> try_invert(const Rational& k) {
        if (k.is_zero()) return std::nullopt;
        return Rational(1) / k;
    }
};

template <>
struct ScalarInfo<Fp> {
    static constexpr bool symbolic = false;
    static bool is_constant(const Fp&) { return true; }
    static std::optional<Fp> try_invert(const Fp& k) {
        if (k.is_zero()) return std::nullopt;
        return k.inverse();
    }
};

template <class C>
struct ScalarInfo<Poly<C>> {
    static constexpr bool symbolic = true;
    static bool is_constant(const Poly<C>& k) { return k.is_constant(); }
    static std::optional<Poly<C>> try_invert(const Poly<C>& k) {
        if (!k.is_constant() || k.is_zero()) return std::nullopt;
        return Poly<C>::constant(C(1) / k.constant_value(), k.ctx());
    }
};

// Scale a reported constraint so its leading coefficient is 1; equivalent
// residuals from different code paths then dedupe to one string.
template <class K>
K constraint_normal(const K& k) {
    return k;
}

template <class C>
Poly<C> constraint_normal(const Poly<C>& p) {
    if (p.is_zero()) return p;
    C lead = p.terms().front().c;
    return p * Poly<C>::constant(C(1) / lead, p.ctx());
}

template <class K>
bool kzero(const K& k) { return k.is_zero(); }

template <class K>
std::string kstr(const K& k) { return k.str(); }

template <class K>
std::optional<K> try_invert(const K& k) { return ScalarInfo<K>::try_invert(k); }

template <class K>
inline constexpr bool scalar_is_symbolic_v = ScalarInfo<K>::symbolic;

}  // namespace permlab
