#pragma once

#include <cstdint>
#include <string>

#include "permlab/error.hpp"

namespace permlab {

// Prime-field scalar with a runtime modulus. The modulus must be an odd
// prime; characteristic 2 is rejected everywhere (skew forms and the
// coefficient 2 in the classification coproducts degenerate there).
//
// Values built from bare integers (Fp(3), Fp(-1)) carry no modulus yet; the
// first arithmetic op against an attached value reduces them. This lets
// generic code write K(0), K(1), K(2) without threading a field handle.
class Fp {
  public:
    Fp() : val_(0), p_(0) {}
    Fp(long n) : val_(n), p_(0) {}  // NOLINT: implicit literal

    static bool is_odd_prime(std::uint32_t p) {
        if (p < 3 || p % 2 == 0) return false;
        for (std::uint32_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    static Fp make(std::uint32_t p, long long v) {
        if (!is_odd_prime(p)) throw BadScalar("modulus must be an odd prime >= 3, got " + std::to_string(p));
        Fp r;
        r.p_ = p;
        r.val_ = reduce(v, p);
        return r;
    }

    std::uint32_t modulus() const { return p_; }
    long long residue() const { return val_; }
    bool attached() const { return p_ != 0; }

    bool is_zero() const { return val_ == 0; }
    bool is_one() const { return val_ == 1; }

    std::string str() const { return std::to_string(val_); }

    friend Fp operator+(Fp a, Fp b) { unify(a, b); return raw(a.p_, a.val_ + b.val_); }
    friend Fp operator-(Fp a, Fp b) { unify(a, b); return raw(a.p_, a.val_ - b.val_); }
    friend Fp operator*(Fp a, Fp b) { unify(a, b); return raw(a.p_, a.val_ * b.val_); }
    Fp operator-() const { return raw(p_, -val_); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    friend bool operator==(Fp a, Fp b) { unify(a, b); return a.val_ == b.val_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    // Multiplicative inverse by extended Euclid; throws on zero.
    Fp inverse() const {
        if (!attached()) throw BadScalar("cannot invert a field literal with no modulus");
        if (is_zero()) throw BadScalar("division by zero in F_p");
        long long t = 0, new_t = 1, r = p_, new_r = val_;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t; t = new_t; new_t = tmp;
            tmp = r - q * new_r; r = new_r; new_r = tmp;
        }
        return raw(p_, t);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  private:
    static long long reduce(long long v, std::uint32_t p) {
        long long m = v % static_cast<long long>(p);
        return m < 0 ? m + p : m;
    }
    static Fp raw(std::uint32_t p, long long v) {
        Fp r;
        r.p_ = p;
        r.val_ = p ? reduce(v, p) : v;
        return r;
    }
    static void unify(Fp& a, Fp& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ == 0) { a.val_ = reduce(a.val_, b.p_); a.p_ = b.p_; return; }
        if (b.p_ == 0) { b.val_ = reduce(b.val_, a.p_); b.p_ = a.p_; return; }
        throw BadScalar("mixed moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
    }

    long long val_;
    std::uint32_t p_;
};

}  // namespace permlab
