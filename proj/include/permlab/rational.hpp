#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "permlab/error.hpp"

namespace permlab {

// Exact rational scalar. Thin value wrapper over an arbitrary-precision
// rational; always kept canonical (gcd-reduced, positive denominator).
class Rational {
  public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors K(0)/K(1)
    explicit Rational(Backend v) : v_(std::move(v)) {}

    static Rational parse(const std::string& s) {
        std::size_t i = 0;
        bool neg = false;
        auto fail = [&](const char* msg) { throw BadScalar(std::string(msg) + ": '" + s + "'"); };
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        std::size_t num_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == num_start) fail("bad rational literal");
        boost::multiprecision::cpp_int num(s.substr(num_start, i - num_start));
        boost::multiprecision::cpp_int den(1);
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::size_t den_start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == den_start) fail("bad rational literal");
            den = boost::multiprecision::cpp_int(s.substr(den_start, i - den_start));
            if (den == 0) fail("zero denominator");
        }
        if (i != s.size()) fail("trailing characters in rational literal");
        Backend v(num, den);
        if (neg) v = -v;
        return Rational(std::move(v));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    boost::multiprecision::cpp_int numerator() const { return boost::multiprecision::numerator(v_); }
    boost::multiprecision::cpp_int denominator() const { return boost::multiprecision::denominator(v_); }

    std::string str() const { return v_.str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw BadScalar("division by zero rational");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  private:
    Backend v_{0};
};

}  // namespace permlab
