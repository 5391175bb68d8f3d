#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "gesbell/errors.hpp"

namespace ges {

// Exact rational with 64-bit numerator/denominator and overflow checks on
// the 128-bit intermediates. Plenty for Bell coefficients and bounds.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) throw error("Rational: overflow");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  // Doubles are dyadic rationals, so this conversion is exact.
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw error("Rational: non-finite value");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(v, &exp);  // v = m * 2^exp, 0.5 <= |m| < 1
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    __int128 n = mant, d = 1;
    if (exp >= 0) {
      if (exp > 62) throw error("Rational: exponent out of range");
      n <<= exp;
    } else {
      if (exp < -62) throw error("Rational: exponent out of range");
      d <<= -exp;
    }
    return from_i128(n, d);
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

  // -1, 0, +1
  int sign() const { return num < 0 ? -1 : (num > 0 ? 1 : 0); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

// Element of Q[sqrt(2)]: a + b*sqrt(2), exact. All Bell weights and bounds in
// this toolkit live here, so bound comparisons never go through floats.
struct Root2 {
  Rational a;
  Rational b;

  Root2() = default;
  Root2(std::int64_t v) : a(v), b(0) {}  // NOLINT: implicit by design
  Root2(Rational ra, Rational rb) : a(ra), b(rb) {}

  static Root2 sqrt2() { return Root2(Rational(0), Rational(1)); }

  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(2.0); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend Root2 operator+(const Root2& x, const Root2& y) { return {x.a + y.a, x.b + y.b}; }
  friend Root2 operator-(const Root2& x, const Root2& y) { return {x.a - y.a, x.b - y.b}; }
  friend Root2 operator-(const Root2& x) { return {-x.a, -x.b}; }
  friend Root2 operator*(const Root2& x, const Root2& y) {
    return {x.a * y.a + Rational(2) * (x.b * y.b), x.a * y.b + x.b * y.a};
  }

  // Sign of a + b*sqrt(2), decided exactly by comparing a^2 with 2 b^2.
  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational a2 = a * a;
    Rational b2 = Rational(2) * (b * b);
    if (a2 == b2) return 0;  // only at a = b = 0, handled above; kept for safety
    bool a2_larger = b2 < a2;
    return a2_larger ? sa : sb;
  }

  friend bool operator==(const Root2& x, const Root2& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Root2& x, const Root2& y) { return !(x == y); }
  friend bool operator<(const Root2& x, const Root2& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const Root2& x, const Root2& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const Root2& x, const Root2& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const Root2& x, const Root2& y) { return (x - y).sign() >= 0; }
};

inline std::string to_string(const Root2& v) {
  auto frac = [](const Rational& r) {
    std::string s = std::to_string(r.num);
    if (r.den != 1) s += "/" + std::to_string(r.den);
    return s;
  };
  if (v.b.is_zero()) return frac(v.a);
  std::string s;
  if (!v.a.is_zero()) s += frac(v.a) + (v.b.sign() > 0 ? "+" : "");
  s += frac(v.b) + "*sqrt2";
  return s;
}

}  // namespace ges
