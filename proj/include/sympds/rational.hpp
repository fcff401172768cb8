#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sympds::detail {

// Minimal exact rational on int64.  Only what the harmonic projection needs;
// magnitudes stay far below overflow for the supported (d, k) budget.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_zero() const { return num == 0; }
  double to_double() const { return double(num) / double(den); }

  friend Rational operator+(Rational a, Rational b) {
    const std::int64_t g = std::gcd(a.den, b.den);
    return Rational(a.num * (b.den / g) + b.num * (a.den / g),
                    a.den / g * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return a + Rational(-b.num, b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    const std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    const std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den, b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace sympds::detail
