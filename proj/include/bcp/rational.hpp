#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bcp {

// Exact nonnegative rational. Densities and thresholds are compared exactly;
// doubles appear only at presentation and entropy evaluation.
struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;

  Rational() = default;
  Rational(uint64_t n, uint64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace bcp
