#ifndef GROWTHLAB_RATIONAL_HPP
#define GROWTHLAB_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace growthlab {

// Exact arithmetic for the combinatorial layers (Gromov products,
// cylinder masses, power-series coefficients). Everything at desk scale
// fits comfortably in 64 bits.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// r^n for n >= 0.
inline Rational rational_pow(Rational r, int n) {
  Rational out(1);
  while (n > 0) {
    if (n & 1) out *= r;
    r *= r;
    n >>= 1;
  }
  return out;
}

}  // namespace growthlab

#endif
