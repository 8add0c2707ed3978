#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace growcap {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
// Variable-precision binary float. New values take the precision of the
// innermost active PrecisionScope (default 128 bits).
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 64;

inline unsigned bits_to_digits10(unsigned bits) {
  return bits * 30103u / 100000u + 1u;
}

// Sets the working precision of Real for its lifetime. Boost keeps the default
// precision process-wide, so scopes with different precisions must not run
// concurrently.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const BigInt& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.backend().data(), MPFR_RNDN);
  return r;
}

inline Real to_real(const BigRational& r) {
  return to_real(boost::multiprecision::numerator(r)) /
         to_real(boost::multiprecision::denominator(r));
}

inline BigInt floor_to_int(const Real& r) {
  BigInt z;
  mpfr_get_z(z.backend().data(), r.backend().data(), MPFR_RNDD);
  return z;
}

// Floor division for integers of either sign.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline BigInt abs_int(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

// Decimal rendering with `digits` significant digits.
inline std::string to_decimal(const Real& r, int digits = 20) {
  return r.str(digits);
}

}  // namespace growcap
