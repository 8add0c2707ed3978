#pragma once

#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

// Uniform access to the two scalar tiers: exact Surd and high-precision Real.
namespace growcap::scalar {

inline Real to_real(const Real& r) { return r; }
inline Real to_real(const Surd& s) { return s.to_real(); }

inline BigInt floor_int(const Real& r) { return floor_to_int(r); }
inline BigInt floor_int(const Surd& s) { return s.floor(); }

inline bool is_finite(const Real& r) { return boost::multiprecision::isfinite(r); }
inline bool is_finite(const Surd&) { return true; }

template <class S>
S from_int(const BigInt& n);

template <>
inline Surd from_int<Surd>(const BigInt& n) {
  return Surd(n);
}

template <>
inline Real from_int<Real>(const BigInt& n) {
  return growcap::to_real(n);
}

template <class S>
S half() {
  return S(1) / S(2);
}

template <class S>
S abs(const S& v) {
  return v < S(0) ? S(-v) : v;
}

}  // namespace growcap::scalar
