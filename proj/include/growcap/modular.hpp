#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "growcap/error.hpp"
#include "growcap/numeric.hpp"
#include "growcap/scalar.hpp"
#include "growcap/surd.hpp"

namespace growcap {

/// Element of PSL_2(Z): determinant 1, sign fixed so that the first nonzero
/// entry of (c, d) is positive.
class ModularMatrix {
 public:
  /// Throws kDomain unless ad - bc = 1.
  ModularMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static ModularMatrix identity() { return {1, 0, 0, 1}; }
  /// S: w -> -1/w
  static ModularMatrix s() { return {0, -1, 1, 0}; }
  /// T^n: w -> w + n
  static ModularMatrix t(const BigInt& n = 1) { return {1, n, 0, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  ModularMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  std::string to_string() const;

  friend ModularMatrix operator*(const ModularMatrix& l, const ModularMatrix& r);
  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

/// A point of the boundary Q u {oo}: p/q in lowest terms with q >= 0, and
/// oo represented as 1/0.
struct Cusp {
  BigInt p;
  BigInt q;

  static Cusp infinity() { return {1, 0}; }
  static Cusp make(BigInt p, BigInt q);
  bool is_infinity() const { return q == 0; }
  std::string to_string() const;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

template <class S>
struct UpperHalfPoint {
  S x;
  S y;

  UpperHalfPoint(S re, S im) : x(std::move(re)), y(std::move(im)) {
    if (!scalar::is_finite(x) || !scalar::is_finite(y))
      throw Error(ErrorCode::kDomain, "non-finite coordinates");
    if (!(y > S(0))) throw Error(ErrorCode::kDomain, "point must satisfy Im > 0");
  }
};

/// Coefficients of alpha + beta*w in the lattice Z + Z w.
struct LatticeVector {
  BigInt alpha;
  BigInt beta;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

template <class S>
UpperHalfPoint<S> mobius_apply(const ModularMatrix& g, const UpperHalfPoint<S>& w) {
  const S a = scalar::from_int<S>(g.a()), b = scalar::from_int<S>(g.b());
  const S c = scalar::from_int<S>(g.c()), d = scalar::from_int<S>(g.d());
  const S cxd = c * w.x + d;
  const S cy = c * w.y;
  const S den = cxd * cxd + cy * cy;
  const S re = ((a * w.x + b) * cxd + a * c * w.y * w.y) / den;
  return {re, w.y / den};
}

Cusp mobius_apply(const ModularMatrix& g, const Cusp& z);

template <class S>
struct Reduction {
  /// w = g . reduced
  ModularMatrix g;
  UpperHalfPoint<S> reduced;
  std::size_t steps;
};

inline constexpr std::size_t kDefaultReductionCap = 1'000'000;

/// Moves w into D0 = {|Re| <= 1/2, |w| >= 1} by alternating translations and
/// inversions. The representative is unique: Re in [-1/2, 1/2), and on the
/// unit circle Re >= 0, except at the corner (-1 + i sqrt 3)/2 whose other
/// images under S and T all leave the half-open strip.
template <class S>
Reduction<S> reduce_to_fundamental(const UpperHalfPoint<S>& w,
                                   std::size_t cap = kDefaultReductionCap) {
  const S half = scalar::half<S>();
  ModularMatrix g = ModularMatrix::identity();
  S x = w.x;
  S y = w.y;
  for (std::size_t step = 0; step < cap; ++step) {
    const BigInt shift = scalar::floor_int(S(x + half));
    if (shift != 0) {
      x -= scalar::from_int<S>(shift);
      g = g * ModularMatrix::t(shift);
    }
    const S r2 = x * x + y * y;
    const bool inside = r2 < S(1);
    const bool flip_on_circle = r2 == S(1) && x < S(0) && x != -half;
    if (!inside && !flip_on_circle) return {g, {x, y}, step};
    // S w = -conj(w) / |w|^2
    x = -x / r2;
    y = y / r2;
    g = g * ModularMatrix::s();
  }
  throw Error(ErrorCode::kIterationLimit, "fundamental domain reduction did not terminate");
}

template <class S>
struct ShortestVector {
  S norm_sq;  // |alpha + beta w|^2
  LatticeVector witness;

  Real length() const { return boost::multiprecision::sqrt(scalar::to_real(norm_sq)); }
};

/// Exact minimum of |alpha + beta w| over nonzero integer pairs by
/// Lagrange-Gauss reduction of the basis {1, w}.
template <class S>
ShortestVector<S> shortest_vector(const UpperHalfPoint<S>& w) {
  auto embed = [&](const LatticeVector& v) {
    return std::pair<S, S>{scalar::from_int<S>(v.alpha) + scalar::from_int<S>(v.beta) * w.x,
                           scalar::from_int<S>(v.beta) * w.y};
  };
  auto dot = [&](const LatticeVector& u, const LatticeVector& v) {
    auto [ux, uy] = embed(u);
    auto [vx, vy] = embed(v);
    return S(ux * vx + uy * vy);
  };
  LatticeVector u{1, 0};
  LatticeVector v{0, 1};
  S nu = dot(u, u);
  S nv = dot(v, v);
  for (;;) {
    if (nv < nu) {
      std::swap(u, v);
      std::swap(nu, nv);
    }
    const BigInt mu = scalar::floor_int(S(dot(u, v) / nu + scalar::half<S>()));
    if (mu == 0) break;
    v = {v.alpha - mu * u.alpha, v.beta - mu * u.beta};
    nv = dot(v, v);
  }
  return {nu, u};
}

/// f(w) = d(w)^2 / Im(w), evaluated as 1 / Im of the reduced point.
template <class S>
S growth_capacity(const UpperHalfPoint<S>& w) {
  return S(1) / reduce_to_fundamental(w).reduced.y;
}

/// The same value from the shortest lattice vector.
template <class S>
S growth_capacity_direct(const UpperHalfPoint<S>& w) {
  return shortest_vector(w).norm_sq / w.y;
}

template <class S>
struct TangentCircle {
  Cusp cusp;
  S diameter;
};

/// Circle tangent to R at the reduced cusp p/q = g.oo and passing through w;
/// f(w) = diameter * q^2. Throws kCuspAtInfinity when w lies in a translate
/// of D0.
template <class S>
TangentCircle<S> tangent_circle(const UpperHalfPoint<S>& w) {
  const auto red = reduce_to_fundamental(w);
  const Cusp cusp = mobius_apply(red.g, Cusp::infinity());
  if (cusp.is_infinity()) throw Error(ErrorCode::kCuspAtInfinity, "cusp at infinity");
  const S q = scalar::from_int<S>(cusp.q);
  return {cusp, S(S(1) / red.reduced.y) / (q * q)};
}

}  // namespace growcap
