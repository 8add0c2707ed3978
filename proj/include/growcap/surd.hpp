#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "growcap/error.hpp"
#include "growcap/numeric.hpp"

namespace growcap {

/// Exact real quadratic irrational (a + b*sqrt(d)) / c.
///
/// Canonical form: c > 0, d >= 0 squarefree, gcd(a, b, c) = 1, and d > 1
/// exactly when b != 0 (rationals carry b = d = 0). Arithmetic and ordering
/// are exact inside one field Q(sqrt(d)); a rational operand adopts the field
/// of the other. Mixing two distinct irrational radicands throws
/// ErrorCode::kIncomparable.
class Surd {
 public:
  Surd() : a_(0), b_(0), c_(1), d_(0) {}
  Surd(long long n) : a_(n), b_(0), c_(1), d_(0) {}  // NOLINT: implicit
  Surd(const BigInt& n) : a_(n), b_(0), c_(1), d_(0) {}  // NOLINT: implicit
  explicit Surd(const BigRational& r);

  /// Throws kZeroDenominator for c == 0 and kNotRealSurd for d < 0.
  static Surd make(const BigInt& a, const BigInt& b, const BigInt& c,
                   const BigInt& d);
  static Surd rational(const BigInt& num, const BigInt& den);
  /// sqrt(n) for n >= 0.
  static Surd sqrt_of(const BigInt& n);
  /// sqrt(r) for a non-negative rational r.
  static Surd sqrt_of(const BigRational& r);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  /// Throws kDomain when irrational.
  BigRational to_rational() const;
  Surd conjugate() const;
  /// Field norm (a^2 - b^2 d) / c^2.
  BigRational norm() const;
  BigInt floor() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Real to_real() const;
  double to_double() const;

  /// Parser-compatible literal, e.g. "(1+sqrt(5))/2" or "-3/4".
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd l, const Surd& r) { return l += r; }
  friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
  friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
  friend Surd operator/(Surd l, const Surd& r) { return l /= r; }

  friend bool operator==(const Surd& l, const Surd& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  /// Exact ordering; throws kIncomparable across distinct radicands.
  friend std::strong_ordering operator<=>(const Surd& l, const Surd& r);

  /// Radicand shared by both operands (0 when both rational).
  static BigInt common_radicand(const Surd& x, const Surd& y);

 private:
  Surd(BigInt a, BigInt b, BigInt c, BigInt d, bool /*canonical*/)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  void canonicalize();

  BigInt a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// Splits n >= 0 into square * core with core squarefree.
struct SquareSplit {
  BigInt square_root;
  BigInt core;
};
SquareSplit split_square(const BigInt& n);

}  // namespace growcap
