#include "growcap/surd.hpp"

#include <ostream>
#include <utility>

namespace growcap {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

}  // namespace

SquareSplit split_square(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::kNotRealSurd, "not a real surd");
  if (n == 0) return {BigInt(1), BigInt(0)};
  BigInt rest = n;
  BigInt root = 1;
  BigInt core = 1;
  // Strip every prime p with p^3 <= rest; what remains is 1, a prime, a
  // product of two primes, or a prime square.
  for (BigInt p = 2; p * p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      core *= p;
    }
  }
  const BigInt r = isqrt(rest);
  if (rest > 1 && r * r == rest) {
    root *= r;
  } else {
    core *= rest;
  }
  return {root, core};
}

Surd::Surd(const BigRational& r)
    : a_(boost::multiprecision::numerator(r)),
      b_(0),
      c_(boost::multiprecision::denominator(r)),
      d_(0) {}

Surd Surd::make(const BigInt& a, const BigInt& b, const BigInt& c,
                const BigInt& d) {
  if (c == 0) throw Error(ErrorCode::kZeroDenominator, "zero denominator");
  if (d < 0) throw Error(ErrorCode::kNotRealSurd, "not a real surd");
  Surd s(a, b, c, d, false);
  if (s.b_ != 0 && s.d_ > 1) {
    auto split = split_square(s.d_);
    s.b_ *= split.square_root;
    s.d_ = split.core;
  }
  s.canonicalize();
  return s;
}

Surd Surd::rational(const BigInt& num, const BigInt& den) {
  return make(num, 0, den, 0);
}

Surd Surd::sqrt_of(const BigInt& n) { return make(0, 1, 1, n); }

Surd Surd::sqrt_of(const BigRational& r) {
  if (r < 0) throw Error(ErrorCode::kNotRealSurd, "not a real surd");
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  // sqrt(n/m) = sqrt(n*m)/m
  return make(0, 1, den, num * den);
}

void Surd::canonicalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  }
  BigInt g = gcd3(a_, b_, c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  const int cmp = (a_ * a_).compare(b_ * b_ * d_);
  return cmp > 0 ? sa : sb;
}

BigRational Surd::to_rational() const {
  if (!is_rational()) throw Error(ErrorCode::kDomain, "value is irrational");
  return BigRational(a_, c_);
}

Surd Surd::conjugate() const { return Surd(a_, -b_, c_, d_, true); }

BigRational Surd::norm() const {
  return BigRational(a_ * a_ - b_ * b_ * d_, c_ * c_);
}

BigInt Surd::floor() const {
  if (is_rational()) return floor_div(a_, c_);
  // floor(b sqrt d) is exact from the integer square root; adding the
  // fractional part to the integer numerator never crosses a multiple of c.
  const BigInt root = isqrt(b_ * b_ * d_);
  const BigInt whole = b_ > 0 ? root : BigInt(-root - 1);
  return floor_div(a_ + whole, c_);
}

Real Surd::to_real() const {
  const Real c = growcap::to_real(c_);
  if (b_ == 0) return growcap::to_real(a_) / c;
  const Real root = growcap::to_real(b_) * boost::multiprecision::sqrt(growcap::to_real(d_));
  if ((a_ < 0) == (b_ < 0) || a_ == 0) return (growcap::to_real(a_) + root) / c;
  // Opposite signs cancel; divide the exact norm by the conjugate instead.
  const BigInt n = a_ * a_ - b_ * b_ * d_;
  return growcap::to_real(n) / ((growcap::to_real(a_) - root) * c);
}

double Surd::to_double() const { return to_real().convert_to<double>(); }

std::string Surd::to_string() const {
  if (is_rational()) {
    if (c_ == 1) return a_.str();
    return a_.str() + "/" + c_.str();
  }
  std::string radical = "sqrt(" + d_.str() + ")";
  const BigInt mag = abs_int(b_);
  if (mag != 1) radical = mag.str() + "*" + radical;
  std::string num;
  if (a_ == 0) {
    num = (b_ < 0 ? "-" : "") + radical;
    return c_ == 1 ? num : num + "/" + c_.str();
  }
  num = a_.str() + (b_ < 0 ? "-" : "+") + radical;
  return c_ == 1 ? num : "(" + num + ")/" + c_.str();
}

BigInt Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw Error(ErrorCode::kIncomparable,
              "incomparable exactly: radicands " + x.d_.str() + " and " +
                  y.d_.str());
}

Surd Surd::operator-() const { return Surd(-a_, -b_, c_, d_, true); }

Surd& Surd::operator+=(const Surd& o) {
  const BigInt d = common_radicand(*this, o);
  a_ = a_ * o.c_ + o.a_ * c_;
  b_ = b_ * o.c_ + o.b_ * c_;
  c_ *= o.c_;
  d_ = d;
  canonicalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
  const BigInt d = common_radicand(*this, o);
  BigInt a = a_ * o.a_ + b_ * o.b_ * d;
  BigInt b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ *= o.c_;
  d_ = d;
  canonicalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.is_zero()) throw Error(ErrorCode::kZeroDenominator, "zero denominator");
  common_radicand(*this, o);
  // 1/o = c (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero for d squarefree.
  const BigInt n = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  Surd inv(o.c_ * o.a_, -o.c_ * o.b_, n, o.d_, false);
  inv.canonicalize();
  return *this *= inv;
}

std::strong_ordering operator<=>(const Surd& l, const Surd& r) {
  if (l == r) return std::strong_ordering::equal;
  const int s = (l - r).sign();
  if (s == 0) return std::strong_ordering::equal;
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) {
  return os << s.to_string();
}

}  // namespace growcap
