#include "growcap/modular.hpp"

namespace growcap {

ModularMatrix::ModularMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw Error(ErrorCode::kDomain, "modular matrix must have determinant 1");
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ModularMatrix operator*(const ModularMatrix& l, const ModularMatrix& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

std::string ModularMatrix::to_string() const {
  return "[" + a_.str() + " " + b_.str() + "; " + c_.str() + " " + d_.str() + "]";
}

Cusp Cusp::make(BigInt p, BigInt q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::kDomain, "0/0 is not a cusp");
  if (q == 0) return infinity();
  const BigInt g = boost::multiprecision::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::string Cusp::to_string() const {
  if (is_infinity()) return "inf";
  return p.str() + "/" + q.str();
}

Cusp mobius_apply(const ModularMatrix& g, const Cusp& z) {
  return Cusp::make(g.a() * z.p + g.b() * z.q, g.c() * z.p + g.d() * z.q);
}

}  // namespace growcap
