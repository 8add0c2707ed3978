#include "growcap/profile.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

namespace growcap {

namespace {

void require_irrational(const Surd& x) {
  if (x.is_rational())
    throw Error(ErrorCode::kRationalInput, "rational input: finite expansion");
}

// Inverse of a modulo m (m >= 2, gcd(a, m) = 1), in [0, m).
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = ((a % m) + m) % m;
  BigInt s0 = 0, s1 = 1;
  while (r1 != 0) {
    const BigInt k = r0 / r1;
    r0 = std::exchange(r1, r0 - k * r1);
    s0 = std::exchange(s1, s0 - k * s1);
  }
  return ((s0 % m) + m) % m;
}

// Lazily walks the classical convergents and keeps the Hermite ones.
class HermiteStream {
 public:
  explicit HermiteStream(const Surd& x) : x_(x), cf_(cf_expand(x)) {}

  std::size_t classical_seen() const { return n_; }

  HermiteConvergent next() {
    for (;;) {
      const BigInt& a = cf_.term(n_);
      BigInt p = a * p_ + p_prev_;
      BigInt q = a * q_ + q_prev_;
      p_prev_ = std::exchange(p_, p);
      q_prev_ = std::exchange(q_, q);
      const std::size_t index = n_++;
      if (humbert_is_hermite(x_, p, q)) return {index, rank_++, std::move(p), std::move(q)};
      if (n_ > 4 * rank_ + 64)
        throw Error(ErrorCode::kIterationLimit, "Hermite convergents too sparse");
    }
  }

 private:
  Surd x_;
  ContinuedFraction cf_;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  BigInt p_ = 1, q_ = 0, p_prev_ = 0, q_prev_ = 1;
};

struct Branch {
  Surd linear;
  Surd inverse;
};

Branch branch_of(const Surd& x, const BigInt& p, const BigInt& q) {
  const Surd err = Surd(q) * x - Surd(p);
  return {err * err, Surd(q * q)};
}

// t^2 at which the two branches agree.
Surd crossing_sq(const Branch& before, const Branch& after) {
  return (after.inverse - before.inverse) / (before.linear - after.linear);
}

ProfilePiece make_piece(const HermiteConvergent& h, const Branch& b, Surd start_sq,
                        Surd end_sq) {
  return {h.rank, h.index, h.p, h.q, b.linear, b.inverse, std::move(start_sq), std::move(end_sq)};
}

CapacityProfile assemble(const Surd& x, const std::vector<HermiteConvergent>& hs) {
  std::vector<ProfilePiece> pieces;
  pieces.reserve(hs.size() - 1);
  Branch prev{Surd(1), Surd(0)};  // the cusp at infinity: f = t
  Branch cur = branch_of(x, hs[0].p, hs[0].q);
  Surd start = crossing_sq(prev, cur);
  for (std::size_t k = 0; k + 1 < hs.size(); ++k) {
    Branch next = branch_of(x, hs[k + 1].p, hs[k + 1].q);
    Surd end = crossing_sq(cur, next);
    pieces.push_back(make_piece(hs[k], cur, start, end));
    start = std::move(end);
    cur = std::move(next);
  }
  return CapacityProfile(x, std::move(pieces));
}

Surd two_u(const Surd& x, const BigInt& p, const BigInt& q) {
  return Surd(2) * (Surd(q) * (Surd(q) * x - Surd(p))).abs();
}

}  // namespace

bool humbert_is_hermite(const Surd& x, const BigInt& p, const BigInt& q) {
  require_irrational(x);
  if (q < 1) throw Error(ErrorCode::kDomain, "denominator must be >= 1");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw Error(ErrorCode::kNotIrreducible, "fraction not irreducible");
  const Surd v = Surd(q) * (Surd(p) - Surd(q) * x);
  const int eps = v.sign();
  const Surd u = eps > 0 ? v : -v;
  BigInt qp = 0;
  if (q > 1) qp = (BigInt(eps) * mod_inverse(p, q) % q + q) % q;
  const BigRational bound(q * (q + 2 * qp), 2 * (q * q + q * qp + qp * qp));
  return u < Surd(bound);
}

std::vector<HermiteConvergent> hermite_convergents(const Surd& x, std::size_t count) {
  require_irrational(x);
  std::vector<HermiteConvergent> out;
  if (count == 0) return out;
  for (const Convergent& c : convergents(cf_expand(x), count)) {
    if (humbert_is_hermite(x, c.p, c.q)) out.push_back({c.n, out.size(), c.p, c.q});
  }
  return out;
}

std::vector<HermiteConvergent> first_hermite_convergents(const Surd& x, std::size_t count) {
  require_irrational(x);
  HermiteStream stream(x);
  std::vector<HermiteConvergent> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(stream.next());
  return out;
}

namespace {

class GeodesicWalker {
 public:
  GeodesicWalker(const Surd& x) : x_(x.to_real()) {}

  Cusp cusp_at(const Real& t) const {
    const auto red = reduce_to_fundamental(UpperHalfPoint<Real>(x_, Real(1) / t));
    return mobius_apply(red.g, Cusp::infinity());
  }

  // Appends, in order, the cusps met after `a` up to and including `c`.
  void walk(const Real& lo, const Cusp& a, const Real& hi, const Cusp& c,
            std::vector<Cusp>& out, int depth = 0) const {
    if (a == c) return;
    if (depth > 4000 || hi - lo <= lo * Real(1e-60))
      throw Error(ErrorCode::kIterationLimit, "geodesic refinement did not resolve");
    const BigInt det = a.p * c.q - c.p * a.q;
    if (det == 1 || det == -1) {
      if (auto tc = crossing(a, c); tc && *tc > lo && *tc < hi) {
        const Cusp b = cusp_at(*tc);
        if (b == a || b == c) {
          out.push_back(c);
          return;
        }
        walk(lo, a, *tc, b, out, depth + 1);
        walk(*tc, b, hi, c, out, depth + 1);
        return;
      }
    }
    const Real mid = boost::multiprecision::sqrt(lo * hi);
    const Cusp m = cusp_at(mid);
    walk(lo, a, mid, m, out, depth + 1);
    walk(mid, m, hi, c, out, depth + 1);
  }

 private:
  std::optional<Real> crossing(const Cusp& a, const Cusp& c) const {
    auto lin = [&](const Cusp& z) {
      const Real e = to_real(z.q) * x_ - to_real(z.p);
      return Real(e * e);
    };
    auto inv = [&](const Cusp& z) { return Real(to_real(z.q) * to_real(z.q)); };
    const Real num = inv(c) - inv(a);
    const Real den = lin(a) - lin(c);
    if (den == 0 || num / den <= 0) return std::nullopt;
    return boost::multiprecision::sqrt(num / den);
  }

  Real x_;
};

}  // namespace

std::vector<Cusp> hermite_oracle_geodesic(const Surd& x, const Real& t_max) {
  require_irrational(x);
  if (!(t_max > 0)) throw Error(ErrorCode::kDomain, "t_max must be positive");
  const double log2_t = std::max(0.0, std::log2(t_max.convert_to<double>()));
  const unsigned needed = static_cast<unsigned>(2 * log2_t) + 128;
  const unsigned current = static_cast<unsigned>(Real::default_precision() * 3.33) + 1;
  PrecisionScope scope(std::max(needed, current));

  const Real top(t_max);
  const GeodesicWalker walker(x);
  std::vector<Real> ts;
  for (Real t = Real(1) / 2; t < top; t *= 2) ts.push_back(t);
  ts.push_back(top);

  std::vector<Cusp> seq;
  Cusp prev = walker.cusp_at(ts.front());
  seq.push_back(prev);
  for (std::size_t k = 1; k < ts.size(); ++k) {
    const Cusp cur = walker.cusp_at(ts[k]);
    walker.walk(ts[k - 1], prev, ts[k], cur, seq);
    prev = cur;
  }
  std::vector<Cusp> out;
  for (const Cusp& c : seq) {
    if (c.is_infinity()) continue;
    if (out.empty() || !(out.back() == c)) out.push_back(c);
  }
  return out;
}

Real ProfilePiece::start() const { return boost::multiprecision::sqrt(start_sq.to_real()); }
Real ProfilePiece::end() const { return boost::multiprecision::sqrt(end_sq.to_real()); }
Real ProfilePiece::value_at(const Real& t) const {
  return linear.to_real() * t + inverse.to_real() / t;
}

CapacityProfile::CapacityProfile(Surd x, std::vector<ProfilePiece> pieces)
    : x_(std::move(x)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::kDomain, "profile needs at least one piece");
  for (const ProfilePiece& p : pieces_) {
    if (!(p.start_sq < p.end_sq))
      throw Error(ErrorCode::kDomain, "profile breakpoints are not increasing");
  }
}

std::vector<Surd> CapacityProfile::breakpoints_sq() const {
  std::vector<Surd> out;
  out.reserve(pieces_.size() + 1);
  for (const ProfilePiece& p : pieces_) out.push_back(p.start_sq);
  out.push_back(pieces_.back().end_sq);
  return out;
}

std::vector<Real> CapacityProfile::breakpoints() const {
  std::vector<Real> out;
  for (const Surd& s : breakpoints_sq()) out.push_back(boost::multiprecision::sqrt(s.to_real()));
  return out;
}

std::ptrdiff_t CapacityProfile::locate(const Surd& t) const {
  if (t.sign() <= 0) throw Error(ErrorCode::kDomain, "t must be positive");
  const Surd t2 = t * t;
  if (!(t2 < pieces_.back().end_sq)) throw Error(ErrorCode::kDomain, "t beyond profile range");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t2,
                             [](const Surd& v, const ProfilePiece& p) { return v < p.start_sq; });
  return (it - pieces_.begin()) - 1;
}

std::ptrdiff_t CapacityProfile::locate(const Real& t) const {
  if (!(t > 0)) throw Error(ErrorCode::kDomain, "t must be positive");
  const Real t2 = t * t;
  if (!(t2 < pieces_.back().end_sq.to_real()))
    throw Error(ErrorCode::kDomain, "t beyond profile range");
  std::ptrdiff_t lo = -1;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (pieces_[k].start_sq.to_real() <= t2) lo = static_cast<std::ptrdiff_t>(k);
    else break;
  }
  return lo;
}

Surd CapacityProfile::evaluate(const Surd& t) const {
  const auto k = locate(t);
  return k < 0 ? t : pieces_[static_cast<std::size_t>(k)].value_at(t);
}

Real CapacityProfile::evaluate(const Real& t) const {
  const auto k = locate(t);
  return k < 0 ? t : pieces_[static_cast<std::size_t>(k)].value_at(t);
}

CapacityProfile build_profile(const Surd& x, std::size_t count) {
  require_irrational(x);
  if (count < 2) throw Error(ErrorCode::kDomain, "profile needs at least 2 Hermite convergents");
  return assemble(x, first_hermite_convergents(x, count + 1));
}

CapacityProfile build_profile_until(const Surd& x, const Real& t_max) {
  require_irrational(x);
  if (!(t_max > 0)) throw Error(ErrorCode::kDomain, "t_max must be positive");
  constexpr std::size_t kMaxPieces = 100'000;
  HermiteStream stream(x);
  std::vector<HermiteConvergent> hs{stream.next(), stream.next(), stream.next()};
  const Real target = t_max * t_max;
  for (;;) {
    const Branch a = branch_of(x, hs[hs.size() - 2].p, hs[hs.size() - 2].q);
    const Branch b = branch_of(x, hs.back().p, hs.back().q);
    if (crossing_sq(a, b).to_real() > target) break;
    if (hs.size() > kMaxPieces) throw Error(ErrorCode::kIterationLimit, "t_max too large");
    hs.push_back(stream.next());
  }
  return assemble(x, hs);
}

Real LocalMinimum::t() const { return boost::multiprecision::sqrt(t_sq.to_real()); }

std::vector<LocalMinimum> local_minima(const CapacityProfile& profile) {
  std::vector<LocalMinimum> out;
  out.reserve(profile.pieces().size());
  for (const ProfilePiece& p : profile.pieces()) {
    Surd t_sq = p.inverse / p.linear;
    const bool interior = !(t_sq < p.start_sq) && !(p.end_sq < t_sq);
    out.push_back({p.rank, p.index, two_u(profile.x(), p.p, p.q), std::move(t_sq), interior});
  }
  return out;
}

MinimaLimit minima_limit(const Surd& x, std::size_t depth) {
  require_irrational(x);
  if (depth < 1) throw Error(ErrorCode::kDomain, "depth must be >= 1");
  const auto cf = cf_expand(x);
  const std::size_t span = std::max<std::size_t>(cf.period.size(), 2);
  const std::size_t first = depth + 1 > span ? depth + 1 - span : 0;
  std::optional<Surd> lo, hi;
  for (const HermiteConvergent& h : hermite_convergents(x, depth + 1)) {
    if (h.index < first) continue;
    Surd v = two_u(x, h.p, h.q);
    if (!lo || v < *lo) lo = v;
    if (!hi || *hi < v) hi = v;
  }
  if (!lo) throw Error(ErrorCode::kDomain, "no Hermite convergent in the final period");
  const Surd exact = Surd(2) / lagrange_number(x, depth).limit;
  return {*lo, *hi, exact, first, depth};
}

}  // namespace growcap
