#include "growcap/continued_fraction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace growcap {

const BigInt& ContinuedFraction::term(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  if (period.empty()) throw Error(ErrorCode::kDomain, "index past a finite expansion");
  return period[(i - preperiod.size()) % period.size()];
}

namespace {

void require_irrational(const Surd& x) {
  if (x.is_rational())
    throw Error(ErrorCode::kRationalInput, "rational input: finite expansion");
}

// floor((p + sqrt(dd)) / q) for non-square dd, q != 0.
BigInt floor_quotient(const BigInt& p, const BigInt& root, const BigInt& q) {
  if (q > 0) return floor_div(p + root, q);
  return floor_div(-p - root - 1, -q);
}

}  // namespace

ContinuedFraction cf_expand(const Surd& x, std::size_t cap) {
  require_irrational(x);
  // x = (P + sqrt(D)) / Q with Q | D - P^2.
  BigInt p = x.b() > 0 ? x.a() : BigInt(-x.a());
  BigInt q = x.b() > 0 ? x.c() : BigInt(-x.c());
  BigInt dd = x.b() * x.b() * x.d();
  if ((dd - p * p) % q != 0) {
    const BigInt m = abs_int(q);
    p *= m;
    q *= m;
    dd *= m * m;
  }
  const BigInt root = isqrt(dd);

  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> terms;
  // a_0 always stays in the preperiod, so the search starts at x_1.
  for (std::size_t k = 0; k < cap; ++k) {
    if (k > 0) {
      auto [it, inserted] = seen.emplace(std::make_pair(p, q), k);
      if (!inserted) {
        const auto split = static_cast<std::ptrdiff_t>(it->second);
        ContinuedFraction cf;
        cf.preperiod.assign(terms.begin(), terms.begin() + split);
        cf.period.assign(terms.begin() + split, terms.end());
        return cf;
      }
    }
    BigInt a = floor_quotient(p, root, q);
    p = a * q - p;
    q = (dd - p * p) / q;
    terms.push_back(std::move(a));
  }
  throw Error(ErrorCode::kIterationLimit, "continued fraction period not found within cap");
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::kDomain, "convergent count must be >= 1");
  std::vector<Convergent> out;
  out.reserve(count);
  BigInt p_prev = 1, q_prev = 0;
  BigInt p = cf.term(0), q = 1;
  out.push_back({0, p, q});
  for (std::size_t n = 1; n < count; ++n) {
    const BigInt& a = cf.term(n);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::exchange(p, std::move(p_next));
    q_prev = std::exchange(q, std::move(q_next));
    out.push_back({n, p, q});
  }
  return out;
}

Surd periodic_value(std::span<const BigInt> period) {
  if (period.empty()) throw Error(ErrorCode::kDomain, "empty period");
  // [c_0; ..., c_{k-1}, y] = (P y + P') / (Q y + Q') with y the value itself.
  BigInt pm = 1, pp = 0, qm = 0, qp = 1;  // columns (P, Q) and (P', Q')
  for (const BigInt& c : period) {
    BigInt np = c * pm + pp;
    BigInt nq = c * qm + qp;
    pp = std::exchange(pm, std::move(np));
    qp = std::exchange(qm, std::move(nq));
  }
  // Q y^2 + (Q' - P) y - P' = 0, positive root.
  const BigInt lin = pm - qp;
  return Surd::make(lin, 1, 2 * qm, lin * lin + 4 * pp * qm);
}

Surd complete_quotient(const Surd& x, std::size_t n) {
  require_irrational(x);
  if (n == 0) return x;
  const auto cf = cf_expand(x);
  const auto conv = convergents(cf, n);
  // x = (p_{n-1} x_n + p_{n-2}) / (q_{n-1} x_n + q_{n-2})
  const Convergent& last = conv[n - 1];
  BigInt p2 = 1, q2 = 0;
  if (n >= 2) {
    p2 = conv[n - 2].p;
    q2 = conv[n - 2].q;
  }
  return (Surd(p2) - Surd(q2) * x) / (Surd(last.q) * x - Surd(last.p));
}

Surd lambda_n(const Surd& x, std::size_t n) {
  require_irrational(x);
  if (n == 0) throw Error(ErrorCode::kDomain, "lambda_n undefined for n=0");
  const auto conv = convergents(cf_expand(x), n + 1);
  const Convergent& cur = conv[n];
  const Convergent& prev = conv[n - 1];
  const Surd tail = (Surd(prev.p) - Surd(prev.q) * x) / (Surd(cur.q) * x - Surd(cur.p));
  return Surd::rational(prev.q, cur.q) + tail;
}

LagrangeEstimate lagrange_number(const Surd& x, std::size_t depth) {
  require_irrational(x);
  if (depth == 0) throw Error(ErrorCode::kDomain, "depth must be >= 1");
  const auto cf = cf_expand(x);
  const std::size_t len = cf.period.size();

  std::optional<Surd> limit;
  for (std::size_t j = 0; j < len; ++j) {
    std::vector<BigInt> forward(len), backward(len);
    for (std::size_t k = 0; k < len; ++k) {
      forward[k] = cf.period[(j + 1 + k) % len];
      backward[k] = cf.period[(j + len - k) % len];
    }
    Surd phase = periodic_value(forward) + Surd(1) / periodic_value(backward);
    if (!limit || phase > *limit) limit = std::move(phase);
  }

  const std::size_t first = depth >= len ? std::max<std::size_t>(1, depth - len + 1) : 1;
  const auto conv = convergents(cf, depth + 1);
  std::optional<Surd> best;
  for (std::size_t n = first; n <= depth; ++n) {
    const Surd u = (Surd(conv[n].q) * (Surd(conv[n].q) * x - Surd(conv[n].p))).abs();
    Surd lam = Surd(1) / u;
    if (!best || lam > *best) best = std::move(lam);
  }
  return {*limit, *best, first, depth};
}

}  // namespace growcap
