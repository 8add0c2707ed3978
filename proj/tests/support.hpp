#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "growcap/literal.hpp"
#include "growcap/modular.hpp"
#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

namespace test_support {

using namespace growcap;

struct Named {
  std::string literal;
  Surd x;
};

// The inputs used throughout the checks.
inline std::vector<Named> named_values() {
  std::vector<Named> out;
  for (const char* s : {"phi", "sqrt(2)-1", "sqrt(3)-1", "sqrt(7)-1", "psi", "(11+sqrt(221))/10"})
    out.push_back({s, parse_surd(s)});
  return out;
}

// min |alpha + beta w|^2 over 0 < max(|alpha|, |beta|) <= bound.
template <class S>
S naive_shortest_sq(const S& x, const S& y, int bound = 8) {
  S best = S(-1);
  for (int b = -bound; b <= bound; ++b) {
    for (int a = -bound; a <= bound; ++a) {
      if (a == 0 && b == 0) continue;
      const S re = S(a) + S(b) * x;
      const S im = S(b) * y;
      const S n = re * re + im * im;
      if (best < S(0) || n < best) best = n;
    }
  }
  return best;
}

// f(x + i/t) = min over (p, q) != 0 of (q x - p)^2 t + q^2 / t. Only
// q <= sqrt(1.2 t) can beat the bound 2/sqrt(3).
inline Real envelope_capacity(const Real& x, const Real& t) {
  Real best = t;  // (p, q) = (1, 0)
  const long qmax = static_cast<long>(std::sqrt(1.2 * t.convert_to<double>())) + 1;
  for (long q = 1; q <= qmax; ++q) {
    const BigInt near = floor_to_int(Real(x * q + Real(0.5)));
    for (int dp = -1; dp <= 1; ++dp) {
      const Real e = Real(x * q) - to_real(BigInt(near + dp));
      const Real v = e * e * t + Real(q) * Real(q) / t;
      if (v < best) best = v;
    }
  }
  return best;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double eps, int depth) {
  const double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * eps) return left + right + delta / 15;
  return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

// Adaptive Simpson quadrature.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, 50);
}

// Random word in S and T^{+-1} of length <= max_len.
inline ModularMatrix random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 2);
  ModularMatrix g = ModularMatrix::identity();
  for (int k = len(rng); k > 0; --k) {
    switch (pick(rng)) {
      case 0: g = g * ModularMatrix::s(); break;
      case 1: g = g * ModularMatrix::t(1); break;
      default: g = g * ModularMatrix::t(-1); break;
    }
  }
  return g;
}

inline Surd random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> num(lo * den, hi * den);
  return Surd::rational(num(rng), den);
}

inline Real real_of(double v) { return Real(v); }

}  // namespace test_support
