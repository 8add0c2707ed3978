#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

namespace growcap {

inline constexpr std::size_t kDefaultCfIterationCap = 1'000'000;

/// Eventually periodic expansion [a_0; a_1, a_2, ...] of a quadratic surd.
/// a_0 = floor(x) may be zero or negative; later partial quotients are >= 1.
struct ContinuedFraction {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  /// Partial quotient a_i of the infinite expansion.
  const BigInt& term(std::size_t i) const;
  bool is_finite() const { return period.empty(); }
};

/// p_n / q_n = [a_0; ..., a_n].
struct Convergent {
  std::size_t n;
  BigInt p;
  BigInt q;
};

/// Exact expansion by the integer (P, Q, D) recurrence for complete quotients
/// (P + sqrt(D)) / Q; the period starts at the first repeated state.
/// Throws kRationalInput for rational x and kIterationLimit past `cap` steps.
ContinuedFraction cf_expand(const Surd& x,
                            std::size_t cap = kDefaultCfIterationCap);

/// The first `count` convergents (indices 0 .. count-1). Requires count >= 1.
std::vector<Convergent> convergents(const ContinuedFraction& cf,
                                    std::size_t count);

/// Value of the purely periodic expansion [c_0; c_1, ..., c_{k-1}, c_0, ...].
Surd periodic_value(std::span<const BigInt> period);

/// Complete quotient x_n = [a_n; a_{n+1}, ...], exact.
Surd complete_quotient(const Surd& x, std::size_t n);

/// lambda_n(x) = [a_n; ..., a_1]^{-1} + [a_{n+1}; a_{n+2}, ...], so that
/// |q_n (q_n x - p_n)| = 1 / lambda_n(x). Always an exact surd because the
/// tail is a complete quotient of x. Throws kDomain for n == 0.
Surd lambda_n(const Surd& x, std::size_t n);

struct LagrangeEstimate {
  /// limsup of lambda_n(x): the exact Lagrange number.
  Surd limit;
  /// max lambda_n over the last full period of indices ending at `depth`.
  Surd window_max;
  std::size_t window_first;
  std::size_t window_last;
};

/// Lagrange number of an irrational quadratic x. The limit is exact: within
/// one phase of the period, q_{n-1}/q_n tends to the reversed periodic
/// expansion, so each phase contributes a closed-form surd.
LagrangeEstimate lagrange_number(const Surd& x, std::size_t depth);

}  // namespace growcap
