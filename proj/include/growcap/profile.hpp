#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "growcap/continued_fraction.hpp"
#include "growcap/modular.hpp"
#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

namespace growcap {

/// A classical convergent that is also a cusp crossed by the vertical
/// geodesic Re w = x.
struct HermiteConvergent {
  std::size_t index;  // position n in the classical sequence p_n / q_n
  std::size_t rank;   // position within the Hermite subsequence
  BigInt p;
  BigInt q;
};

/// Humbert's test: with u = |q (p - q x)| and q' in [0, q) solving
/// p q' = sign(p - q x) (mod q), p/q is a Hermite convergent of x iff
/// u < q (q + 2q') / (2 (q^2 + q q' + q'^2)). Decided exactly.
/// Throws kNotIrreducible when gcd(p, q) != 1 and kDomain when q < 1.
bool humbert_is_hermite(const Surd& x, const BigInt& p, const BigInt& q);

/// Hermite convergents among the first `count` classical convergents.
std::vector<HermiteConvergent> hermite_convergents(const Surd& x, std::size_t count);

/// The first `count` Hermite convergents, however many classical ones that takes.
std::vector<HermiteConvergent> first_hermite_convergents(const Surd& x, std::size_t count);

/// Independent route to the Hermite cusps: walks w = x + i/t for t up to
/// t_max, reducing each sample to D0 and recording g.oo. Sampling is refined
/// until consecutive cusps are Farey neighbours whose crossing point reduces to
/// one of the two. Works in Real with at least 2*log2(t_max) + 128 bits.
std::vector<Cusp> hermite_oracle_geodesic(const Surd& x, const Real& t_max);

/// One branch A t + B / t of f_x(t) = f(x + i/t), with A = (q x - p)^2 and
/// B = q^2, valid for t in [start, end).
struct ProfilePiece {
  std::size_t rank;
  std::size_t index;
  BigInt p;
  BigInt q;
  Surd linear;    // A
  Surd inverse;   // B
  Surd start_sq;  // start^2
  Surd end_sq;    // end^2

  Real start() const;
  Real end() const;
  Surd value_at(const Surd& t) const { return linear * t + inverse / t; }
  Real value_at(const Real& t) const;
};

/// t -> f(x + i/t) on (0, end of the last piece). Below the first breakpoint
/// the point lies in a translate of D0 and f_x(t) = t.
class CapacityProfile {
 public:
  CapacityProfile(Surd x, std::vector<ProfilePiece> pieces);

  const Surd& x() const { return x_; }
  std::span<const ProfilePiece> pieces() const { return pieces_; }
  /// Squared breakpoints t_0^2 < t_1^2 < ... ; t_k starts piece k.
  std::vector<Surd> breakpoints_sq() const;
  std::vector<Real> breakpoints() const;
  Real upper_limit() const { return pieces_.back().end(); }

  /// Piece index holding t, or -1 for the leading f = t segment. Throws
  /// kDomain outside (0, upper_limit()).
  std::ptrdiff_t locate(const Surd& t) const;
  std::ptrdiff_t locate(const Real& t) const;

  Surd evaluate(const Surd& t) const;
  Real evaluate(const Real& t) const;

 private:
  Surd x_;
  std::vector<ProfilePiece> pieces_;
};

/// Profile over the first `count` Hermite convergents (count >= 2).
CapacityProfile build_profile(const Surd& x, std::size_t count);

/// Smallest profile whose last piece extends past t_max.
CapacityProfile build_profile_until(const Surd& x, const Real& t_max);

struct LocalMinimum {
  std::size_t rank;
  std::size_t index;
  Surd value;  // 2 |q (q x - p)| = 2 / lambda_index(x)
  Surd t_sq;   // (q / (q x - p))^2
  bool interior;

  Real t() const;
};

std::vector<LocalMinimum> local_minima(const CapacityProfile& profile);

/// Asymptotic range of the local minima of f_x. `lower` and `upper` are the
/// smallest and largest Hermite minima over the last full period of classical
/// indices up to `depth`; `exact` = 2 / L(x), the limit of `lower`.
struct MinimaLimit {
  Surd lower;
  Surd upper;
  Surd exact;
  std::size_t window_first;
  std::size_t window_last;
};

MinimaLimit minima_limit(const Surd& x, std::size_t depth);

}  // namespace growcap
