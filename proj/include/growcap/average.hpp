#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "growcap/numeric.hpp"
#include "growcap/profile.hpp"
#include "growcap/surd.hpp"

namespace growcap {

/// Mean of A t + B / t over [t_lo, t_hi]:
/// A (t_lo + t_hi) / 2 + B log(t_hi / t_lo) / (t_hi - t_lo).
/// Throws kDomain unless 0 < t_lo < t_hi and A > 0.
Real piece_average(const Real& a, const Real& b, const Real& t_lo, const Real& t_hi);

/// Mean of one profile piece over its own interval [t_start, t_end].
Real piece_average(const ProfilePiece& piece);

enum class ClosedFormKind { kGolden, kSilver };

struct ClosedForm {
  ClosedFormKind kind;
  std::string expression;
  Real value;
};

/// g_phi = 1/2 + (2/sqrt(5)) log(phi), g_psi = 1/2 + log(1+sqrt(2))/sqrt(8).
ClosedForm closed_form_g(ClosedFormKind kind);

/// Golden when the expansion ends in 1s, silver when it ends in 2s.
std::optional<ClosedFormKind> closed_form_class(const Surd& x);

struct AverageReport {
  Surd x;
  std::vector<Real> piece_averages;  // by Hermite rank
  Real estimate;                     // max over the tail window
  std::size_t window_first;
  std::size_t window_last;           // inclusive
  Real spread;                       // max - min over ranks [depth/2, depth)
  std::optional<ClosedForm> closed_form;
};

/// Averages over the first `depth` profile pieces (depth >= 4). The limsup is
/// estimated as the largest average over the last max(period, 5) pieces.
AverageReport average_capacity_estimate(const Surd& x, std::size_t depth);

}  // namespace growcap
