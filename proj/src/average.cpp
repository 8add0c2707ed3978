#include "growcap/average.hpp"

#include <algorithm>

#include "growcap/continued_fraction.hpp"

namespace growcap {

Real piece_average(const Real& a, const Real& b, const Real& t_lo, const Real& t_hi) {
  if (!(t_lo > 0)) throw Error(ErrorCode::kDomain, "t_lo must be positive");
  if (!(t_lo < t_hi)) throw Error(ErrorCode::kDomain, "t_lo must be below t_hi");
  if (!(a > 0)) throw Error(ErrorCode::kDomain, "linear coefficient must be positive");
  return a * (t_lo + t_hi) / 2 + b * boost::multiprecision::log(t_hi / t_lo) / (t_hi - t_lo);
}

Real piece_average(const ProfilePiece& piece) {
  return piece_average(piece.linear.to_real(), piece.inverse.to_real(), piece.start(),
                       piece.end());
}

ClosedForm closed_form_g(ClosedFormKind kind) {
  const Real half = Real(1) / 2;
  if (kind == ClosedFormKind::kGolden) {
    const Real s5 = boost::multiprecision::sqrt(Real(5));
    const Real phi = (1 + s5) / 2;
    return {kind, "1/2 + (2/sqrt(5))*log(phi)", half + 2 / s5 * boost::multiprecision::log(phi)};
  }
  const Real s2 = boost::multiprecision::sqrt(Real(2));
  return {kind, "1/2 + log(1+sqrt(2))/sqrt(8)",
          half + boost::multiprecision::log(1 + s2) / boost::multiprecision::sqrt(Real(8))};
}

std::optional<ClosedFormKind> closed_form_class(const Surd& x) {
  const ContinuedFraction cf = cf_expand(x);
  auto all = [&](int v) {
    return std::all_of(cf.period.begin(), cf.period.end(), [v](const BigInt& a) { return a == v; });
  };
  if (all(1)) return ClosedFormKind::kGolden;
  if (all(2)) return ClosedFormKind::kSilver;
  return std::nullopt;
}

AverageReport average_capacity_estimate(const Surd& x, std::size_t depth) {
  if (depth < 4) throw Error(ErrorCode::kDomain, "depth must be >= 4");
  const CapacityProfile profile = build_profile(x, depth);
  const std::size_t period = cf_expand(x).period.size();

  AverageReport rep{x, {}, Real(0), 0, depth - 1, Real(0), std::nullopt};
  rep.piece_averages.reserve(depth);
  for (const ProfilePiece& p : profile.pieces()) rep.piece_averages.push_back(piece_average(p));

  const std::size_t window = std::min(depth, std::max<std::size_t>(period, 5));
  rep.window_first = depth - window;
  rep.estimate = *std::max_element(rep.piece_averages.begin() + rep.window_first,
                                   rep.piece_averages.end());
  const auto [lo, hi] = std::minmax_element(rep.piece_averages.begin() + depth / 2,
                                            rep.piece_averages.end());
  rep.spread = *hi - *lo;
  if (auto kind = closed_form_class(x)) rep.closed_form = closed_form_g(*kind);
  return rep;
}

}  // namespace growcap
