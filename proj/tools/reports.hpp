#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace growcap::cli {

inline constexpr const char* kSchema = "v1";

struct CapacityReport {
  std::string schema = kSchema;
  std::string command = "capacity";
  std::string omega;
  bool exact = false;
  std::string f;
  std::string f_exact;
  double f_value = 0;
  std::vector<std::string> g;  // a, b, c, d
  std::string reduced_re;
  std::string reduced_im;
  std::string alpha;
  std::string beta;
  std::string shortest_length;
  bool has_circle = false;
  std::string cusp_p;
  std::string cusp_q;
  std::string diameter;
  bool operator==(const CapacityReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CapacityReport, schema, command, omega, exact, f, f_exact,
                                   f_value, g, reduced_re, reduced_im, alpha, beta,
                                   shortest_length, has_circle, cusp_p, cusp_q, diameter)

struct ProfileRow {
  std::string kind;  // sample | breakpoint | minimum
  double t = 0;
  double f = 0;
  long piece_index = -1;
  std::string p;
  std::string q;
  bool operator==(const ProfileRow&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProfileRow, kind, t, f, piece_index, p, q)

struct ProfileSeries {
  std::string x;
  double x_value = 0;
  bool golden_class = false;
  std::string minima_lower;
  std::string minima_exact;
  std::vector<ProfileRow> rows;
  bool operator==(const ProfileSeries&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProfileSeries, x, x_value, golden_class, minima_lower,
                                   minima_exact, rows)

struct ProfileReport {
  std::string schema = kSchema;
  std::string command = "profile";
  double t_min = 0;
  double t_max = 0;
  std::vector<ProfileSeries> series;
  bool operator==(const ProfileReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProfileReport, schema, command, t_min, t_max, series)

struct PackingReport {
  std::string schema = kSchema;
  std::string command = "packing";
  std::string x;
  std::string y;
  double f = 0;
  double d = 0;
  double analytic = 0;
  double empirical = 0;
  double sigma = 0;
  std::size_t samples = 0;
  unsigned long long seed = 0;
  bool within_3sigma = false;
  bool operator==(const PackingReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PackingReport, schema, command, x, y, f, d, analytic,
                                   empirical, sigma, samples, seed, within_3sigma)

struct FractionEntry {
  std::size_t rank = 0;
  long long index = -1;  // -1 when not known (oracle cusps)
  std::string p;
  std::string q;
  double value = 0;
  bool operator==(const FractionEntry&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FractionEntry, rank, index, p, q, value)

struct HermiteReport {
  std::string schema = kSchema;
  std::string command = "hermite";
  std::string x;
  std::size_t n = 0;
  std::vector<FractionEntry> hermite;
  double oracle_t_max = 0;  // 0 when the oracle was not run
  std::vector<FractionEntry> oracle;
  std::string minima_lower;
  std::string minima_upper;
  std::string minima_exact;
  bool operator==(const HermiteReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HermiteReport, schema, command, x, n, hermite, oracle_t_max,
                                   oracle, minima_lower, minima_upper, minima_exact)

struct AverageReport {
  std::string schema = kSchema;
  std::string command = "average";
  std::string x;
  std::size_t depth = 0;
  std::string estimate;
  double estimate_value = 0;
  bool has_closed_form = false;
  std::string closed_form;
  std::string closed_value;
  double delta = 0;
  std::size_t window_first = 0;
  std::size_t window_last = 0;
  double spread = 0;
  std::vector<double> piece_averages;
  bool operator==(const AverageReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AverageReport, schema, command, x, depth, estimate,
                                   estimate_value, has_closed_form, closed_form, closed_value,
                                   delta, window_first, window_last, spread, piece_averages)

struct SpectrumRow {
  std::size_t n = 0;
  std::string m;
  std::string lagrange;
  std::string decimal;
  bool operator==(const SpectrumRow&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpectrumRow, n, m, lagrange, decimal)

struct SpectrumReport {
  std::string schema = kSchema;
  std::string command = "spectrum";
  std::vector<SpectrumRow> entries;
  bool operator==(const SpectrumReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SpectrumReport, schema, command, entries)

struct MarkoffReport {
  std::string schema = kSchema;
  std::string command = "markoff";
  std::string limit;
  std::vector<std::string> numbers;
  bool operator==(const MarkoffReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MarkoffReport, schema, command, limit, numbers)

}  // namespace growcap::cli
