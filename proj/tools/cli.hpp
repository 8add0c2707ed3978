#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "growcap.h"
#include "reports.hpp"

namespace growcap::cli {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Owns a gc_context; check() turns a failed status into CliError.
class Context {
 public:
  explicit Context(unsigned precision_bits);
  ~Context();
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  gc_context* get() const { return ctx_; }
  void check(gc_status status) const;

 private:
  gc_context* ctx_;
};

/// Precision from GROWTH_CAPACITY_PRECISION, else the library default.
unsigned default_precision();

CapacityReport capacity_report(const Context& ctx, const std::string& omega);
ProfileReport profile_report(const Context& ctx, const std::vector<std::string>& xs, double t_min,
                             double t_max, std::size_t samples, std::size_t depth);
PackingReport packing_report(const Context& ctx, const std::string& x, const std::string& y,
                             std::size_t samples, unsigned long long seed);
HermiteReport hermite_report(const Context& ctx, const std::string& x, std::size_t n,
                             double oracle_t_max, std::size_t depth);
AverageReport average_report(const Context& ctx, const std::string& x, std::size_t depth);
SpectrumReport spectrum_report(const Context& ctx, std::size_t count);
MarkoffReport markoff_report(const Context& ctx, const std::string& limit);

std::string to_csv(const CapacityReport& r);
std::string to_csv(const ProfileReport& r);
std::string to_csv(const PackingReport& r);
std::string to_csv(const HermiteReport& r);
std::string to_csv(const AverageReport& r);
std::string to_csv(const SpectrumReport& r);
std::string to_csv(const MarkoffReport& r);

std::string profile_svg(const ProfileReport& r);
/// Unfolded cylinder: lattice points alpha + beta (x, y) in a unit-width strip
/// with disks of diameter d(x, y).
std::string lattice_svg(const Context& ctx, const std::string& x, const std::string& y,
                        std::size_t rows);

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace growcap::cli
