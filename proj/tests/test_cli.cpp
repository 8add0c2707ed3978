#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace growcap::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "growcap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

template <class T>
T round_trip(const T& report) {
  return nlohmann::json::parse(nlohmann::json(report).dump()).template get<T>();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

struct Circle {
  double cx, cy, r;
};

// Disk outlines only; the small dots marking lattice points share centres.
std::vector<Circle> disks(const std::string& svg) {
  std::vector<Circle> out;
  const std::regex re(R"re(<circle cx="([-0-9.]+)" cy="([-0-9.]+)" r="([-0-9.]+)" fill="#b7e4c7")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  }
  return out;
}

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("capacity command") {
  for (const char* w : {"2i", "i/2"}) {
    CAPTURE(w);
    const Outcome r = run_cli({"--format", "json", "capacity", "--omega", w});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto rep = nlohmann::json::parse(r.out).get<CapacityReport>();
    CHECK(rep.f_value == 0.5);
    CHECK(rep.f_exact == "1/2");
  }
  Context ctx(128);
  const CapacityReport rep = capacity_report(ctx, "phi + i/10");
  double direct = 0;
  ctx.check(gc_capacity_value(ctx.get(), (1 + std::sqrt(5.0)) / 2, 0.1, &direct));
  CHECK(rep.f_value == doctest::Approx(direct).epsilon(1e-14));
  CHECK(rep.has_circle);
  const Outcome csv = run_cli({"capacity", "--x", "phi + i/10"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find(rep.f) != std::string::npos);
}

TEST_CASE("errors go to the diagnostic stream with a nonzero exit") {
  const Outcome parse = run_cli({"capacity", "--omega", "1+*2"});
  CHECK(parse.code != 0);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("position 2") != std::string::npos);

  const Outcome rational = run_cli({"profile", "--x", "3/2"});
  CHECK(rational.code != 0);
  CHECK(rational.out.empty());
  CHECK_FALSE(rational.err.empty());

  const Outcome few = run_cli({"packing", "--x", "phi", "--y", "0.5", "--samples", "99"});
  CHECK(few.code != 0);
  CHECK(few.err.find("100") != std::string::npos);

  CHECK(run_cli({"capacity"}).code != 0);
  CHECK(run_cli({"frobnicate"}).code != 0);
  CHECK(run_cli({"--precision", "32", "spectrum"}).code != 0);
  CHECK(run_cli({"--format", "xml", "spectrum"}).code != 0);
}

TEST_CASE("profile of three values: golden minima highest") {
  Context ctx(128);
  const ProfileReport rep = profile_report(ctx, {"phi", "sqrt(2)-1", "sqrt(3)-1"}, 0.5, 1e8, 200, 30);
  REQUIRE(rep.series.size() == 3);
  std::vector<double> tail_min;
  for (const ProfileSeries& s : rep.series) {
    std::vector<double> minima;
    for (const ProfileRow& row : s.rows)
      if (row.kind == "minimum") minima.push_back(row.f);
    REQUIRE(minima.size() >= 4);
    // the last few minima, once the transient is over
    tail_min.push_back(*std::min_element(minima.end() - 3, minima.end()));
  }
  CHECK(rep.series[0].golden_class);
  CHECK_FALSE(rep.series[1].golden_class);
  CHECK(tail_min[0] > tail_min[1]);
  CHECK(tail_min[0] > tail_min[2]);
  CHECK(tail_min[0] == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-5));

  const std::string svg = profile_svg(rep);
  CHECK(svg.find("2/sqrt(5)") != std::string::npos);
  CHECK(svg == profile_svg(rep));
  CHECK(profile_svg(profile_report(ctx, {"sqrt(7)-1"}, 0.5, 100, 50, 10)).find("2/sqrt(5)") ==
        std::string::npos);
}

TEST_CASE("profile minima rows equal 2 / lambda_n") {
  Context ctx(128);
  for (const char* x : {"phi", "sqrt(7)-1", "psi"}) {
    CAPTURE(x);
    const ProfileReport rep = profile_report(ctx, {x}, 0.5, 1e8, 20, 30);
    gc_surd* s = nullptr;
    ctx.check(gc_surd_parse(ctx.get(), x, &s));
    gc_fraction_list* conv = nullptr;
    ctx.check(gc_convergents(ctx.get(), s, 40, &conv));
    std::size_t checked = 0;
    for (const ProfileRow& row : rep.series[0].rows) {
      if (row.kind != "minimum") continue;
      std::size_t n = GC_NO_INDEX;
      for (std::size_t k = 0; k < gc_fraction_list_size(conv); ++k) {
        const gc_fraction* f = gc_fraction_list_at(conv, k);
        if (row.p == f->p && row.q == f->q) n = f->index;
      }
      REQUIRE(n != GC_NO_INDEX);
      if (n == 0) continue;  // lambda_0 is undefined
      gc_surd* lam = nullptr;
      ctx.check(gc_lambda_n(ctx.get(), s, n, &lam));
      CHECK(row.f == doctest::Approx(2 / gc_surd_get(lam)->value).epsilon(1e-12));
      gc_surd_free(lam);
      ++checked;
    }
    CHECK(checked >= 5);
    gc_fraction_list_free(conv);
    gc_surd_free(s);
  }
}

TEST_CASE("profile breakpoints match the crossing formula") {
  Context ctx(128);
  for (const char* x : {"phi", "sqrt(3)-1", "(11+sqrt(221))/10"}) {
    CAPTURE(x);
    const ProfileReport rep = profile_report(ctx, {x}, 0.5, 1e5, 20, 20);
    const long double xv = rep.series[0].x_value;
    const ProfileRow* prev = nullptr;
    std::size_t checked = 0;
    for (const ProfileRow& row : rep.series[0].rows) {
      if (row.kind != "breakpoint") continue;
      const long double p = std::stold(row.p);
      const long double q = std::stold(row.q);
      const long double a = (q * xv - p) * (q * xv - p);
      long double t2;
      if (prev == nullptr) {
        t2 = q * q / (1 - a);  // end of the head f = t
      } else {
        const long double p0 = std::stold(prev->p);
        const long double q0 = std::stold(prev->q);
        const long double a0 = (q0 * xv - p0) * (q0 * xv - p0);
        t2 = (q * q - q0 * q0) / (a0 - a);
      }
      CHECK(row.t == doctest::Approx(static_cast<double>(std::sqrt(t2))).epsilon(1e-9));
      CHECK(row.f == doctest::Approx(static_cast<double>(a * std::sqrt(t2) + q * q / std::sqrt(t2)))
                         .epsilon(1e-9));
      prev = &row;
      ++checked;
    }
    CHECK(checked >= 5);
  }
}

TEST_CASE("JSON round-trips for every report") {
  Context ctx(128);
  const CapacityReport cap = capacity_report(ctx, "phi + i/10");
  CHECK(round_trip(cap) == cap);
  const ProfileReport prof = profile_report(ctx, {"phi", "sqrt(2)-1"}, 0.5, 100, 30, 10);
  CHECK(round_trip(prof) == prof);
  const PackingReport pack = packing_report(ctx, "phi", "0.3", 500, 7);
  CHECK(round_trip(pack) == pack);
  const HermiteReport herm = hermite_report(ctx, "sqrt(7)-1", 10, 1e5, 20);
  CHECK(round_trip(herm) == herm);
  const AverageReport avg = average_report(ctx, "phi", 20);
  CHECK(round_trip(avg) == avg);
  const SpectrumReport spec = spectrum_report(ctx, 4);
  CHECK(round_trip(spec) == spec);
  const MarkoffReport mark = markoff_report(ctx, "200");
  CHECK(round_trip(mark) == mark);

  // The emitted document is the same object the builder returns.
  const Outcome r = run_cli({"--format", "json", "hermite", "--x", "sqrt(7)-1", "--n", "10",
                             "--oracle-t-max", "1e5", "--depth", "20"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).get<HermiteReport>() == herm);
}

TEST_CASE("CSV schema line and header") {
  const std::vector<std::vector<std::string>> commands = {
      {"capacity", "--omega", "2i"},
      {"profile", "--x", "phi", "--t-max", "50", "--samples", "10"},
      {"packing", "--x", "phi", "--y", "0.5", "--samples", "200"},
      {"hermite", "--x", "phi"},
      {"average", "--x", "psi", "--depth", "12"},
      {"spectrum", "--count", "3"},
      {"markoff", "--limit", "100"},
  };
  for (const auto& c : commands) {
    CAPTURE(c[0]);
    const Outcome r = run_cli(c);
    REQUIRE(r.code == 0);
    CHECK(first_line(r.out) == "# schema=v1");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    const auto columns = std::count(line.begin(), line.end(), ',');
    CHECK(columns >= 1);
    while (std::getline(lines, line)) {
      // quoted fields may contain commas; none of these reports produce them
      if (line.find('"') == std::string::npos) CHECK(std::count(line.begin(), line.end(), ',') == columns);
    }
  }
  const Outcome prof = run_cli({"profile", "--x", "phi", "--t-max", "50", "--samples", "10"});
  std::istringstream lines(prof.out);
  std::string header;
  std::getline(lines, header);
  std::getline(lines, header);
  for (const char* col : {"t", "f", "piece_index", "p", "q"})
    CHECK(header.find(col) != std::string::npos);
}

TEST_CASE("spectrum, average and hermite wrappers") {
  Context ctx(128);
  const SpectrumReport spec = spectrum_report(ctx, 3);
  REQUIRE(spec.entries.size() == 3);
  CHECK(spec.entries[0].lagrange == "sqrt(5)");
  CHECK(spec.entries[1].lagrange == "2*sqrt(2)");
  CHECK(spec.entries[2].lagrange == "sqrt(221)/5");

  const AverageReport avg = average_report(ctx, "phi", 40);
  CHECK(avg.has_closed_form);
  CHECK(avg.closed_form.find("log(phi)") != std::string::npos);
  CHECK(std::abs(avg.delta) < 1e-4);
  CHECK(avg.estimate_value == doctest::Approx(0.930409).epsilon(1e-6));

  const HermiteReport herm = hermite_report(ctx, "sqrt(7)-1", 10, 0, 20);
  std::vector<std::string> got;
  for (const FractionEntry& e : herm.hermite) got.push_back(e.p + "/" + e.q);
  CHECK(got == std::vector<std::string>{"2/1", "5/3", "28/17", "79/48", "446/271"});
  CHECK(herm.oracle.empty());
}

TEST_CASE("packing density") {
  Context ctx(128);
  const PackingReport a = packing_report(ctx, "phi", "0.3", 20000, 11);
  const PackingReport b = packing_report(ctx, "phi", "0.3", 20000, 11);
  CHECK(a == b);
  CHECK(a.analytic == doctest::Approx(kPi / 4 * a.f).epsilon(1e-14));
  CHECK(a.within_3sigma);
  CHECK(std::abs(a.empirical - a.analytic) <= 3 * a.sigma);
  CHECK(packing_report(ctx, "phi", "0.3", 20000, 12).empirical != a.empirical);

  // at a profile minimum of phi the density is close to (pi/4) 2/sqrt(5)
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double t0 = 89 / std::abs(89 * phi - 144);
  std::ostringstream y;
  y << std::fixed;
  y.precision(20);
  y << 1 / t0;
  const PackingReport m = packing_report(ctx, "phi", y.str(), 50000, 3);
  CHECK(m.analytic == doctest::Approx(kPi / 4 * 2 / std::sqrt(5.0)).epsilon(1e-4));
  CHECK(m.within_3sigma);

  // hexagonal lattice e^{i pi/3}
  const PackingReport hex = packing_report(ctx, "1/2", "sqrt(3)/2", 20000, 5);
  CHECK(std::abs(hex.analytic - kPi / (2 * std::sqrt(3.0))) < 1e-12);
  CHECK(hex.within_3sigma);
}

TEST_CASE("lattice rendering") {
  Context ctx(128);
  const std::string grid = lattice_svg(ctx, "0", "1", 4);
  CHECK(grid == lattice_svg(ctx, "0", "1", 4));
  const auto g = disks(grid);
  REQUIRE(g.size() >= 8);
  // square grid: columns at the two strip edges, rows one strip width apart
  std::vector<double> xs, ys;
  for (const Circle& c : g) {
    xs.push_back(c.cx);
    ys.push_back(c.cy);
    CHECK(c.r == doctest::Approx(g[0].r));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  REQUIRE(xs.size() == 2);
  const double width = xs[1] - xs[0];
  for (std::size_t k = 1; k < ys.size(); ++k) CHECK(ys[k] - ys[k - 1] == doctest::Approx(width));
  CHECK(2 * g[0].r == doctest::Approx(width));  // d = 1

  const std::string spiral = lattice_svg(ctx, "phi-1", "0.05", 0);
  const auto s = disks(spiral);
  REQUIRE(s.size() > 20);
  for (const Circle& c : s) CHECK(c.r == doctest::Approx(s[0].r));

  const Outcome r = run_cli({"render-lattice", "--x", "phi-1", "--y", "0.05"});
  REQUIRE(r.code == 0);
  CHECK(r.out == spiral);
  CHECK(run_cli({"render-lattice", "--x", "0", "--y", "-1"}).code != 0);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
  const auto path = std::filesystem::temp_directory_path() / "growcap_cli_out_test.csv";
  std::filesystem::remove(path);
  const Outcome r = run_cli({"--out", path.string(), "spectrum", "--count", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == run_cli({"spectrum", "--count", "2"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("precision from the environment") {
  const Outcome base = run_cli({"spectrum", "--count", "1"});
  ::setenv("GROWTH_CAPACITY_PRECISION", "256", 1);
  CHECK(default_precision() == 256u);
  const Outcome wide = run_cli({"spectrum", "--count", "1"});
  const Outcome flag = run_cli({"--precision", "128", "spectrum", "--count", "1"});
  ::setenv("GROWTH_CAPACITY_PRECISION", "12", 1);
  const Outcome bad = run_cli({"spectrum", "--count", "1"});
  ::unsetenv("GROWTH_CAPACITY_PRECISION");
  REQUIRE(base.code == 0);
  REQUIRE(wide.code == 0);
  CHECK(wide.out.size() > base.out.size());
  CHECK(flag.out == base.out);
  CHECK(bad.code != 0);
  CHECK(default_precision() == GC_DEFAULT_PRECISION);
}
