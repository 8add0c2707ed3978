#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace growcap::cli {

namespace {

template <class T>
using Owned = std::unique_ptr<T, void (*)(T*)>;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) {
    os_ << "# schema=" << kSchema << "\n";
    row_of(header);
  }
  template <class... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((os_ << (first ? "" : ",") << csv_field(fields), first = false), ...);
    os_ << "\n";
  }
  std::string str() const { return os_.str(); }

 private:
  void row_of(std::initializer_list<const char*> fields) {
    bool first = true;
    for (const char* f : fields) {
      os_ << (first ? "" : ",") << f;
      first = false;
    }
    os_ << "\n";
  }
  std::ostringstream os_;
};

Owned<gc_surd> parse_surd(const Context& ctx, const std::string& text) {
  gc_surd* s = nullptr;
  ctx.check(gc_surd_parse(ctx.get(), text.c_str(), &s));
  return {s, gc_surd_free};
}

bool period_all_ones(const Context& ctx, const gc_surd* x) {
  gc_int_list* pre = nullptr;
  gc_int_list* period = nullptr;
  ctx.check(gc_cf_expand(ctx.get(), x, &pre, &period));
  Owned<gc_int_list> a(pre, gc_int_list_free), b(period, gc_int_list_free);
  for (size_t i = 0; i < gc_int_list_size(period); ++i) {
    if (std::string(gc_int_list_at(period, i)) != "1") return false;
  }
  return true;
}

std::vector<FractionEntry> fractions(const gc_fraction_list* list) {
  std::vector<FractionEntry> out;
  for (size_t i = 0; i < gc_fraction_list_size(list); ++i) {
    const gc_fraction* f = gc_fraction_list_at(list, i);
    const long long index = f->index == GC_NO_INDEX ? -1 : static_cast<long long>(f->index);
    out.push_back({f->rank, index, f->p, f->q, f->value});
  }
  return out;
}

double capacity_length(const Context& ctx, const std::string& x, const std::string& y,
                       double* f) {
  gc_capacity* c = nullptr;
  ctx.check(gc_capacity_of(ctx.get(), x.c_str(), y.c_str(), &c));
  Owned<gc_capacity> hold(c, gc_capacity_free);
  const gc_capacity_info* info = gc_capacity_get(c);
  if (f) *f = info->value_double;
  return std::strtod(info->shortest_length, nullptr);
}

}  // namespace

Context::Context(unsigned precision_bits) : ctx_(gc_context_new(precision_bits)) {
  if (ctx_ == nullptr)
    throw CliError("precision must be at least " + std::to_string(GC_MIN_PRECISION) + " bits");
}

Context::~Context() { gc_context_free(ctx_); }

void Context::check(gc_status status) const {
  if (status != GC_OK) throw CliError(std::string(gc_status_name(status)) + ": " + gc_last_error(ctx_));
}

unsigned default_precision() {
  const char* env = std::getenv("GROWTH_CAPACITY_PRECISION");
  if (env == nullptr || *env == '\0') return GC_DEFAULT_PRECISION;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < GC_MIN_PRECISION || v > 1u << 20)
    throw CliError(std::string("invalid GROWTH_CAPACITY_PRECISION: ") + env);
  return static_cast<unsigned>(v);
}

CapacityReport capacity_report(const Context& ctx, const std::string& omega) {
  gc_capacity* c = nullptr;
  ctx.check(gc_capacity_parse(ctx.get(), omega.c_str(), &c));
  Owned<gc_capacity> hold(c, gc_capacity_free);
  const gc_capacity_info* i = gc_capacity_get(c);
  CapacityReport r;
  r.omega = omega;
  r.exact = i->exact != 0;
  r.f = i->value;
  r.f_exact = i->value_exact ? i->value_exact : "";
  r.f_value = i->value_double;
  r.g = {i->matrix[0], i->matrix[1], i->matrix[2], i->matrix[3]};
  r.reduced_re = i->reduced_re;
  r.reduced_im = i->reduced_im;
  r.alpha = i->shortest_alpha;
  r.beta = i->shortest_beta;
  r.shortest_length = i->shortest_length;
  r.has_circle = i->has_circle != 0;
  if (r.has_circle) {
    r.cusp_p = i->cusp_p;
    r.cusp_q = i->cusp_q;
    r.diameter = i->diameter;
  }
  return r;
}

ProfileReport profile_report(const Context& ctx, const std::vector<std::string>& xs, double t_min,
                             double t_max, std::size_t samples, std::size_t depth) {
  if (xs.empty()) throw CliError("profile needs at least one --x");
  if (!(t_min > 0) || !(t_min < t_max)) throw CliError("need 0 < t-min < t-max");
  if (samples < 2) throw CliError("need at least 2 samples");
  ProfileReport rep;
  rep.t_min = t_min;
  rep.t_max = t_max;
  for (const std::string& text : xs) {
    auto x = parse_surd(ctx, text);
    gc_profile* raw = nullptr;
    ctx.check(gc_profile_build_until(ctx.get(), x.get(), t_max, &raw));
    Owned<gc_profile> prof(raw, gc_profile_free);
    gc_minima_limit* ml = nullptr;
    ctx.check(gc_minima_limit_compute(ctx.get(), x.get(), depth, &ml));
    Owned<gc_minima_limit> hold_ml(ml, gc_minima_limit_free);

    ProfileSeries s;
    s.x = text;
    s.x_value = gc_surd_get(x.get())->value;
    s.golden_class = period_all_ones(ctx, x.get());
    s.minima_lower = gc_minima_limit_get(ml)->lower;
    s.minima_exact = gc_minima_limit_get(ml)->exact;

    auto piece_pq = [&](long k, std::string& p, std::string& q) {
      if (k < 0) {
        p = "1";
        q = "0";
      } else {
        const gc_piece_info* pi = gc_profile_piece(prof.get(), static_cast<size_t>(k));
        p = pi->p;
        q = pi->q;
      }
    };
    const double ratio = std::log(t_max / t_min) / static_cast<double>(samples - 1);
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = k + 1 == samples ? t_max : t_min * std::exp(ratio * static_cast<double>(k));
      ProfileRow row{"sample", t, 0, -1, "", ""};
      ctx.check(gc_profile_eval(ctx.get(), prof.get(), t, &row.f, &row.piece_index));
      piece_pq(row.piece_index, row.p, row.q);
      s.rows.push_back(row);
    }
    for (size_t k = 0; k < gc_profile_piece_count(prof.get()); ++k) {
      const gc_piece_info* pi = gc_profile_piece(prof.get(), k);
      if (pi->start > t_max) break;
      ProfileRow row{"breakpoint", pi->start, 0, static_cast<long>(k), pi->p, pi->q};
      ctx.check(gc_profile_eval(ctx.get(), prof.get(), pi->start, &row.f, nullptr));
      s.rows.push_back(row);
    }
    for (size_t k = 0; k < gc_profile_piece_count(prof.get()); ++k) {
      const gc_piece_info* pi = gc_profile_piece(prof.get(), k);
      if (!pi->min_interior || pi->min_t > t_max) continue;
      s.rows.push_back({"minimum", pi->min_t, pi->min_value_double, static_cast<long>(k), pi->p,
                        pi->q});
    }
    rep.series.push_back(std::move(s));
  }
  return rep;
}

PackingReport packing_report(const Context& ctx, const std::string& x, const std::string& y,
                             std::size_t samples, unsigned long long seed) {
  if (samples < 100) throw CliError("packing needs at least 100 samples");
  PackingReport r;
  r.x = x;
  r.y = y;
  r.samples = samples;
  r.seed = seed;
  r.d = capacity_length(ctx, x, y, &r.f);
  const double xv = gc_surd_get(parse_surd(ctx, x).get())->value;
  const double yv = gc_surd_get(parse_surd(ctx, y).get())->value;
  if (!(yv > 0)) throw CliError("y must be positive");
  r.analytic = kPi / 4 * r.d * r.d / yv;

  // Uniform points of the parallelogram spanned by (1, 0) and (x, y); a point
  // is covered when some lattice point alpha + beta (x, y) lies within d/2.
  const double xs = xv - std::floor(xv);
  const double rad = r.d / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double u = unit(rng), v = unit(rng);
    const double px = u + v * xs, py = v * yv;
    const auto b_lo = static_cast<long long>(std::ceil((py - rad) / yv));
    const auto b_hi = static_cast<long long>(std::floor((py + rad) / yv));
    bool covered = false;
    for (long long b = b_lo; b <= b_hi && !covered; ++b) {
      const double cx = static_cast<double>(b) * xs, cy = static_cast<double>(b) * yv;
      const double a = std::round(px - cx);
      const double dx = px - (a + cx), dy = py - cy;
      covered = dx * dx + dy * dy <= rad * rad;
    }
    hits += covered ? 1 : 0;
  }
  r.empirical = static_cast<double>(hits) / static_cast<double>(samples);
  r.sigma = std::sqrt(r.analytic * (1 - r.analytic) / static_cast<double>(samples));
  r.within_3sigma = std::abs(r.empirical - r.analytic) <= 3 * r.sigma;
  return r;
}

HermiteReport hermite_report(const Context& ctx, const std::string& x, std::size_t n,
                             double oracle_t_max, std::size_t depth) {
  auto xs = parse_surd(ctx, x);
  HermiteReport r;
  r.x = x;
  r.n = n;
  gc_fraction_list* list = nullptr;
  ctx.check(gc_hermite_convergents(ctx.get(), xs.get(), n, &list));
  r.hermite = fractions(Owned<gc_fraction_list>(list, gc_fraction_list_free).get());
  if (oracle_t_max > 0) {
    r.oracle_t_max = oracle_t_max;
    gc_fraction_list* o = nullptr;
    ctx.check(gc_hermite_oracle(ctx.get(), xs.get(), oracle_t_max, &o));
    r.oracle = fractions(Owned<gc_fraction_list>(o, gc_fraction_list_free).get());
  }
  gc_minima_limit* ml = nullptr;
  ctx.check(gc_minima_limit_compute(ctx.get(), xs.get(), depth, &ml));
  Owned<gc_minima_limit> hold(ml, gc_minima_limit_free);
  r.minima_lower = gc_minima_limit_get(ml)->lower;
  r.minima_upper = gc_minima_limit_get(ml)->upper;
  r.minima_exact = gc_minima_limit_get(ml)->exact;
  return r;
}

AverageReport average_report(const Context& ctx, const std::string& x, std::size_t depth) {
  auto xs = parse_surd(ctx, x);
  gc_average* raw = nullptr;
  ctx.check(gc_average_estimate(ctx.get(), xs.get(), depth, &raw));
  Owned<gc_average> hold(raw, gc_average_free);
  const gc_average_info* i = gc_average_get(raw);
  AverageReport r;
  r.x = x;
  r.depth = depth;
  r.estimate = i->estimate;
  r.estimate_value = i->estimate_double;
  r.has_closed_form = i->has_closed_form != 0;
  if (r.has_closed_form) {
    r.closed_form = i->closed_form_expression;
    r.closed_value = i->closed_form_value;
    r.delta = i->estimate_double - i->closed_form_double;
  }
  r.window_first = i->window_first;
  r.window_last = i->window_last;
  r.spread = i->spread;
  r.piece_averages.assign(i->piece_averages, i->piece_averages + i->piece_count);
  return r;
}

SpectrumReport spectrum_report(const Context& ctx, std::size_t count) {
  gc_spectrum* raw = nullptr;
  ctx.check(gc_lagrange_spectrum(ctx.get(), count, &raw));
  Owned<gc_spectrum> hold(raw, gc_spectrum_free);
  SpectrumReport r;
  for (size_t k = 0; k < gc_spectrum_size(raw); ++k) {
    const gc_spectrum_entry* e = gc_spectrum_at(raw, k);
    r.entries.push_back({k + 1, e->m, e->lagrange, e->decimal});
  }
  return r;
}

MarkoffReport markoff_report(const Context& ctx, const std::string& limit) {
  gc_int_list* raw = nullptr;
  ctx.check(gc_markoff_numbers(ctx.get(), limit.c_str(), &raw));
  Owned<gc_int_list> hold(raw, gc_int_list_free);
  MarkoffReport r;
  r.limit = limit;
  for (size_t k = 0; k < gc_int_list_size(raw); ++k) r.numbers.emplace_back(gc_int_list_at(raw, k));
  return r;
}

std::string to_csv(const CapacityReport& r) {
  Csv csv({"omega", "f", "exact", "f_exact", "g_a", "g_b", "g_c", "g_d", "reduced_re",
           "reduced_im", "alpha", "beta", "shortest_length", "cusp", "diameter"});
  const std::string cusp = r.has_circle ? r.cusp_p + "/" + r.cusp_q : "inf";
  csv.row(r.omega, r.f, std::string(r.exact ? "true" : "false"), r.f_exact, r.g[0], r.g[1],
          r.g[2], r.g[3], r.reduced_re, r.reduced_im, r.alpha, r.beta, r.shortest_length, cusp,
          r.diameter);
  return csv.str();
}

std::string to_csv(const ProfileReport& r) {
  Csv csv({"x", "kind", "t", "f", "piece_index", "p", "q"});
  for (const ProfileSeries& s : r.series) {
    for (const ProfileRow& row : s.rows)
      csv.row(s.x, row.kind, fmt(row.t), fmt(row.f), std::to_string(row.piece_index), row.p, row.q);
  }
  return csv.str();
}

std::string to_csv(const PackingReport& r) {
  Csv csv({"x", "y", "f", "d", "analytic", "empirical", "sigma", "samples", "seed",
           "within_3sigma"});
  csv.row(r.x, r.y, fmt(r.f), fmt(r.d), fmt(r.analytic), fmt(r.empirical), fmt(r.sigma),
          std::to_string(r.samples), std::to_string(r.seed),
          std::string(r.within_3sigma ? "true" : "false"));
  return csv.str();
}

std::string to_csv(const HermiteReport& r) {
  Csv csv({"x", "kind", "rank", "index", "p", "q", "value"});
  for (const FractionEntry& e : r.hermite)
    csv.row(r.x, std::string("hermite"), std::to_string(e.rank), std::to_string(e.index), e.p, e.q,
            fmt(e.value));
  for (const FractionEntry& e : r.oracle)
    csv.row(r.x, std::string("oracle"), std::to_string(e.rank), std::string(""), e.p, e.q,
            fmt(e.value));
  return csv.str();
}

std::string to_csv(const AverageReport& r) {
  Csv csv({"x", "depth", "estimate", "closed_form", "closed_value", "delta", "window_first",
           "window_last", "spread"});
  csv.row(r.x, std::to_string(r.depth), r.estimate, r.closed_form, r.closed_value,
          r.has_closed_form ? fmt(r.delta, 6) : std::string(""), std::to_string(r.window_first),
          std::to_string(r.window_last), fmt(r.spread, 6));
  return csv.str();
}

std::string to_csv(const SpectrumReport& r) {
  Csv csv({"n", "m", "L", "value"});
  for (const SpectrumRow& e : r.entries) csv.row(std::to_string(e.n), e.m, e.lagrange, e.decimal);
  return csv.str();
}

std::string to_csv(const MarkoffReport& r) {
  Csv csv({"n", "m"});
  for (std::size_t k = 0; k < r.numbers.size(); ++k) csv.row(std::to_string(k + 1), r.numbers[k]);
  return csv.str();
}

std::string profile_svg(const ProfileReport& r) {
  static const char* const kColors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400",
                                        "#2c3e50"};
  constexpr double kW = 720, kH = 420, kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
  constexpr double kFMax = 1.2;
  const double lo = std::log10(r.t_min), hi = std::log10(r.t_max);
  auto sx = [&](double t) { return kLeft + (std::log10(t) - lo) / (hi - lo) * (kW - kLeft - kRight); };
  auto sy = [&](double f) { return kH - kBottom - f / kFMax * (kH - kTop - kBottom); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kW) << "\" height=\""
     << fmt(kH) << "\" viewBox=\"0 0 " << fmt(kW) << " " << fmt(kH) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
     << fixed(kW - kRight) << "\" y2=\"" << fixed(sy(0)) << "\"/>\n";
  os << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\"" << fixed(kLeft)
     << "\" y2=\"" << fixed(sy(kFMax)) << "\"/>\n</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (int e = static_cast<int>(std::ceil(lo)); e <= static_cast<int>(std::floor(hi)); ++e) {
    const double x = sx(std::pow(10.0, e));
    os << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\"" << fixed(x)
       << "\" y2=\"" << fixed(sy(0) + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(sy(0) + 18) << "\">1e" << e << "</text>\n";
  }
  for (int k = 0; k <= 6; ++k) {
    const double f = 0.2 * k;
    os << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(sy(f) + 4)
       << "\" text-anchor=\"end\">" << fmt(f, 2) << "</text>\n";
  }
  os << "<text x=\"" << fixed((kLeft + kW - kRight) / 2) << "\" y=\"" << fixed(kH - 10)
     << "\">t</text>\n</g>\n";

  const bool golden = std::any_of(r.series.begin(), r.series.end(),
                                  [](const ProfileSeries& s) { return s.golden_class; });
  if (golden) {
    const double g = 2 / std::sqrt(5.0);
    os << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(sy(g)) << "\" x2=\""
       << fixed(kW - kRight) << "\" y2=\"" << fixed(sy(g))
       << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    os << "<text x=\"" << fixed(kW - kRight - 4) << "\" y=\"" << fixed(sy(g) - 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" fill=\"gray\">"
          "2/sqrt(5)</text>\n";
  }
  for (std::size_t k = 0; k < r.series.size(); ++k) {
    const ProfileSeries& s = r.series[k];
    const char* color = kColors[k % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const ProfileRow& row : s.rows) {
      if (row.kind != "sample") continue;
      os << (first ? "" : " ") << fixed(sx(row.t)) << "," << fixed(sy(row.f));
      first = false;
    }
    os << "\"/>\n";
    for (const ProfileRow& row : s.rows) {
      if (row.kind != "minimum" || row.t < r.t_min) continue;
      os << "<circle cx=\"" << fixed(sx(row.t)) << "\" cy=\"" << fixed(sy(row.f))
         << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    os << "<text x=\"" << fixed(kLeft + 10) << "\" y=\"" << fixed(kTop + 14 + 14 * k)
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">x = "
       << xml_escape(s.x) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string lattice_svg(const Context& ctx, const std::string& x, const std::string& y,
                        std::size_t rows) {
  const double d = capacity_length(ctx, x, y, nullptr);
  const double xv = gc_surd_get(parse_surd(ctx, x).get())->value;
  const double yv = gc_surd_get(parse_surd(ctx, y).get())->value;
  if (rows == 0) rows = static_cast<std::size_t>(std::clamp(std::ceil(2 / yv), 4.0, 200.0));
  constexpr double kScale = 400, kMargin = 20;
  const double xs = xv - std::floor(xv);
  const double height = (static_cast<double>(rows - 1) * yv + d) * kScale;
  const double w = kScale + 2 * kMargin, h = height + 2 * kMargin;
  auto px = [&](double u) { return kMargin + u * kScale; };
  auto py = [&](double v) { return kMargin + height - (v + d / 2) * kScale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w) << "\" height=\""
     << fixed(h) << "\" viewBox=\"0 0 " << fixed(w) << " " << fixed(h) << "\">\n";
  os << "<defs><clipPath id=\"strip\"><rect x=\"" << fixed(px(0)) << "\" y=\"" << fixed(kMargin)
     << "\" width=\"" << fixed(kScale) << "\" height=\"" << fixed(height)
     << "\"/></clipPath></defs>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g clip-path=\"url(#strip)\">\n";
  for (std::size_t b = 0; b < rows; ++b) {
    const double bx = static_cast<double>(b) * xs;
    const double u = bx - std::floor(bx);
    const double v = static_cast<double>(b) * yv;
    for (int shift = -1; shift <= 1; ++shift) {
      const double c = u + shift;
      if (c + d / 2 < 0 || c - d / 2 > 1) continue;
      os << "<circle cx=\"" << fixed(px(c)) << "\" cy=\"" << fixed(py(v)) << "\" r=\""
         << fixed(d / 2 * kScale) << "\" fill=\"#b7e4c7\" stroke=\"#2d6a4f\" stroke-width=\"0.8\"/>\n";
      os << "<circle cx=\"" << fixed(px(c)) << "\" cy=\"" << fixed(py(v))
         << "\" r=\"1.5\" fill=\"#1b4332\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<rect x=\"" << fixed(px(0)) << "\" y=\"" << fixed(kMargin) << "\" width=\""
     << fixed(kScale) << "\" height=\"" << fixed(height)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "</svg>\n";
  return os.str();
}

namespace {

struct Output {
  std::string format;
  std::string path;
};

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw CliError("cannot open " + o.path);
  f << text;
  if (!f) throw CliError("cannot write " + o.path);
}

template <class Report>
std::string render(const Report& r, const std::string& format, const char* command) {
  if (format == "csv") return to_csv(r);
  if (format == "json") return nlohmann::json(r).dump(2) + "\n";
  throw CliError(std::string("format ") + format + " not supported by " + command);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth capacity, Hermite convergents and Markoff data", "growcap"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned precision = 0;
  Output o;
  app.add_option("--precision", precision, "working precision in bits (>= 64)")
      ->check(CLI::Range(GC_MIN_PRECISION, 1u << 20));
  app.add_option("--format", o.format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--out", o.path, "write to PATH instead of stdout");

  std::string omega;
  auto* cap = app.add_subcommand("capacity", "f(w) with reduction data and tangent circle");
  cap->add_option("--omega,--x", omega, "point literal, e.g. \"phi + i/10\"")->required();

  std::vector<std::string> pxs;
  double t_min = 0.5, t_max = 1000;
  std::size_t samples = 400, depth = 30;
  auto* prof = app.add_subcommand("profile", "t -> f(x + i/t) with breakpoints and minima");
  prof->add_option("--x", pxs, "surd literal (repeatable)")->required();
  prof->add_option("--t-min", t_min, "smallest sampled t");
  prof->add_option("--t-max", t_max, "largest sampled t");
  prof->add_option("--samples", samples, "log-spaced samples per x");
  prof->add_option("--depth", depth, "convergent depth for the minima limit");

  std::string x, y;
  std::size_t pack_samples = 100000;
  unsigned long long seed = 1;
  auto* pack = app.add_subcommand("packing", "Monte Carlo check of the disk packing density");
  pack->add_option("--x", x, "divergence")->required();
  pack->add_option("--y", y, "vertical spacing")->required();
  pack->add_option("--samples", pack_samples, "number of random points");
  pack->add_option("--seed", seed, "generator seed");

  std::size_t rows = 0;
  auto* lat = app.add_subcommand("render-lattice", "SVG of the unfolded cylinder");
  lat->add_option("--x", x, "divergence")->required();
  lat->add_option("--y", y, "vertical spacing")->required();
  lat->add_option("--rows", rows, "lattice rows (default from y)");

  std::size_t n = 10;
  double oracle = 0;
  auto* herm = app.add_subcommand("hermite", "Hermite convergents of x");
  herm->add_option("--x", x, "surd literal")->required();
  herm->add_option("--n", n, "classical convergents to filter");
  herm->add_option("--oracle-t-max", oracle, "also walk the geodesic up to this t");
  herm->add_option("--depth", depth, "convergent depth for the minima limit");

  std::size_t avg_depth = 40;
  auto* avg = app.add_subcommand("average", "averaged capacity g_x");
  avg->add_option("--x", x, "surd literal")->required();
  avg->add_option("--depth", avg_depth, "number of profile pieces (>= 4)");

  std::size_t count = 5;
  auto* spec = app.add_subcommand("spectrum", "Lagrange spectrum below 3");
  spec->add_option("--count", count, "number of entries");

  std::string limit = "1500";
  auto* mk = app.add_subcommand("markoff", "Markoff numbers up to a bound");
  mk->add_option("--limit", limit, "largest Markoff number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Context ctx(precision != 0 ? precision : default_precision());
    const std::string fmt_or = o.format;
    auto format = [&](const char* fallback) { return fmt_or.empty() ? std::string(fallback) : fmt_or; };
    if (*cap) {
      emit(o, render(capacity_report(ctx, omega), format("csv"), "capacity"), out);
    } else if (*prof) {
      const ProfileReport r = profile_report(ctx, pxs, t_min, t_max, samples, depth);
      const std::string f = format("csv");
      emit(o, f == "svg" ? profile_svg(r) : render(r, f, "profile"), out);
    } else if (*pack) {
      emit(o, render(packing_report(ctx, x, y, pack_samples, seed), format("csv"), "packing"), out);
    } else if (*lat) {
      if (format("svg") != "svg") throw CliError("render-lattice only emits svg");
      emit(o, lattice_svg(ctx, x, y, rows), out);
    } else if (*herm) {
      emit(o, render(hermite_report(ctx, x, n, oracle, depth), format("csv"), "hermite"), out);
    } else if (*avg) {
      emit(o, render(average_report(ctx, x, avg_depth), format("csv"), "average"), out);
    } else if (*spec) {
      emit(o, render(spectrum_report(ctx, count), format("csv"), "spectrum"), out);
    } else if (*mk) {
      emit(o, render(markoff_report(ctx, limit), format("csv"), "markoff"), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace growcap::cli
