#include "growcap.h"

#include <cctype>
#include <cmath>
#include <deque>
#include <memory>
#include <type_traits>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "growcap/average.hpp"
#include "growcap/continued_fraction.hpp"
#include "growcap/literal.hpp"
#include "growcap/markoff.hpp"
#include "growcap/modular.hpp"
#include "growcap/profile.hpp"

using namespace growcap;

struct gc_context {
  unsigned bits = GC_DEFAULT_PRECISION;
  std::string error;
  size_t position = GC_NO_POSITION;
};

namespace {

struct BadArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Stable storage for the strings a handle exposes.
class StringPool {
 public:
  const char* keep(std::string s) { return pool_.emplace_back(std::move(s)).c_str(); }

 private:
  std::deque<std::string> pool_;
};

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw BadArgument(std::string("null argument: ") + what);
}

BigInt parse_int(const char* text) {
  require(text, "integer");
  std::string s(text);
  std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError(i, "expected digits");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError(k, "expected digit");
  }
  const bool negative = s[0] == '-';
  // A leading 0 would select octal.
  const auto first = s.find_first_not_of('0', i);
  const BigInt magnitude = first == std::string::npos ? BigInt(0) : BigInt(s.substr(first));
  return negative ? BigInt(-magnitude) : magnitude;
}

unsigned digits_of(const gc_context* ctx) { return bits_to_digits10(ctx->bits); }

std::string decimal(const Real& r, const gc_context* ctx) {
  return r.str(static_cast<std::streamsize>(digits_of(ctx)));
}

template <class F>
gc_status guarded(gc_context* ctx, F&& body) {
  if (ctx == nullptr) return GC_ERR_INVALID_ARGUMENT;
  ctx->error.clear();
  ctx->position = GC_NO_POSITION;
  try {
    PrecisionScope scope(ctx->bits);
    body();
    return GC_OK;
  } catch (const ParseError& e) {
    ctx->error = e.what();
    ctx->position = e.position();
    return GC_ERR_PARSE;
  } catch (const Error& e) {
    ctx->error = e.what();
    return static_cast<gc_status>(e.code());
  } catch (const BadArgument& e) {
    ctx->error = e.what();
    return GC_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return GC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return GC_ERR_INTERNAL;
  }
}

}  // namespace

struct gc_surd {
  Surd value;
  StringPool strings;
  gc_surd_info info{};

  gc_surd(Surd v, const gc_context* ctx) : value(std::move(v)) {
    info.literal = strings.keep(value.to_string());
    info.a = strings.keep(value.a().str());
    info.b = strings.keep(value.b().str());
    info.c = strings.keep(value.c().str());
    info.d = strings.keep(value.d().str());
    const Real r = value.to_real();
    info.decimal = strings.keep(decimal(r, ctx));
    info.value = r.convert_to<double>();
  }
};

struct gc_int_list {
  std::vector<std::string> items;
};

struct gc_fraction_list {
  StringPool strings;
  std::vector<gc_fraction> items;

  void add(std::size_t index, const BigInt& p, const BigInt& q) {
    const double v = (to_real(p) / to_real(q)).convert_to<double>();
    items.push_back({index, items.size(), strings.keep(p.str()), strings.keep(q.str()), v});
  }
};

struct gc_capacity {
  StringPool strings;
  gc_capacity_info info{};
};

struct gc_profile {
  CapacityProfile profile;
  StringPool strings;
  std::vector<gc_piece_info> pieces;
};

struct gc_minima_limit {
  StringPool strings;
  gc_minima_limit_info info{};
};

struct gc_average {
  StringPool strings;
  std::vector<double> averages;
  gc_average_info info{};
};

struct gc_spectrum {
  StringPool strings;
  std::vector<gc_spectrum_entry> items;
};

namespace {

template <class S>
void fill_capacity(gc_capacity& h, const UpperHalfPoint<S>& w, const gc_context* ctx) {
  const Reduction<S> red = reduce_to_fundamental(w);
  const S f = S(1) / red.reduced.y;
  const ShortestVector<S> sv = shortest_vector(w);
  gc_capacity_info& i = h.info;
  const Real fr = scalar::to_real(f);
  i.value = h.strings.keep(decimal(fr, ctx));
  i.value_double = fr.convert_to<double>();
  if constexpr (std::is_same_v<S, Surd>) {
    i.exact = 1;
    i.value_exact = h.strings.keep(f.to_string());
  } else {
    i.exact = 0;
    i.value_exact = nullptr;
  }
  i.matrix[0] = h.strings.keep(red.g.a().str());
  i.matrix[1] = h.strings.keep(red.g.b().str());
  i.matrix[2] = h.strings.keep(red.g.c().str());
  i.matrix[3] = h.strings.keep(red.g.d().str());
  i.reduced_re = h.strings.keep(decimal(scalar::to_real(red.reduced.x), ctx));
  i.reduced_im = h.strings.keep(decimal(scalar::to_real(red.reduced.y), ctx));
  i.shortest_alpha = h.strings.keep(sv.witness.alpha.str());
  i.shortest_beta = h.strings.keep(sv.witness.beta.str());
  i.shortest_length = h.strings.keep(decimal(sv.length(), ctx));
  const Cusp cusp = mobius_apply(red.g, Cusp::infinity());
  if (cusp.is_infinity()) {
    i.has_circle = 0;
    return;
  }
  i.has_circle = 1;
  i.cusp_p = h.strings.keep(cusp.p.str());
  i.cusp_q = h.strings.keep(cusp.q.str());
  const Real diameter = fr / (to_real(cusp.q) * to_real(cusp.q));
  i.diameter = h.strings.keep(decimal(diameter, ctx));
  i.diameter_double = diameter.convert_to<double>();
}

// Exact when both coordinates share a field, otherwise at Real precision.
gc_capacity* capacity_from(const Surd& re, const Surd& im, const gc_context* ctx) {
  auto h = std::make_unique<gc_capacity>();
  try {
    fill_capacity(*h, UpperHalfPoint<Surd>(re, im), ctx);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIncomparable) throw;
    h = std::make_unique<gc_capacity>();
    fill_capacity(*h, UpperHalfPoint<Real>(re.to_real(), im.to_real()), ctx);
  }
  return h.release();
}

gc_int_list* int_list(const std::vector<BigInt>& v) {
  auto out = std::make_unique<gc_int_list>();
  for (const BigInt& n : v) out->items.push_back(n.str());
  return out.release();
}

template <class T>
void set_out(T** out, T* value) {
  *out = value;
}

gc_profile* wrap_profile(CapacityProfile profile, const gc_context* ctx) {
  auto h = std::unique_ptr<gc_profile>(new gc_profile{std::move(profile), {}, {}});
  const auto minima = local_minima(h->profile);
  const auto pieces = h->profile.pieces();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const ProfilePiece& p = pieces[k];
    const Real start = p.start(), end = p.end();
    gc_piece_info i{};
    i.rank = p.rank;
    i.index = p.index;
    i.p = h->strings.keep(p.p.str());
    i.q = h->strings.keep(p.q.str());
    i.linear = h->strings.keep(p.linear.to_string());
    i.inverse = h->strings.keep(p.inverse.to_string());
    i.start = start.convert_to<double>();
    i.end = end.convert_to<double>();
    i.start_decimal = h->strings.keep(decimal(start, ctx));
    i.end_decimal = h->strings.keep(decimal(end, ctx));
    i.min_value = h->strings.keep(minima[k].value.to_string());
    i.min_value_double = minima[k].value.to_double();
    i.min_t = minima[k].t().convert_to<double>();
    i.min_interior = minima[k].interior ? 1 : 0;
    h->pieces.push_back(i);
  }
  return h.release();
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "0.1.0"; }

const char* gc_status_name(gc_status status) {
  switch (status) {
    case GC_OK: return "ok";
    case GC_ERR_ZERO_DENOMINATOR: return "zero denominator";
    case GC_ERR_NOT_REAL_SURD: return "not a real surd";
    case GC_ERR_INCOMPARABLE: return "incomparable exactly";
    case GC_ERR_RATIONAL_INPUT: return "rational input";
    case GC_ERR_NOT_IRREDUCIBLE: return "fraction not irreducible";
    case GC_ERR_CUSP_AT_INFINITY: return "cusp at infinity";
    case GC_ERR_PARSE: return "parse error";
    case GC_ERR_DOMAIN: return "domain error";
    case GC_ERR_ITERATION_LIMIT: return "iteration limit";
    case GC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

gc_context* gc_context_new(unsigned precision_bits) {
  if (precision_bits == 0) precision_bits = GC_DEFAULT_PRECISION;
  if (precision_bits < GC_MIN_PRECISION) return nullptr;
  auto* ctx = new (std::nothrow) gc_context;
  if (ctx) ctx->bits = precision_bits;
  return ctx;
}

void gc_context_free(gc_context* ctx) { delete ctx; }

gc_status gc_context_set_precision(gc_context* ctx, unsigned bits) {
  return guarded(ctx, [&] {
    if (bits < GC_MIN_PRECISION)
      throw Error(ErrorCode::kDomain, "precision must be at least " +
                                          std::to_string(GC_MIN_PRECISION) + " bits");
    ctx->bits = bits;
  });
}

unsigned gc_context_precision(const gc_context* ctx) { return ctx ? ctx->bits : 0; }

const char* gc_last_error(const gc_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

size_t gc_last_error_position(const gc_context* ctx) {
  return ctx ? ctx->position : GC_NO_POSITION;
}

gc_status gc_surd_parse(gc_context* ctx, const char* text, gc_surd** out) {
  return guarded(ctx, [&] {
    require(text, "text");
    require(out, "out");
    set_out(out, new gc_surd(parse_surd(text), ctx));
  });
}

gc_status gc_surd_make(gc_context* ctx, const char* a, const char* b, const char* c,
                       const char* d, gc_surd** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    set_out(out, new gc_surd(Surd::make(parse_int(a), parse_int(b), parse_int(c), parse_int(d)),
                             ctx));
  });
}

const gc_surd_info* gc_surd_get(const gc_surd* s) { return s ? &s->info : nullptr; }

void gc_surd_free(gc_surd* s) { delete s; }

gc_status gc_surd_compare(gc_context* ctx, const gc_surd* x, const gc_surd* y, int* out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    const auto ord = x->value <=> y->value;
    *out = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
  });
}

size_t gc_int_list_size(const gc_int_list* list) { return list ? list->items.size() : 0; }

const char* gc_int_list_at(const gc_int_list* list, size_t i) {
  return (list && i < list->items.size()) ? list->items[i].c_str() : nullptr;
}

void gc_int_list_free(gc_int_list* list) { delete list; }

gc_status gc_cf_expand(gc_context* ctx, const gc_surd* x, gc_int_list** preperiod,
                       gc_int_list** period) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(preperiod, "preperiod");
    require(period, "period");
    const ContinuedFraction cf = cf_expand(x->value);
    std::unique_ptr<gc_int_list> pre(int_list(cf.preperiod));
    *period = int_list(cf.period);
    *preperiod = pre.release();
  });
}

size_t gc_fraction_list_size(const gc_fraction_list* list) {
  return list ? list->items.size() : 0;
}

const gc_fraction* gc_fraction_list_at(const gc_fraction_list* list, size_t i) {
  return (list && i < list->items.size()) ? &list->items[i] : nullptr;
}

void gc_fraction_list_free(gc_fraction_list* list) { delete list; }

gc_status gc_convergents(gc_context* ctx, const gc_surd* x, size_t count,
                         gc_fraction_list** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    if (count == 0) throw Error(ErrorCode::kDomain, "count must be >= 1");
    auto list = std::make_unique<gc_fraction_list>();
    for (const Convergent& c : convergents(cf_expand(x->value), count)) list->add(c.n, c.p, c.q);
    *out = list.release();
  });
}

gc_status gc_hermite_convergents(gc_context* ctx, const gc_surd* x, size_t count,
                                 gc_fraction_list** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    auto list = std::make_unique<gc_fraction_list>();
    for (const HermiteConvergent& h : hermite_convergents(x->value, count))
      list->add(h.index, h.p, h.q);
    *out = list.release();
  });
}

gc_status gc_hermite_oracle(gc_context* ctx, const gc_surd* x, double t_max,
                            gc_fraction_list** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    if (!std::isfinite(t_max)) throw Error(ErrorCode::kDomain, "t_max must be finite");
    auto list = std::make_unique<gc_fraction_list>();
    for (const Cusp& c : hermite_oracle_geodesic(x->value, Real(t_max)))
      list->add(GC_NO_INDEX, c.p, c.q);
    *out = list.release();
  });
}

gc_status gc_humbert_is_hermite(gc_context* ctx, const gc_surd* x, const char* p,
                                const char* q, int* out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    *out = humbert_is_hermite(x->value, parse_int(p), parse_int(q)) ? 1 : 0;
  });
}

gc_status gc_lambda_n(gc_context* ctx, const gc_surd* x, size_t n, gc_surd** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    *out = new gc_surd(lambda_n(x->value, n), ctx);
  });
}

gc_status gc_lagrange_number(gc_context* ctx, const gc_surd* x, size_t depth, gc_surd** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    *out = new gc_surd(lagrange_number(x->value, depth).limit, ctx);
  });
}

gc_status gc_capacity_parse(gc_context* ctx, const char* omega, gc_capacity** out) {
  return guarded(ctx, [&] {
    require(omega, "omega");
    require(out, "out");
    const ComplexLiteral lit = parse_complex(omega);
    if (lit.exact()) {
      const auto& g = std::get<Gaussian<Surd>>(lit.value);
      *out = capacity_from(g.re, g.im, ctx);
    } else {
      const auto& g = std::get<Gaussian<Real>>(lit.value);
      auto h = std::make_unique<gc_capacity>();
      fill_capacity(*h, UpperHalfPoint<Real>(g.re, g.im), ctx);
      *out = h.release();
    }
  });
}

gc_status gc_capacity_of(gc_context* ctx, const char* re, const char* im, gc_capacity** out) {
  return guarded(ctx, [&] {
    require(re, "re");
    require(im, "im");
    require(out, "out");
    *out = capacity_from(parse_surd(re), parse_surd(im), ctx);
  });
}

const gc_capacity_info* gc_capacity_get(const gc_capacity* c) { return c ? &c->info : nullptr; }

void gc_capacity_free(gc_capacity* c) { delete c; }

gc_status gc_capacity_value(gc_context* ctx, double re, double im, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = growth_capacity(UpperHalfPoint<Real>(Real(re), Real(im))).convert_to<double>();
  });
}

gc_status gc_profile_build(gc_context* ctx, const gc_surd* x, size_t count, gc_profile** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    *out = wrap_profile(build_profile(x->value, count), ctx);
  });
}

gc_status gc_profile_build_until(gc_context* ctx, const gc_surd* x, double t_max,
                                 gc_profile** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    if (!std::isfinite(t_max)) throw Error(ErrorCode::kDomain, "t_max must be finite");
    *out = wrap_profile(build_profile_until(x->value, Real(t_max)), ctx);
  });
}

void gc_profile_free(gc_profile* p) { delete p; }

size_t gc_profile_piece_count(const gc_profile* p) { return p ? p->pieces.size() : 0; }

const gc_piece_info* gc_profile_piece(const gc_profile* p, size_t i) {
  return (p && i < p->pieces.size()) ? &p->pieces[i] : nullptr;
}

double gc_profile_head_end(const gc_profile* p) {
  return p ? p->pieces.front().start : std::nan("");
}

double gc_profile_upper_limit(const gc_profile* p) {
  return p ? p->pieces.back().end : std::nan("");
}

gc_status gc_profile_eval(gc_context* ctx, const gc_profile* p, double t, double* f,
                          long* piece) {
  return guarded(ctx, [&] {
    require(p, "profile");
    require(f, "f");
    const Real tr(t);
    *f = p->profile.evaluate(tr).convert_to<double>();
    if (piece) *piece = static_cast<long>(p->profile.locate(tr));
  });
}

gc_status gc_minima_limit_compute(gc_context* ctx, const gc_surd* x, size_t depth,
                                  gc_minima_limit** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    const MinimaLimit m = minima_limit(x->value, depth);
    auto h = std::make_unique<gc_minima_limit>();
    h->info.lower = h->strings.keep(m.lower.to_string());
    h->info.upper = h->strings.keep(m.upper.to_string());
    h->info.exact = h->strings.keep(m.exact.to_string());
    h->info.lower_double = m.lower.to_double();
    h->info.upper_double = m.upper.to_double();
    h->info.exact_double = m.exact.to_double();
    h->info.window_first = m.window_first;
    h->info.window_last = m.window_last;
    *out = h.release();
  });
}

const gc_minima_limit_info* gc_minima_limit_get(const gc_minima_limit* m) {
  return m ? &m->info : nullptr;
}

void gc_minima_limit_free(gc_minima_limit* m) { delete m; }

gc_status gc_average_estimate(gc_context* ctx, const gc_surd* x, size_t depth,
                              gc_average** out) {
  return guarded(ctx, [&] {
    require(x, "x");
    require(out, "out");
    const AverageReport r = average_capacity_estimate(x->value, depth);
    auto h = std::make_unique<gc_average>();
    for (const Real& v : r.piece_averages) h->averages.push_back(v.convert_to<double>());
    gc_average_info& i = h->info;
    i.estimate = h->strings.keep(decimal(r.estimate, ctx));
    i.estimate_double = r.estimate.convert_to<double>();
    i.window_first = r.window_first;
    i.window_last = r.window_last;
    i.spread = r.spread.convert_to<double>();
    i.has_closed_form = r.closed_form ? 1 : 0;
    if (r.closed_form) {
      i.closed_form_expression = h->strings.keep(r.closed_form->expression);
      i.closed_form_value = h->strings.keep(decimal(r.closed_form->value, ctx));
      i.closed_form_double = r.closed_form->value.convert_to<double>();
    }
    i.piece_count = h->averages.size();
    i.piece_averages = h->averages.data();
    *out = h.release();
  });
}

const gc_average_info* gc_average_get(const gc_average* a) { return a ? &a->info : nullptr; }

void gc_average_free(gc_average* a) { delete a; }

gc_status gc_piece_average(gc_context* ctx, double a, double b, double t_lo, double t_hi,
                           double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = piece_average(Real(a), Real(b), Real(t_lo), Real(t_hi)).convert_to<double>();
  });
}

gc_status gc_markoff_numbers(gc_context* ctx, const char* limit, gc_int_list** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = int_list(markoff_numbers(parse_int(limit)));
  });
}

gc_status gc_fibonacci(gc_context* ctx, size_t count, gc_int_list** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (count == 0) throw Error(ErrorCode::kDomain, "count must be >= 1");
    *out = int_list(fibonacci(count));
  });
}

gc_status gc_pell(gc_context* ctx, size_t count, gc_int_list** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (count == 0) throw Error(ErrorCode::kDomain, "count must be >= 1");
    *out = int_list(pell(count));
  });
}

gc_status gc_lagrange_spectrum(gc_context* ctx, size_t count, gc_spectrum** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    auto h = std::make_unique<gc_spectrum>();
    for (const SpectrumEntry& e : lagrange_spectrum(count)) {
      const Real v = e.lagrange.to_real();
      h->items.push_back({h->strings.keep(e.m.str()), h->strings.keep(e.lagrange.to_string()),
                          h->strings.keep(decimal(v, ctx)), v.convert_to<double>()});
    }
    *out = h.release();
  });
}

size_t gc_spectrum_size(const gc_spectrum* s) { return s ? s->items.size() : 0; }

const gc_spectrum_entry* gc_spectrum_at(const gc_spectrum* s, size_t i) {
  return (s && i < s->items.size()) ? &s->items[i] : nullptr;
}

void gc_spectrum_free(gc_spectrum* s) { delete s; }

}  // extern "C"
