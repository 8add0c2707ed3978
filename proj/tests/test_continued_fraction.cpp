#include <vector>

#include "doctest.h"
#include "growcap/continued_fraction.hpp"
#include "growcap/literal.hpp"
#include "support.hpp"

using namespace growcap;

namespace {

std::vector<std::pair<long, long>> as_pairs(const std::vector<Convergent>& cs) {
  std::vector<std::pair<long, long>> out;
  for (const Convergent& c : cs) out.emplace_back(c.p.convert_to<long>(), c.q.convert_to<long>());
  return out;
}

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const BigInt& n : v) out.push_back(n.convert_to<long>());
  return out;
}

}  // namespace

TEST_CASE("cf_expand of the named constants") {
  auto cf = cf_expand(parse_surd("phi"));
  CHECK(as_longs(cf.preperiod) == std::vector<long>{1});
  CHECK(as_longs(cf.period) == std::vector<long>{1});

  cf = cf_expand(parse_surd("psi"));
  CHECK(as_longs(cf.preperiod) == std::vector<long>{2});
  CHECK(as_longs(cf.period) == std::vector<long>{2});

  cf = cf_expand(parse_surd("sqrt(7)-1"));
  CHECK(as_longs(cf.preperiod) == std::vector<long>{1});
  CHECK(as_longs(cf.period) == std::vector<long>{1, 1, 1, 4});

  cf = cf_expand(parse_surd("-phi"));
  CHECK(cf.term(0) == -2);
  CHECK(cf.term(1) >= 1);

  CHECK_THROWS_AS(cf_expand(Surd::rational(3, 7)), Error);
  try {
    cf_expand(Surd(2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRationalInput);
  }
}

TEST_CASE("convergents") {
  const auto s7 = as_pairs(convergents(cf_expand(parse_surd("sqrt(7)-1")), 10));
  CHECK(s7 == std::vector<std::pair<long, long>>{{1, 1},   {2, 1},   {3, 2},   {5, 3},
                                                 {23, 14}, {28, 17}, {51, 31}, {79, 48},
                                                 {367, 223}, {446, 271}});
  // Indices 1 .. 10, the list quoted for sqrt(7) - 1.
  const auto s7_11 = as_pairs(convergents(cf_expand(parse_surd("sqrt(7)-1")), 11));
  CHECK(std::vector<std::pair<long, long>>(s7_11.begin() + 1, s7_11.end()) ==
        std::vector<std::pair<long, long>>{{2, 1},    {3, 2},    {5, 3},    {23, 14},
                                           {28, 17},  {51, 31},  {79, 48},  {367, 223},
                                           {446, 271}, {813, 494}});

  const auto phi = as_pairs(convergents(cf_expand(parse_surd("phi")), 5));
  CHECK(phi == std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}});

  const auto one = convergents(cf_expand(parse_surd("sqrt(3)-1")), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].p == 0);
  CHECK(one[0].q == 1);

  CHECK_THROWS_AS(convergents(cf_expand(parse_surd("phi")), 0), Error);
}

TEST_CASE("convergent invariants") {
  for (const auto& [name, x] : test_support::named_values()) {
    CAPTURE(name);
    const auto cs = convergents(cf_expand(x), 40);
    for (std::size_t n = 1; n < cs.size(); ++n) {
      const BigInt det = cs[n].p * cs[n - 1].q - cs[n - 1].p * cs[n].q;
      CHECK((det == 1 || det == -1));
      CHECK(boost::multiprecision::gcd(cs[n].p, cs[n].q) == 1);
      if (n >= 2) CHECK(cs[n].q > cs[n - 1].q);
      // |x - p/q| < 1/q^2, i.e. |q (q x - p)| < 1
      const Surd u = (Surd(cs[n].q) * (Surd(cs[n].q) * x - Surd(cs[n].p))).abs();
      CHECK(u < Surd(1));
    }
  }
}

TEST_CASE("periodic values and complete quotients") {
  CHECK(periodic_value(std::vector<BigInt>{1}) == parse_surd("phi"));
  CHECK(periodic_value(std::vector<BigInt>{2}) == parse_surd("psi"));
  CHECK(periodic_value(std::vector<BigInt>{1, 2}) == parse_surd("(1+sqrt(3))/2"));
  const Surd x = parse_surd("sqrt(7)-1");
  CHECK(complete_quotient(x, 0) == x);
  CHECK(complete_quotient(x, 1) == Surd(1) / (x - Surd(1)));
  // x_5 = x_1 by periodicity of length 4.
  CHECK(complete_quotient(x, 5) == complete_quotient(x, 1));
}

TEST_CASE("lambda_n") {
  const Surd phi = parse_surd("phi");
  CHECK(lambda_n(phi, 3) == Surd::rational(2, 3) + phi);
  CHECK_THROWS_AS(lambda_n(phi, 0), Error);
  try {
    lambda_n(phi, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
    CHECK(std::string(e.what()).find("n=0") != std::string::npos);
  }
  // lambda_n -> sqrt(5) and sqrt(8)
  PrecisionScope scope(128);
  const Real l = lambda_n(phi, 40).to_real();
  CHECK(boost::multiprecision::abs(l - boost::multiprecision::sqrt(Real(5))) < Real(1e-15));
  const Real m = lambda_n(parse_surd("psi"), 40).to_real();
  CHECK(boost::multiprecision::abs(m - boost::multiprecision::sqrt(Real(8))) < Real(1e-25));
}

TEST_CASE("|q_n (q_n x - p_n)| * lambda_n = 1 exactly") {
  for (const auto& [name, x] : test_support::named_values()) {
    CAPTURE(name);
    const auto cs = convergents(cf_expand(x), 31);
    for (std::size_t n = 1; n <= 30; ++n) {
      const Surd u = (Surd(cs[n].q) * (Surd(cs[n].q) * x - Surd(cs[n].p))).abs();
      CHECK(u * lambda_n(x, n) == Surd(1));
    }
  }
}

TEST_CASE("Lagrange numbers") {
  CHECK(lagrange_number(parse_surd("phi"), 30).limit == Surd::sqrt_of(BigInt(5)));
  CHECK(lagrange_number(parse_surd("psi"), 30).limit == Surd::sqrt_of(BigInt(8)));
  CHECK(lagrange_number(parse_surd("sqrt(2)-1"), 30).limit == Surd::sqrt_of(BigInt(8)));
  CHECK(lagrange_number(parse_surd("(11+sqrt(221))/10"), 50).limit ==
        Surd::sqrt_of(BigInt(221)) / Surd(5));
  CHECK(lagrange_number(parse_surd("(29+sqrt(1517))/26"), 50).limit ==
        Surd::sqrt_of(BigInt(1517)) / Surd(13));
  CHECK(lagrange_number(parse_surd("sqrt(7)-1"), 30).limit == Surd::sqrt_of(BigInt(28)));
  CHECK(lagrange_number(parse_surd("sqrt(3)-1"), 30).limit == Surd::sqrt_of(BigInt(12)));

  // The window maximum at depth 50 agrees with the limit to many digits.
  PrecisionScope scope(128);
  const auto est = lagrange_number(parse_surd("(11+sqrt(221))/10"), 50);
  CHECK(boost::multiprecision::abs(est.window_max.to_real() - est.limit.to_real()) < Real(1e-20));
  CHECK(est.window_last == 50);
}
