#include "doctest.h"
#include "growcap/literal.hpp"

using namespace growcap;

namespace {

std::size_t parse_position(const char* text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("surd literals") {
  CHECK(parse_surd("phi") == Surd::make(1, 1, 2, 5));
  CHECK(parse_surd("psi") == Surd::make(1, 1, 1, 2));
  CHECK(parse_surd("sqrt(7)-1") == Surd::make(-1, 1, 1, 7));
  CHECK(parse_surd("(11+sqrt(221))/10") == Surd::make(11, 1, 10, 221));
  CHECK(parse_surd("5.3") == Surd::rational(53, 10));
  CHECK(parse_surd(" -2 * ( 3 + 1 ) ") == Surd(-8));
  CHECK(parse_surd("2sqrt(2)") == Surd::make(0, 2, 1, 2));
  CHECK(parse_surd("sqrt(8)/2") == Surd::sqrt_of(BigInt(2)));
  CHECK(parse_surd("phi-1") == Surd(1) / parse_surd("phi"));
  CHECK(parse_surd("1/phi") == parse_surd("phi") - Surd(1));
  CHECK(parse_surd("sqrt(9/4)") == Surd::rational(3, 2));
}

TEST_CASE("complex literals") {
  const ComplexLiteral two_i = parse_complex("2i");
  REQUIRE(two_i.exact());
  CHECK(std::get<Gaussian<Surd>>(two_i.value).re == Surd(0));
  CHECK(std::get<Gaussian<Surd>>(two_i.value).im == Surd(2));

  const ComplexLiteral w = parse_complex("phi + i/10");
  REQUIRE(w.exact());
  CHECK(std::get<Gaussian<Surd>>(w.value).re == parse_surd("phi"));
  CHECK(std::get<Gaussian<Surd>>(w.value).im == Surd::rational(1, 10));

  const ComplexLiteral rho = parse_complex("(1+sqrt(3)*i)/2");
  REQUIRE(rho.exact());
  CHECK(std::get<Gaussian<Surd>>(rho.value).im == Surd::sqrt_of(BigInt(3)) / Surd(2));

  const ComplexLiteral prod = parse_complex("(1+i)*(1-i)");
  REQUIRE(prod.exact());
  CHECK(std::get<Gaussian<Surd>>(prod.value).re == Surd(2));
  CHECK(std::get<Gaussian<Surd>>(prod.value).im == Surd(0));

  const ComplexLiteral inv = parse_complex("1/(2i)");
  CHECK(std::get<Gaussian<Surd>>(inv.value).im == Surd::rational(-1, 2));

  // Coordinates in different fields stay exact until arithmetic mixes them.
  CHECK(parse_complex("phi + sqrt(2)*i").exact());
  PrecisionScope scope(128);
  const ComplexLiteral mixed = parse_complex("(phi + sqrt(2)*i)*(1+i)");
  REQUIRE_FALSE(mixed.exact());
  const auto& g = std::get<Gaussian<Real>>(mixed.value);
  const Real root5 = boost::multiprecision::sqrt(Real(5));
  const Real root2 = boost::multiprecision::sqrt(Real(2));
  CHECK(boost::multiprecision::abs(g.re - ((1 + root5) / 2 - root2)) < Real(1e-35));
  CHECK(boost::multiprecision::abs(g.im - ((1 + root5) / 2 + root2)) < Real(1e-35));
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_position("1+*2") == 2);
  CHECK(parse_position("sqrt(2") == 6);
  CHECK(parse_position("foo") == 0);
  CHECK(parse_position("2 + x") == 4);
  CHECK(parse_position("1/0") == 1);
  CHECK(parse_position("") == 0);
  CHECK_THROWS_AS(parse_surd("i"), ParseError);
  CHECK_THROWS_AS(parse_surd("sqrt(-2)"), ParseError);
  CHECK_THROWS_AS(parse_surd("sqrt(phi)"), ParseError);
  try {
    parse_surd("1+*2");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    CHECK(e.code() == ErrorCode::kParse);
  }
}
