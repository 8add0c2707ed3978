#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "growcap/continued_fraction.hpp"
#include "growcap/markoff.hpp"

using namespace growcap;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const BigInt& n : v) out.push_back(n.convert_to<long>());
  return out;
}

// Markoff numbers <= limit by solving a^2 - 3bc a + b^2 + c^2 = 0 for every b <= c.
std::vector<long> brute_markoff(long limit) {
  std::vector<long> out;
  for (long c = 1; c <= limit; ++c) {
    bool found = false;
    for (long b = 1; b <= c && !found; ++b) {
      const long long disc = 9LL * b * b * c * c - 4LL * (b * b + c * c);
      if (disc < 0) continue;
      const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
      for (long long s = std::max(0LL, r - 2); s <= r + 2; ++s) {
        if (s * s != disc) continue;
        const long long twice = 3LL * b * c - s;
        if (twice > 0 && twice % 2 == 0 && twice / 2 <= b) found = true;
      }
    }
    if (found) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("Markoff numbers") {
  CHECK(as_longs(markoff_numbers(1500)) ==
        std::vector<long>{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985, 1325});
  CHECK(as_longs(markoff_numbers(1)) == std::vector<long>{1});
  CHECK(as_longs(markoff_numbers(100)) == std::vector<long>{1, 2, 5, 13, 29, 34, 89});
  CHECK(as_longs(markoff_numbers(1500)) == brute_markoff(1500));
  CHECK_THROWS_AS(markoff_numbers(0), Error);
}

TEST_CASE("Markoff triples") {
  const auto ts = markoff_triples(100000);
  CHECK(ts.size() > 20);
  for (const auto& t : ts) {
    CHECK(t[0] <= t[1]);
    CHECK(t[1] <= t[2]);
    CHECK(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] == 3 * t[0] * t[1] * t[2]);
  }
  std::vector<MarkoffTriple> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("Lagrange spectrum") {
  const auto sp = lagrange_spectrum(10);
  REQUIRE(sp.size() == 10);
  CHECK(sp[0].lagrange == Surd::sqrt_of(BigInt(5)));
  CHECK(sp[1].lagrange == Surd::sqrt_of(BigInt(8)));
  CHECK(sp[2].m == 5);
  CHECK(sp[2].lagrange == Surd::sqrt_of(BigInt(221)) / Surd(5));
  PrecisionScope scope(128);
  for (std::size_t k = 0; k < sp.size(); ++k) {
    CHECK(sp[k].lagrange < Surd(3));
    if (k > 0) CHECK(sp[k - 1].lagrange.to_real() < sp[k].lagrange.to_real());
    const Real m = to_real(sp[k].m);
    const Real direct = boost::multiprecision::sqrt(9 - 4 / (m * m));
    CHECK(boost::multiprecision::abs(direct - sp[k].lagrange.to_real()) < Real(1e-30));
  }
  CHECK(lagrange_number(constants::golden(), 20).limit == sp[0].lagrange);
  CHECK(lagrange_number(constants::silver(), 20).limit == sp[1].lagrange);
  CHECK(lagrange_number(constants::markoff_5(), 40).limit == sp[2].lagrange);
  CHECK(lagrange_number(constants::markoff_13(), 40).limit == sp[3].lagrange);
  CHECK(lagrange_spectrum(0).empty());
}

TEST_CASE("Fibonacci and Pell") {
  CHECK(as_longs(fibonacci(6)) == std::vector<long>{1, 2, 3, 5, 8, 13});
  CHECK(as_longs(pell(8)) == std::vector<long>{1, 2, 5, 12, 29, 70, 169, 408});
  const auto f = fibonacci(40);
  for (std::size_t n = 0; n < f.size(); ++n) CHECK(binet_fibonacci(n) == Surd(f[n]));
  CHECK(binet_fibonacci(10) == Surd(144));
}

TEST_CASE("named constants") {
  CHECK(constants::golden() == Surd::make(1, 1, 2, 5));
  CHECK(constants::silver() == Surd::make(1, 1, 1, 2));
  CHECK(constants::markoff_5().d() == 221);
  CHECK(constants::markoff_13().d() == 1517);
}
