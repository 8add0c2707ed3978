#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "growcap/numeric.hpp"
#include "growcap/surd.hpp"

namespace growcap {

using MarkoffTriple = std::array<BigInt, 3>;  // sorted, a^2 + b^2 + c^2 = 3abc

/// Every Markoff triple with largest entry <= limit, found by Vieta moves
/// (a, b, c) -> (a, b, 3ab - c) from (1, 1, 1). Sorted lexicographically by c.
std::vector<MarkoffTriple> markoff_triples(const BigInt& limit);

/// Distinct Markoff numbers <= limit, increasing. Requires limit >= 1.
std::vector<BigInt> markoff_numbers(const BigInt& limit);

struct SpectrumEntry {
  BigInt m;
  Surd lagrange;  // sqrt(9 - 4/m^2) = sqrt(9m^2 - 4) / m
};

/// The first `count` values L_n of the Lagrange spectrum below 3.
std::vector<SpectrumEntry> lagrange_spectrum(std::size_t count);

/// 1, 2, 3, 5, 8, ... (F_0 = 1, F_1 = 2).
std::vector<BigInt> fibonacci(std::size_t count);
/// 1, 2, 5, 12, 29, ... (P_0 = 1, P_1 = 2, P_n = 2 P_{n-1} + P_{n-2}).
std::vector<BigInt> pell(std::size_t count);
/// (phi^(n+2) - (-1/phi)^(n+2)) / sqrt(5) evaluated exactly in Q(sqrt 5);
/// equals F_n in the indexing above.
Surd binet_fibonacci(std::size_t n);

namespace constants {
Surd golden();      // (1 + sqrt 5) / 2
Surd silver();      // 1 + sqrt 2
Surd markoff_5();   // (11 + sqrt 221) / 10
Surd markoff_13();  // (29 + sqrt 1517) / 26
}  // namespace constants

}  // namespace growcap
