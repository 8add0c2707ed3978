#include "growcap/markoff.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace growcap {

std::vector<MarkoffTriple> markoff_triples(const BigInt& limit) {
  std::vector<MarkoffTriple> out;
  if (limit < 1) return out;
  std::set<MarkoffTriple> seen;
  std::deque<MarkoffTriple> queue{{1, 1, 1}};
  seen.insert(queue.front());
  while (!queue.empty()) {
    const MarkoffTriple t = queue.front();
    queue.pop_front();
    out.push_back(t);
    // One Vieta move per coordinate; the resulting triple is re-sorted.
    for (int k = 0; k < 3; ++k) {
      const BigInt& u = t[(k + 1) % 3];
      const BigInt& v = t[(k + 2) % 3];
      MarkoffTriple n{u, v, 3 * u * v - t[k]};
      std::sort(n.begin(), n.end());
      if (n[0] < 1 || n[2] > limit) continue;
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  std::sort(out.begin(), out.end(), [](const MarkoffTriple& l, const MarkoffTriple& r) {
    return l[2] != r[2] ? l[2] < r[2] : l < r;
  });
  return out;
}

std::vector<BigInt> markoff_numbers(const BigInt& limit) {
  if (limit < 1) throw Error(ErrorCode::kDomain, "limit must be >= 1");
  std::set<BigInt> found;
  for (const MarkoffTriple& t : markoff_triples(limit)) found.insert(t.begin(), t.end());
  return {found.begin(), found.end()};
}

std::vector<SpectrumEntry> lagrange_spectrum(std::size_t count) {
  std::vector<SpectrumEntry> out;
  if (count == 0) return out;
  // Grow the search bound until enough distinct Markoff numbers are found.
  BigInt limit = 100;
  std::vector<BigInt> ms;
  for (;;) {
    ms = markoff_numbers(limit);
    if (ms.size() >= count) break;
    limit *= 16;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt& m = ms[i];
    out.push_back({m, Surd::make(0, 1, m, 9 * m * m - 4)});
  }
  return out;
}

std::vector<BigInt> fibonacci(std::size_t count) {
  std::vector<BigInt> out;
  BigInt a = 1, b = 2;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(a);
    a = std::exchange(b, a + b);
  }
  return out;
}

std::vector<BigInt> pell(std::size_t count) {
  std::vector<BigInt> out;
  BigInt a = 1, b = 2;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(a);
    a = std::exchange(b, 2 * b + a);
  }
  return out;
}

Surd binet_fibonacci(std::size_t n) {
  const Surd phi = constants::golden();
  const Surd conj = Surd(-1) / phi;
  Surd pp = 1, pc = 1;
  for (std::size_t i = 0; i < n + 2; ++i) {
    pp *= phi;
    pc *= conj;
  }
  return (pp - pc) / Surd::sqrt_of(BigInt(5));
}

namespace constants {
Surd golden() { return Surd::make(1, 1, 2, 5); }
Surd silver() { return Surd::make(1, 1, 1, 2); }
Surd markoff_5() { return Surd::make(11, 1, 10, 221); }
Surd markoff_13() { return Surd::make(29, 1, 26, 1517); }
}  // namespace constants

}  // namespace growcap
