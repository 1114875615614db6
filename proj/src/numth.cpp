#include "etaq/numth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etaq {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive, got " +
                                std::to_string(n));
  }
}

}  // namespace

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t phi = n;
  for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<std::int64_t> coprime_residues_halved(std::int64_t m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("coprime_residues_halved: modulus must be odd and >= 3, got " +
                                std::to_string(m));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r <= (m - 1) / 2; ++r) {
    if (std::gcd(r, m) == 1) out.push_back(r);
  }
  return out;
}

}  // namespace etaq
