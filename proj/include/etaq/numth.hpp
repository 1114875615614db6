#pragma once

#include <cstdint>
#include <vector>

namespace etaq {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// All functions below reject n = 0 (std::invalid_argument); trial division
// is enough for the desk-scale arguments the products use.

Factorization factorize(std::int64_t n);

int mobius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Residues 1 <= r <= (m-1)/2 with gcd(r, m) = 1, for odd m >= 3.
/// These index the bracket products [q^r; q^m] that pair r with m - r.
std::vector<std::int64_t> coprime_residues_halved(std::int64_t m);

}  // namespace etaq
