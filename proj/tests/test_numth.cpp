#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "etaq/numth.hpp"

using namespace etaq;

namespace {

// Oracles by direct definition.
int mobius_oracle(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

long phi_oracle(long n) {
  long c = 0;
  for (long k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  for (long n = 1; n <= 2000; ++n) {
    long prod = 1, last = 0;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > last);
      CHECK(e >= 1);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("mobius and phi") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
  for (long n = 1; n <= 500; ++n) {
    CHECK(mobius(n) == mobius_oracle(n));
    CHECK(euler_phi(n) == phi_oracle(n));
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(16) == std::vector<std::int64_t>{1, 2, 4, 8, 16});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("divisor sums over n <= 10000") {
  for (long n = 1; n <= 10000; ++n) {
    long mu_sum = 0, phi_sum = 0;
    for (auto d : divisors(n)) {
      mu_sum += mobius(d);
      phi_sum += euler_phi(d);
    }
    REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    REQUIRE(phi_sum == n);
  }
}

TEST_CASE("coprime_residues_halved") {
  CHECK(coprime_residues_halved(3) == std::vector<std::int64_t>{1});
  CHECK(coprime_residues_halved(5) == std::vector<std::int64_t>{1, 2});
  CHECK(coprime_residues_halved(9) == std::vector<std::int64_t>{1, 2, 4});
  CHECK_THROWS_AS(coprime_residues_halved(4), std::invalid_argument);
  CHECK_THROWS_AS(coprime_residues_halved(1), std::invalid_argument);
  for (long m = 3; m <= 999; m += 2) {
    REQUIRE(static_cast<long>(coprime_residues_halved(m).size()) * 2 == euler_phi(m));
  }
}
