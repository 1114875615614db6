#include "doctest.h"

#include <map>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "etaq/numth.hpp"
#include "etaq/products.hpp"
#include "etaq/saito.hpp"

using namespace etaq;

namespace {

UniSeries uni(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  const int order = static_cast<int>(v.size()) - 1;
  return UniSeries(order, std::move(v));
}

int mu_oracle(long n) {
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

long phi_oracle(long n) {
  long c = 0;
  for (long k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

// prod_k (1 - q^k)^{e_k}, one linear factor at a time.
UniSeries product_oracle(const std::map<long, long>& e, int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (const auto& [k, x] : e) {
    for (long rep = 0; rep < std::abs(x); ++rep) {
      if (x > 0) {
        for (long n = order; n >= k; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - k)];
      } else {
        for (long n = k; n <= order; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - k)];
      }
    }
  }
  return UniSeries(order, std::move(c));
}

// Exponents of (1 - q^k) in E(q^N)^{phi(N)} / prod_{d|N} E(q^d)^{mu(d)}.
std::map<long, long> saito_exponents(long big, int order) {
  std::map<long, long> e;
  for (long k = big; k <= order; k += big) e[k] += phi_oracle(big);
  for (long d = 1; d <= big; ++d) {
    if (big % d) continue;
    for (long k = d; k <= order; k += d) e[k] -= mu_oracle(d);
  }
  return e;
}

}  // namespace

TEST_CASE("saito_series examples") {
  const auto s1 = saito_series(1, 20);
  CHECK(s1.prefactor == 0);
  CHECK(s1.series == UniSeries::one(20));
  CHECK(saito_series(2, 10).series == uni({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    Rational want(p * p - 1, 24);
    want.canonicalize();
    CHECK(saito_series(p, 5).prefactor == want);
  }
}

TEST_CASE("saito_series against a factor-by-factor product") {
  for (long n = 1; n <= 40; ++n) {
    const int o = 80;
    CHECK(saito_series(n, o).series == product_oracle(saito_exponents(n, o), o));
  }
}

TEST_CASE("prefactor consistency") {
  for (long n = 1; n <= 200; ++n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += d * mu_oracle(d);
    Rational want(n * phi_oracle(n) - s, 24);
    want.canonicalize();
    const Rational got = saito_series(n, 0).prefactor;
    CHECK(got == want);
    CHECK(got >= 0);
  }
}

TEST_CASE("mobius_product") {
  CHECK(mobius_product(1, 30) == euler_series(1, 30));
  CHECK(mobius_product(2, 6) == uni({1, -1, 0, -1, 1, -1, 1}));
  for (long m = 1; m <= 40; ++m) {
    const int o = 100;
    std::map<long, long> e;
    for (long k = 1; k <= o; ++k)
      if (std::gcd(k, m) == 1) e[k] = 1;
    const UniSeries want = product_oracle(e, o);
    CHECK(mobius_product(m, o) == want);
    CHECK(coprime_product(m, o) == want);
  }
}

TEST_CASE("bracket regrouping over halved residues") {
  for (long m = 3; m <= 39; m += 2) {
    const int o = 100;
    FactorList f;
    for (long r : coprime_residues_halved(m)) f *= bracket(0, static_cast<int>(r), static_cast<int>(m));
    CHECK(expand_univariate(f, o) == mobius_product(m, o));
  }
}

TEST_CASE("classify") {
  const auto c8 = std::get<PrimePowerCase>(classify(8));
  CHECK(c8.p == 2);
  CHECK(c8.alpha == 3);
  const auto c10 = std::get<CaseTwo>(classify(10));
  CHECK(c10.p == 2);
  CHECK(c10.m == 5);
  const auto c12 = std::get<CaseThree>(classify(12));
  CHECK(c12.p == 2);
  CHECK(c12.alpha == 2);
  CHECK(c12.m == 3);
  CHECK(c12.nprime == 6);
  const auto c45 = std::get<CaseThree>(classify(45));
  CHECK(c45.p == 3);
  CHECK(c45.m == 5);
  CHECK(c45.nprime == 15);
  CHECK(std::holds_alternative<PrimePowerCase>(classify(7)));
  CHECK_THROWS_AS(classify(1), std::invalid_argument);
  for (long n = 2; n <= 200; ++n) {
    const SaitoCase c = classify(n);
    if (auto* two = std::get_if<CaseTwo>(&c)) {
      CHECK(two->p * two->m == n);
      CHECK(two->m % 2 == 1);
      CHECK(two->m >= 3);
      CHECK(two->m % two->p != 0);
      if (n % 2 == 0) CHECK(two->p == 2);
    }
    if (auto* three = std::get_if<CaseThree>(&c)) {
      CHECK(three->alpha >= 2);
      CHECK(three->nprime == three->p * three->m);
      CHECK(three->m % 2 == 1);
      CHECK(three->m > 1);
    }
  }
}

TEST_CASE("case reductions") {
  for (long n : {10, 15, 21}) CHECK(verify_case2(n, 60).status == Status::Pass);
  for (long n : {12, 18, 45}) CHECK(verify_case3(n, 80).status == Status::Pass);
  for (long n = 2; n <= 60; ++n) {
    const SaitoCase c = classify(n);
    if (std::holds_alternative<CaseTwo>(c)) {
      const auto r = verify_case2(n, 150);
      CHECK_MESSAGE(r.status == Status::Pass, "N=" << n);
      CHECK(r.id == "DPROD");
    }
    if (std::holds_alternative<CaseThree>(c)) {
      const auto r = verify_case3(n, 150);
      CHECK_MESSAGE(r.status == Status::Pass, "N=" << n);
      CHECK(r.id == "SPROP");
    }
  }
}

TEST_CASE("nonnegativity") {
  CHECK(nonneg_report(1, 50).pass);
  CHECK(nonneg_report(6, 200).pass);
  CHECK(nonneg_report(30, 200).pass);
  for (long n = 1; n <= 60; ++n) CHECK_MESSAGE(nonneg_report(n, 200).pass, "N=" << n);
  const auto j = to_json(nonneg_report(5, 10));
  CHECK(j["N"] == 5);
  CHECK(j["order"] == 10);
  CHECK(j["prefactor"] == "1/1");
  CHECK(j["pass"] == true);
  CHECK(j["firstNegative"].is_null());
  CHECK(to_json(nonneg_report(2, 10))["prefactor"] == "1/8");
}
