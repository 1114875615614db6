#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>

#include "json.hpp"

#include "etaq/products.hpp"
#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// S_N(q) = E(q^N)^{phi(N)} / prod_{d|N} E(q^d)^{mu(d)}, together with the
/// q-power (N phi(N) - sum_{d|N} d mu(d)) / 24 of the eta form.
struct SaitoSeries {
  Rational prefactor;
  UniSeries series;
};

/// The eta quotient eta(N tau)^{phi(N)} / prod_{d|N} eta(d tau)^{mu(d)}.
EtaQuotientSpec saito_spec(std::int64_t n);

SaitoSeries saito_series(std::int64_t n, int order);

/// prod_{d|M} E(q^d)^{mu(d)}, computed from Euler products.
UniSeries mobius_product(std::int64_t m, int order);
/// prod_{n >= 1, gcd(n, M) = 1} (1 - q^n), computed factor by factor.
UniSeries coprime_product(std::int64_t m, int order);

struct PrimePowerCase {
  std::int64_t p;
  int alpha;
};
/// N = p M, M odd, M >= 3, p not dividing M.
struct CaseTwo {
  std::int64_t p;
  std::int64_t m;
};
/// N = p^alpha M with alpha >= 2; reduces to N' = p M.
struct CaseThree {
  std::int64_t p;
  int alpha;
  std::int64_t m;
  std::int64_t nprime;
};
using SaitoCase = std::variant<PrimePowerCase, CaseTwo, CaseThree>;

/// p = 2 for even N, otherwise the smallest prime factor; M = N / p^alpha.
SaitoCase classify(std::int64_t n);

/// prod over r in coprime_residues_halved(M) of D_p(q^r; q^M) against S_N.
VerificationReport verify_case2(std::int64_t n, int order);

/// (E(q^{p^{alpha-1} N'})^{p^{alpha-1}} / E(q^{N'}))^{(p-1) phi(M)} S_{N'} against
/// S_N, plus prod_{d|N} E(q^d)^{mu(d)} = prod_{d|N'} E(q^d)^{mu(d)}. Uses
/// classify() when it yields CaseThree, otherwise the smallest prime whose
/// square divides N (so M may be even, e.g. 18 = 3^2 * 2 with N' = 6).
VerificationReport verify_case3(std::int64_t n, int order);

struct NonnegReport {
  std::int64_t n = 0;
  int order = 0;
  Rational prefactor;
  bool pass = true;
  std::optional<std::pair<int, Integer>> first_negative;
};

NonnegReport nonneg_report(std::int64_t n, int order);

/// {"N", "order", "prefactor": "a/b", "pass", "firstNegative": null | {"n", "coeff"}}
nlohmann::json to_json(const NonnegReport& r);

}  // namespace etaq
