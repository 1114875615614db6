#include "etaq/saito.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/numth.hpp"
#include "etaq/theta.hpp"

namespace etaq {

namespace {

int as_int(std::int64_t v, const char* what) {
  if (v > (1 << 20)) throw std::invalid_argument(std::string(what) + ": argument too large");
  return static_cast<int>(v);
}

VerificationReport compare_report(std::string id, std::int64_t n, const UniSeries& lhs, const UniSeries& rhs) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = {{"N", static_cast<long>(n)}};
  r.order = std::min(lhs.order(), rhs.order());
  if (auto d = first_difference(lhs, rhs)) {
    r.status = Status::Fail;
    r.first = std::move(*d);
  }
  return r;
}

}  // namespace

EtaQuotientSpec saito_spec(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("saito_spec: N must be positive");
  EtaQuotientSpec spec;
  spec.terms[as_int(n, "saito_spec")] += static_cast<int>(euler_phi(n));
  for (auto d : divisors(n)) spec.terms[static_cast<int>(d)] -= mobius(d);
  std::erase_if(spec.terms, [](const auto& kv) { return kv.second == 0; });
  return spec;
}

SaitoSeries saito_series(std::int64_t n, int order) {
  const EtaQuotientSpec spec = saito_spec(n);
  if (spec.terms.empty()) {
    return {Rational(0), UniSeries::one(order)};
  }
  auto eta = eta_quotient(spec, order);
  return {eta.prefactor, std::move(eta.series)};
}

UniSeries mobius_product(std::int64_t m, int order) {
  if (m < 1) throw std::invalid_argument("mobius_product: M must be positive");
  FactorList f;
  for (auto d : divisors(m)) {
    if (const int mu = mobius(d); mu != 0) f.euler.push_back({as_int(d, "mobius_product"), mu});
  }
  return expand_univariate(f, order);
}

UniSeries coprime_product(std::int64_t m, int order) {
  if (m < 1) throw std::invalid_argument("coprime_product: M must be positive");
  UniSeries s = UniSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    if (std::gcd(static_cast<std::int64_t>(n), m) == 1) s.mul_binomial(n);
  }
  return s;
}

SaitoCase classify(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("classify: N must be >= 2");
  const auto factors = factorize(n);
  const PrimePower pp = factors.front();  // smallest prime, so 2 whenever N is even
  std::int64_t m = n;
  for (int i = 0; i < pp.exponent; ++i) m /= pp.prime;
  if (m == 1) return PrimePowerCase{pp.prime, pp.exponent};
  if (pp.exponent == 1) return CaseTwo{pp.prime, m};
  return CaseThree{pp.prime, pp.exponent, m, pp.prime * m};
}

VerificationReport verify_case2(std::int64_t n, int order) {
  const SaitoCase c = classify(n);
  const auto* two = std::get_if<CaseTwo>(&c);
  if (!two) throw std::invalid_argument("verify_case2: N=" + std::to_string(n) + " is not of the form p*M");
  const int p = static_cast<int>(two->p);
  const int m = as_int(two->m, "verify_case2");
  UniSeries product = UniSeries::one(order);
  for (auto r : coprime_residues_halved(two->m)) product = product * d_specialized(p, static_cast<int>(r), m, order);
  auto report = compare_report("DPROD", n, product, saito_series(n, order).series);
  report.notes.push_back("p=" + std::to_string(p) + ", M=" + std::to_string(m));
  return report;
}

VerificationReport verify_case3(std::int64_t n, int order) {
  const SaitoCase c = classify(n);
  std::optional<CaseThree> chosen;
  if (const auto* three = std::get_if<CaseThree>(&c)) {
    chosen = *three;
  } else {
    // The reduction is an identity of eta quotients for any prime with a square
    // factor; only the nonnegativity argument needs M odd.
    for (const auto& pp : factorize(n)) {
      if (pp.exponent < 2) continue;
      std::int64_t m = n;
      for (int i = 0; i < pp.exponent; ++i) m /= pp.prime;
      if (m > 1) {
        chosen = CaseThree{pp.prime, pp.exponent, m, pp.prime * m};
        break;
      }
    }
  }
  if (!chosen) throw std::invalid_argument("verify_case3: N=" + std::to_string(n) + " is not of the form p^a*M, a>=2, M>1");
  const CaseThree* three = &*chosen;
  const int p = static_cast<int>(three->p);
  const int nprime = as_int(three->nprime, "verify_case3");
  std::int64_t p_pow = 1;  // p^{alpha-1}
  for (int i = 1; i < three->alpha; ++i) p_pow *= p;
  const int exponent = (p - 1) * static_cast<int>(euler_phi(three->m));
  // (E(q^{p^{alpha-1} N'})^{p^{alpha-1}} / E(q^{N'}))^{(p-1) phi(M)}
  FactorList first = euler_factor(as_int(p_pow * nprime, "verify_case3"), static_cast<int>(p_pow) * exponent) *
                     euler_factor(nprime, -exponent);
  const UniSeries lhs = expand_univariate(first, order) * saito_series(nprime, order).series;
  auto report = compare_report("SPROP", n, lhs, saito_series(n, order).series);
  if (report.status == Status::Pass) {
    // Square factors of N drop out of the Moebius product.
    if (auto d = first_difference(mobius_product(n, order), mobius_product(nprime, order))) {
      report.status = Status::Fail;
      report.first = std::move(*d);
      report.first->what = "Moebius products over N and N' differ";
    }
  }
  report.notes.push_back("p=" + std::to_string(p) + ", alpha=" + std::to_string(three->alpha) +
                         ", M=" + std::to_string(three->m) + ", N'=" + std::to_string(nprime));
  return report;
}

NonnegReport nonneg_report(std::int64_t n, int order) {
  auto s = saito_series(n, order);
  NonnegReport r;
  r.n = n;
  r.order = order;
  r.prefactor = s.prefactor;
  for (int k = 0; k <= order; ++k) {
    if (sgn(s.series[k]) < 0) {
      r.pass = false;
      r.first_negative = std::make_pair(k, s.series[k]);
      break;
    }
  }
  return r;
}

nlohmann::json to_json(const NonnegReport& r) {
  nlohmann::json first = nullptr;
  if (r.first_negative) first = {{"n", r.first_negative->first}, {"coeff", r.first_negative->second.get_str()}};
  return {{"N", r.n},
          {"order", r.order},
          {"prefactor", r.prefactor.get_num().get_str() + "/" + r.prefactor.get_den().get_str()},
          {"pass", r.pass},
          {"firstNegative", std::move(first)}};
}

}  // namespace etaq
