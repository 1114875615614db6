#include "etaq/products.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etaq {

UniSeries euler_series(int d, int order) {
  UniSeries s = UniSeries::one(order);
  for (const auto& t : pentagonal_terms(d, order)) s[t.exp] = t.coeff;
  return s;
}

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw std::invalid_argument("eta quotient \"" + std::string(text) + "\": " + why);
}

}  // namespace

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  EtaQuotientSpec spec;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> long {
    skip_ws();
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) bad_spec(text, "expected an integer at offset " + std::to_string(start));
    if (pos - digits > 9) bad_spec(text, "integer too large");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  bool any = false;
  while (true) {
    const long k = read_int(false);
    if (k < 1) bad_spec(text, "eta arguments must be positive");
    long e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int(true);
    }
    spec.terms[static_cast<int>(k)] += static_cast<int>(e);
    any = true;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') bad_spec(text, std::string("unexpected character '") + text[pos] + "'");
    ++pos;
  }
  if (!any) bad_spec(text, "empty product");
  std::erase_if(spec.terms, [](const auto& kv) { return kv.second == 0; });
  if (spec.terms.empty()) bad_spec(text, "all exponents cancel");
  return spec;
}

std::string EtaQuotientSpec::to_string() const {
  std::string s;
  for (const auto& [k, e] : terms) {
    if (!s.empty()) s += " * ";
    s += std::to_string(k) + "^" + std::to_string(e);
  }
  return s;
}

EtaQuotientSpec& EtaQuotientSpec::operator*=(const EtaQuotientSpec& o) {
  for (const auto& [k, e] : o.terms) terms[k] += e;
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

FactorList eta_factors(const EtaQuotientSpec& spec) {
  FactorList f;
  for (const auto& [k, e] : spec.terms) f.euler.push_back({k, e});
  return f;
}

EtaExpansion eta_quotient(const EtaQuotientSpec& spec, int order) {
  long weighted = 0;
  for (const auto& [k, e] : spec.terms) weighted += static_cast<long>(k) * e;
  Rational prefactor(weighted, 24);
  prefactor.canonicalize();
  return {prefactor, expand_univariate(eta_factors(spec), order)};
}

FactorList euler_factor(int d, int power) {
  if (d < 1) throw std::invalid_argument("euler_factor: d must be >= 1");
  FactorList f;
  if (power != 0) f.euler.push_back({d, power});
  return f;
}

FactorList pochhammer(int e, int f, int m, int sign, std::optional<int> length) {
  if (f < 0) throw std::invalid_argument("pochhammer: q-shift must be >= 0");
  if (m < 1) throw std::invalid_argument("pochhammer: q-step must be >= 1");
  if (length && *length < 0) throw std::invalid_argument("pochhammer: negative length");
  FactorList out;
  if (length && *length == 0) return out;
  out.numer.push_back({sign, e, f, m, length});
  return out;
}

FactorList bracket(int e, int f, int m) {
  if (m < 1) throw std::invalid_argument("bracket: q-step must be >= 1");
  if (f < 0 || f >= m) {
    throw std::invalid_argument("bracket: need 0 <= f < m (reduce f mod m; got f=" + std::to_string(f) +
                                ", m=" + std::to_string(m) + ")");
  }
  return pochhammer(e, f, m) * pochhammer(-e, m - f, m);
}

UniSeries gaussian_poly(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("gaussian_poly: n and m must be >= 0");
  // (1 - q^{n+1}) ... (1 - q^{n+m}) / ((1 - q) ... (1 - q^m)), divided exactly.
  LaurentPoly p = LaurentPoly::constant(1);
  for (int i = 1; i <= m; ++i) p = p * LaurentPoly::binomial(n + i);
  for (int i = 1; i <= m; ++i) {
    auto q = divide_exact(p, LaurentPoly::binomial(i));
    if (!q) throw std::logic_error("gaussian_poly: inexact division by (1 - q^" + std::to_string(i) + ")");
    p = std::move(*q);
  }
  const int degree = n * m;
  UniSeries s(degree);
  for (int e = 0; e <= degree; ++e) s[e] = p.coeff(e);
  return s;
}

}  // namespace etaq
