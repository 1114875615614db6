#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "etaq/factors.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// E(q^d) = prod_{n>=1} (1 - q^{dn}) to q^order, via the pentagonal number theorem.
UniSeries euler_series(int d, int order);

/// prod_k eta(k tau)^{e(k)}, as a map k -> e(k) with no zero exponents.
struct EtaQuotientSpec {
  std::map<int, int> terms;

  /// Parses "k1^e1 * k2^e2 ..." (e.g. "5^5 * 1^-1"); a bare "k" means k^1.
  /// Repeated arguments add their exponents.
  static EtaQuotientSpec parse(std::string_view text);
  std::string to_string() const;

  /// Adds exponents termwise (the product of the two eta quotients).
  EtaQuotientSpec& operator*=(const EtaQuotientSpec& o);
};

/// q^prefactor * series, where prefactor = sum k e(k) / 24 in lowest terms.
struct EtaExpansion {
  Rational prefactor;
  UniSeries series;
};

EtaExpansion eta_quotient(const EtaQuotientSpec& spec, int order);

/// The same quotient as an unexpanded list of Euler tags.
FactorList eta_factors(const EtaQuotientSpec& spec);

/// E(q^d)^power as a factor list.
FactorList euler_factor(int d, int power = 1);

/// (sign z^e q^f; q^m)_inf, or the finite product of `length` factors.
FactorList pochhammer(int e, int f, int m, int sign = 1, std::optional<int> length = std::nullopt);

/// [z^e q^f; q^m]_inf = (z^e q^f; q^m)_inf (z^-e q^(m-f); q^m)_inf, 0 <= f < m.
FactorList bracket(int e, int f, int m);

/// Gaussian polynomial [n+m choose m]_q: partitions with at most m parts, each <= n.
UniSeries gaussian_poly(int n, int m);

}  // namespace etaq
