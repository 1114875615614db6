#pragma once

#include <optional>
#include <vector>

#include "etaq/series.hpp"

namespace etaq {

/// (sign * z^zexp * q^qshift ; q^qstep)_length, i.e. the product of
/// (1 - sign * z^zexp * q^(qshift + k*qstep)) for k = 0 .. length-1;
/// an absent length means the infinite product.
struct PochhammerAtom {
  int sign = 1;
  int zexp = 0;
  int qshift = 0;
  int qstep = 1;
  std::optional<int> length;

  friend bool operator==(const PochhammerAtom&, const PochhammerAtom&) = default;
};

/// E(q^d)^power
struct EulerTag {
  int d = 1;
  int power = 1;

  friend bool operator==(const EulerTag&, const EulerTag&) = default;
};

/// A product of Pochhammer atoms (numerator or denominator), Euler products,
/// and q-free numerator polynomials in z. Nothing is expanded until
/// expand_factors / expand_windowed / expand_univariate.
struct FactorList {
  std::vector<PochhammerAtom> numer;
  std::vector<PochhammerAtom> denom;
  std::vector<EulerTag> euler;
  std::vector<LaurentPoly> polys;

  FactorList& operator*=(const FactorList& o);
  /// Throws std::invalid_argument if o carries polynomial cofactors.
  FactorList& operator/=(const FactorList& o);

  friend bool operator==(const FactorList&, const FactorList&) = default;
};

FactorList operator*(FactorList a, const FactorList& b);
FactorList operator/(FactorList a, const FactorList& b);

/// numerator / denominator with every q^0 denominator factor (1 - sign z^e)
/// divided exactly into the q^0 numerator factors; the quotients become
/// explicit polynomials. Throws std::domain_error ("non-cancellable q^0
/// denominator") when some q^0 denominator divides none of them.
FactorList cancel_q0(const FactorList& numerator, const FactorList& denominator);
FactorList cancel_q0(const FactorList& f);

/// Exact expansion to q^order. Denominators are expanded geometrically in
/// z^e q^f (f >= 1). Rejects denominator atoms still sitting at q^0.
BiSeries expand_factors(const FactorList& f, int order);

/// Expansion of a list whose leftover q^0 denominators are binomials
/// (1 - sign z^e), e >= 1, expanded in nonnegative powers of z^e. Every
/// coefficient with zmin <= zexp <= zmax is exact.
BiSeries expand_windowed(const FactorList& f, int order, ZWindow window);

/// Expansion of a z-free list straight into a UniSeries.
UniSeries expand_univariate(const FactorList& f, int order);

/// Bound on the lowest z-exponent of every row of the expansion.
TailBound tail_bound(const FactorList& f);

/// z -> q^r, q -> q^m applied symbolically, then expanded to `order`.
UniSeries substitute_z(const FactorList& f, int r, int m, int order);

/// z -> zq applied to every atom: z^e q^f becomes z^e q^(f+e).
FactorList shift_z_to_zq(const FactorList& f);

}  // namespace etaq
