#include "doctest.h"

#include <stdexcept>

#include "etaq/factors.hpp"
#include "etaq/products.hpp"

using namespace etaq;

TEST_CASE("factor list algebra") {
  const FactorList f = pochhammer(1, 0, 1) * euler_factor(2, 3);
  const FactorList g = f / pochhammer(-1, 1, 1);
  CHECK(g.numer.size() == 1);
  CHECK(g.denom.size() == 1);
  CHECK(g.euler.size() == 1);
  FactorList with_poly;
  with_poly.polys.push_back(LaurentPoly::binomial(1));
  CHECK_THROWS_AS(f / with_poly, std::invalid_argument);
  CHECK(euler_factor(3, 0) == FactorList{});
  CHECK(pochhammer(1, 0, 1, 1, 0) == FactorList{});
}

TEST_CASE("tail bound covers every row") {
  const std::vector<FactorList> lists = {
      bracket(1, 0, 1),
      euler_factor(1) / (pochhammer(1, 1, 1) * pochhammer(-1, 1, 1)),
      euler_factor(3) * pochhammer(2, 0, 3) / (pochhammer(-1, 3, 3) * pochhammer(1, 1, 1)),
      bracket(-3, 1, 3) * bracket(2, 0, 1),
  };
  for (const auto& f : lists) {
    const BiSeries s = expand_factors(f, 40);
    const TailBound t = tail_bound(f);
    for (int n = 0; n <= 40; ++n) {
      if (!s.row(n).is_zero()) CHECK(s.row(n).lo() >= t.floor_at(n));
    }
  }
}

TEST_CASE("substitution of a factor list matches the expanded series") {
  const FactorList f = euler_factor(1) / (pochhammer(1, 1, 1) * pochhammer(-1, 1, 1));
  for (int r = 1; r <= 2; ++r) {
    for (int m = r + 1; m <= 4; ++m) {
      const UniSeries direct = substitute_z(f, r, m, 30);
      const UniSeries via = substitute_z(expand_factors(f, 40), r, m);
      const int o = std::min(direct.order(), via.order());
      CHECK(o >= 30);
      CHECK(direct.truncated(o) == via.truncated(o));
    }
  }
}

TEST_CASE("symbolic z -> zq shift") {
  const FactorList s = shift_z_to_zq(pochhammer(1, 0, 1) * pochhammer(-1, 1, 1));
  REQUIRE(s.numer.size() == 2);
  CHECK(s.numer[0].qshift == 1);
  CHECK(s.numer[1].qshift == 0);
  CHECK_THROWS_AS(shift_z_to_zq(pochhammer(-1, 0, 1)), std::domain_error);
}

TEST_CASE("expand_univariate") {
  CHECK(expand_univariate(pochhammer(0, 1, 1), 12) == euler_series(1, 12));
  CHECK_THROWS_AS(expand_univariate(pochhammer(1, 1, 1), 5), std::invalid_argument);
  // (q^3/z; q^3) with z -> q: (q^2; q^3).
  CHECK(substitute_z(pochhammer(-1, 3, 3), 1, 1, 20) == expand_univariate(pochhammer(0, 2, 3), 20));
}
