#include "doctest.h"

#include <map>
#include <random>
#include <stdexcept>

#include "etaq/factors.hpp"
#include "etaq/products.hpp"
#include "etaq/report.hpp"
#include "etaq/serialize.hpp"
#include "etaq/series.hpp"
#include "etaq/theta.hpp"

using namespace etaq;

namespace {

UniSeries uni(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  const int order = static_cast<int>(v.size()) - 1;
  return UniSeries(order, std::move(v));
}

LaurentPoly poly(int lo, std::vector<long> c) { return LaurentPoly(lo, std::vector<Integer>(c.begin(), c.end())); }

UniSeries random_uni(std::mt19937& g, int order) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = d(g);
  return UniSeries(order, std::move(c));
}

// Row n has z-exponents in [-n, n]; the tail bound lo >= -n then holds for every row.
BiSeries random_bi(std::mt19937& g, int order) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<LaurentPoly> rows;
  for (int n = 0; n <= order; ++n) {
    std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1));
    for (auto& x : c) x = d(g);
    rows.emplace_back(-n, std::move(c));
  }
  return BiSeries(order, std::move(rows), TailBound::linear(1, 1, 0));
}

// Brute-force bivariate series: (q-exponent, z-exponent) -> coefficient, with
// q-exponents above `order` and z-exponents above `zcap` discarded.
struct Brute {
  int order;
  int zcap;
  std::map<std::pair<int, int>, Integer> c{{{0, 0}, Integer(1)}};

  // *= (1 - sign z^ze q^qe), or /= it as a geometric series.
  void mul_binomial(int ze, int qe, int sign) {
    std::map<std::pair<int, int>, Integer> out = c;
    for (const auto& [k, v] : c) {
      const int n = k.first + qe, i = k.second + ze;
      if (n <= order && i <= zcap) out[{n, i}] -= sign * v;
    }
    c = std::move(out);
  }
  void div_binomial(int ze, int qe, int sign) {
    std::map<std::pair<int, int>, Integer> out;
    for (const auto& [k, v] : c) {
      Integer w = v;
      for (int step = 0;; ++step) {
        const int n = k.first + step * qe, i = k.second + step * ze;
        if (n > order || i > zcap || (qe == 0 && step > zcap + 4 * order + 64)) break;
        out[{n, i}] += w;
        w *= sign;
        if (qe == 0 && ze <= 0) break;
      }
    }
    c = std::move(out);
  }
  Integer at(int n, int i) const {
    auto it = c.find({n, i});
    return it == c.end() ? Integer(0) : it->second;
  }
};

// (sign z^e q^f; q^m)_inf factor by factor, as far as q^order reaches.
template <class Fn>
void each_factor(int f, int m, int order, Fn fn) {
  for (int qe = f; qe <= order; qe += m) fn(qe);
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("uni_mul examples") {
  CHECK(uni({1, -1, 0}) * uni({1, 1, 1}) == uni({1, 0, 0}));
  const UniSeries s = uni({3, -1, 4, 1, -5});
  CHECK(UniSeries::one(4) * s == s);
  CHECK((UniSeries(4) * s).is_zero());
  CHECK((uni({1, 2, 3}) * uni({1, 1})).order() == 1);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(uni({1, -1, 0, 0, 0})) == uni({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(reciprocal(uni({2, 1})), std::invalid_argument);
  // Partition numbers from a direct count of partitions by largest part.
  std::vector<long> p(11, 0);
  p[0] = 1;
  for (int part = 1; part <= 10; ++part)
    for (int n = part; n <= 10; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  CHECK(p == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
  CHECK(reciprocal(euler_series(1, 10)) == uni(p));
  std::mt19937 g(7);
  for (int trial = 0; trial < 10; ++trial) {
    UniSeries s = random_uni(g, 20);
    s[0] = trial % 2 ? 1 : -1;
    CHECK(reciprocal(reciprocal(s)) == s);
    CHECK(reciprocal(s) * s == UniSeries::one(20));
  }
}

TEST_CASE("pow and dilate") {
  const UniSeries e = euler_series(1, 30);
  CHECK(pow(e, 3) == e * e * e);
  CHECK(pow(e, -2) == reciprocal(e * e));
  CHECK(pow(e, 0) == UniSeries::one(30));
  CHECK(dilate(e, 3) == euler_series(3, 30));
}

TEST_CASE("ring laws on random UniSeries, order 15") {
  std::mt19937 g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const UniSeries a = random_uni(g, 15), b = random_uni(g, 15), c = random_uni(g, 15);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == UniSeries(15));
  }
}

TEST_CASE("LaurentPoly basics") {
  CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
  CHECK(poly(-1, {1, 0, 1}) * poly(-1, {1, 0, 1}) == poly(-2, {1, 0, 2, 0, 1}));
  CHECK(LaurentPoly::binomial(3, -1) == poly(0, {1, 0, 0, 1}));
  CHECK(poly(0, {0, 0, 5, 0}) == LaurentPoly::monomial(5, 2));
  CHECK((poly(0, {1, 1}) - poly(0, {1, 1})).is_zero());
  CHECK(divide_exact(poly(0, {1, 0, 0, 0, -1}), poly(0, {1, 0, -1})) == poly(0, {1, 0, 1}));
  CHECK_FALSE(divide_exact(poly(0, {1, 1, 1}), poly(0, {1, -1})).has_value());
  CHECK(poly(-2, {1, 2, 3, 4}).clipped(-1, 0) == poly(-1, {2, 3}));
  CHECK(poly(-1, {1, -1, 1}).sum() == 1);
}

TEST_CASE("bi_mul examples and ring laws") {
  BiSeries a(0, {poly(0, {1, 1})}), b(0, {poly(0, {1, -1})});
  CHECK((a * b).row(0) == poly(0, {1, 0, -1}));
  CHECK(a * BiSeries::one(0) == a);
  BiSeries s(0, {poly(-1, {1, 0, 1})});
  CHECK((s * s).row(0) == poly(-2, {1, 0, 2, 0, 1}));
  std::mt19937 g(13);
  for (int trial = 0; trial < 10; ++trial) {
    const BiSeries x = random_bi(g, 15), y = random_bi(g, 15), z = random_bi(g, 15);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("expand_factors examples") {
  // [z;q] at order 1, against the three factors (1-z)(1-zq)(1-q/z) multiplied out.
  const BiSeries br = expand_factors(bracket(1, 0, 1), 1);
  CHECK(br.row(0) == poly(0, {1, -1}));
  CHECK(br.row(1) == poly(-1, {-1, 1, -1, 1}));
  CHECK(expand_factors(euler_factor(1), 7) == BiSeries::from_uni(uni({1, -1, -1, 0, 0, 1, 0, 1})));
  CHECK(expand_factors(FactorList{}, 5) == BiSeries::one(5));
  CHECK_THROWS_WITH_AS(expand_factors(FactorList{} / pochhammer(1, 0, 1), 3), doctest::Contains("q^0 z-factor"),
                       std::domain_error);
}

TEST_CASE("expand_factors against brute-force products") {
  struct Atom {
    int e, f, m, sign;
    bool denom;
  };
  const std::vector<std::vector<Atom>> cases = {
      {{1, 0, 1, 1, false}, {-1, 1, 1, 1, false}, {0, 1, 1, 1, false}},  // Jacobi product
      {{2, 1, 2, 1, true}, {-1, 1, 1, -1, false}, {-3, 2, 3, 1, true}},
      {{1, 1, 1, 1, true}, {-1, 1, 1, 1, true}, {0, 1, 1, 1, false}},  // crank generating function
  };
  const int order = 12;
  for (const auto& atoms : cases) {
    FactorList f;
    Brute brute{order, 10 * order};
    for (const auto& a : atoms) {
      if (a.denom) {
        f /= pochhammer(a.e, a.f, a.m, a.sign);
        each_factor(a.f, a.m, order, [&](int qe) { brute.div_binomial(a.e, qe, a.sign); });
      } else {
        f *= pochhammer(a.e, a.f, a.m, a.sign);
        each_factor(a.f, a.m, order, [&](int qe) { brute.mul_binomial(a.e, qe, a.sign); });
      }
    }
    const BiSeries s = expand_factors(f, order);
    for (int n = 0; n <= order; ++n)
      for (int i = -4 * order; i <= 4 * order; ++i) REQUIRE(s.coeff(n, i) == brute.at(n, i));
  }
}

TEST_CASE("jacobi triple product") {
  const int order = 30;
  const BiSeries lhs = expand_factors(bracket(1, 0, 1) * euler_factor(1), order);
  std::vector<LaurentPoly> rows(order + 1);
  for (int n = -order; n <= order + 1; ++n) {
    const long e = static_cast<long>(n) * (n - 1) / 2;
    if (e <= order) rows[static_cast<std::size_t>(e)] += LaurentPoly::monomial(n % 2 ? -1 : 1, n);
  }
  CHECK(lhs == BiSeries(order, rows));
}

TEST_CASE("cancel_q0 examples") {
  auto single = [](int e) { return pochhammer(e, 0, 1, 1, 1); };
  auto cofactor = [](const FactorList& f) {
    REQUIRE(f.numer.empty());
    REQUIRE(f.denom.empty());
    REQUIRE(f.polys.size() == 1);
    return f.polys.front();
  };
  CHECK(cofactor(cancel_q0(single(4), single(2))) == poly(0, {1, 0, 1}));
  CHECK(cofactor(cancel_q0(single(2), single(1))) == poly(0, {1, 1}));
  CHECK(cofactor(cancel_q0(single(3), single(1))) == poly(0, {1, 1, 1}));
  CHECK_THROWS_WITH_AS(cancel_q0(single(3), single(2)), doctest::Contains("non-cancellable q^0 denominator"),
                       std::domain_error);
  // r_factors(2): (1 - z^2)/(1 - z) leaves 1 + z.
  const FactorList r2 = cancel_q0(r_factors(2));
  REQUIRE(r2.polys.size() == 1);
  CHECK(r2.polys.front() == poly(0, {1, 1}));
  CHECK(expand_factors(r2, 0).row(0) == poly(0, {1, 1}));
}

TEST_CASE("expand_windowed examples") {
  const BiSeries geo = expand_windowed(FactorList{} / pochhammer(1, 0, 1, 1, 1), 0, {0, 3});
  CHECK_FALSE(geo.exact());
  CHECK(geo.row(0) == poly(0, {1, 1, 1, 1}));
  const BiSeries two = expand_windowed(FactorList{} / pochhammer(1, 0, 1, 1, 2), 1, {0, 4});
  CHECK(two.coeff(1, 2) == 1);
  CHECK_THROWS_AS(expand_windowed(FactorList{}, 1, {3, 2}), std::invalid_argument);

  // E(q)/((z;q)(q/z;q)) in the window [-1, 1].
  const FactorList f = euler_factor(1) / (pochhammer(1, 0, 1) * pochhammer(-1, 1, 1));
  const BiSeries w = expand_windowed(f, 6, {-1, 1});
  Brute brute{6, 1 + 6};
  for (int qe = 1; qe <= 6; ++qe) brute.mul_binomial(0, qe, 1);
  for (int qe = 0; qe <= 6; ++qe) brute.div_binomial(1, qe, 1);
  for (int qe = 1; qe <= 6; ++qe) brute.div_binomial(-1, qe, 1);
  CHECK(w.coeff(1, -1) == 1);
  CHECK(w.coeff(1, 0) == 0);
  CHECK(w.coeff(1, 1) == 1);
  for (int n = 0; n <= 6; ++n)
    for (int i = -1; i <= 1; ++i) CHECK(w.coeff(n, i) == brute.at(n, i));
}

TEST_CASE("windowed expansion agrees with cancelled expansion") {
  std::mt19937 g(17);
  std::uniform_int_distribution<int> ez(-3, 3), ef(1, 3), em(1, 3), pick(1, 3);
  const ZWindow window{-5, 5};
  for (int trial = 0; trial < 20; ++trial) {
    // (1 - z^{ke}) / (1 - z^e) times random atoms: cancelled symbolically on one
    // side; on the other the pole is expanded geometrically and the numerator
    // multiplied in afterwards.
    FactorList rest;
    const int e = pick(g), k = pick(g);
    for (int a = 0; a < 3; ++a) {
      const int m = em(g);
      const int shift = std::min(ef(g), m);
      rest *= pochhammer(ez(g), shift, m);
      rest /= pochhammer(ez(g), shift, m);
    }
    const FactorList f = rest * pochhammer(k * e, 0, 1, 1, 1) / pochhammer(e, 0, 1, 1, 1);
    const BiSeries exact = expand_factors(cancel_q0(f), 10);
    BiSeries windowed = expand_windowed(rest / pochhammer(e, 0, 1, 1, 1), 10, window);
    windowed.mul_poly(LaurentPoly::binomial(k * e));
    REQUIRE_FALSE(windowed.exact());
    REQUIRE_FALSE(first_difference(exact, windowed).has_value());
  }
}

TEST_CASE("substitute_z examples") {
  BiSeries s(2, {poly(0, {1, 1}), LaurentPoly(), LaurentPoly()}, TailBound::linear(0, 1, 0));
  CHECK(substitute_z(s, 2, 1).truncated(2) == uni({1, 0, 1}));
  CHECK_THROWS_AS(substitute_z(s, 0, 1), std::invalid_argument);

  const UniSeries direct = expand_univariate(bracket(0, 1, 3), 40);
  const UniSeries via_bi = substitute_z(expand_factors(bracket(1, 0, 1), 40), 1, 3);
  const UniSeries via_list = substitute_z(bracket(1, 0, 1), 1, 3, 40);
  CHECK(via_list == direct);
  CHECK(via_bi.order() >= 40);
  CHECK(via_bi.truncated(40) == direct);

  const UniSeries c2 = substitute_z(c_series(2, 40), 1, 1);
  const UniSeries product = substitute_z(pochhammer(1, 0, 1, -1) * pochhammer(-1, 1, 1, -1) * euler_factor(1), 1, 1, 40);
  CHECK(c2.order() >= 10);
  CHECK(c2 == product.truncated(c2.order()));
}

TEST_CASE("substitute_z commutes with products") {
  std::mt19937 g(19);
  for (int trial = 0; trial < 10; ++trial) {
    const BiSeries a = random_bi(g, 10), b = random_bi(g, 10);
    const UniSeries lhs = substitute_z(a * b, 1, 2);
    const UniSeries rhs = substitute_z(a, 1, 2) * substitute_z(b, 1, 2);
    REQUIRE(lhs.order() == 10);
    CHECK(lhs == rhs.truncated(10));
  }
  // Fractional slopes lose one unit of offset in the product bound; the claimed order stays sound.
  {
    const FactorList f = euler_factor(1) / pochhammer(-1, 2, 2), h = pochhammer(-1, 2, 2) * euler_factor(2);
    const BiSeries a = expand_factors(f, 30), b = expand_factors(h, 30);
    const UniSeries lhs = substitute_z(a * b, 1, 1);
    const UniSeries rhs = substitute_z(f * h, 1, 1, 60);
    REQUIRE(lhs.order() >= 10);
    CHECK(lhs == rhs.truncated(lhs.order()));
  }
}

TEST_CASE("substitute_z_one and reduce_mod_z_pow") {
  BiSeries crank(1, {LaurentPoly::constant(1), poly(-1, {1, -1, 1})});
  CHECK(substitute_z_one(crank) == uni({1, 1}));
  CHECK(substitute_z_one(BiSeries(5)).is_zero());
  UniSeries three = klyachko_theta(3, 20);
  three *= Integer(3);
  CHECK(substitute_z_one(c_series(3, 20)) == three);

  BiSeries s(0, {LaurentPoly::monomial(1, 3) + LaurentPoly::monomial(1, -1)});
  CHECK(reduce_mod_z_pow(s, 2).row(0) == LaurentPoly::monomial(2, 1));
  CHECK(reduce_mod_z_pow(BiSeries::one(0), 2).row(0) == LaurentPoly::constant(1));
  const BiSeries c3 = reduce_mod_z_pow(c_series(3, 10), 3);
  for (int n = 0; n <= 10; ++n) {
    const Integer c0 = c3.row(n).coeff(0);
    CHECK(c3.row(n) == poly(0, {1, 1, 1}) * LaurentPoly::constant(c0));
  }
}

TEST_CASE("shift_z_to_zq examples") {
  BiSeries z(2, {LaurentPoly::monomial(1, 1), LaurentPoly(), LaurentPoly()}, TailBound::linear(0, 1, 0));
  CHECK(shift_z_to_zq(z).row(1) == LaurentPoly::monomial(1, 1));
  CHECK(shift_z_to_zq(z).row(0).is_zero());
  BiSeries zi(2, {LaurentPoly(), LaurentPoly::monomial(1, -1), LaurentPoly()}, TailBound::linear(0, 1, 1));
  CHECK(shift_z_to_zq(zi).row(0) == LaurentPoly::monomial(1, -1));
  CHECK_THROWS_AS(shift_z_to_zq(BiSeries(2, {LaurentPoly(), LaurentPoly(), LaurentPoly()})), std::invalid_argument);

  // z R_2(zq;q) = R_2(z;q), through the factor list.
  const FactorList r = r_factors(2);
  const BiSeries lhs = times_zpow(expand_factors(cancel_q0(shift_z_to_zq(r)), 15), 1);
  CHECK(lhs == expand_factors(cancel_q0(r), 15));
}

TEST_CASE("truncation stability") {
  const std::vector<FactorList> lists = {
      bracket(1, 0, 1) * euler_factor(1),
      euler_factor(1) / (pochhammer(1, 1, 1) * pochhammer(-1, 1, 1)),
      cancel_q0(r_factors(3)),
      cancel_q0(euler_factor(2) * bracket(4, 0, 2) / (bracket(2, 0, 2) * bracket(3, 1, 2))),
  };
  for (const auto& f : lists) {
    const BiSeries hi = expand_factors(f, 25);
    for (int o : {0, 3, 10, 24}) CHECK(hi.truncated(o) == expand_factors(f, o));
  }
  for (int o : {0, 5, 17}) CHECK(eta_quotient(EtaQuotientSpec::parse("5^5*1^-1"), 40).series.truncated(o) ==
                                 eta_quotient(EtaQuotientSpec::parse("5^5*1^-1"), o).series);
}

TEST_CASE("nonneg_scan") {
  CHECK(nonneg_scan(uni({1, 1, 2})).status == Status::Pass);
  const auto r = nonneg_scan(uni({1, -1}));
  CHECK(r.status == Status::Fail);
  REQUIRE(r.first);
  CHECK(r.first->n == 1);
  CHECK(r.first->value == -1);
  const auto crank = nonneg_scan(expand_factors(euler_factor(1) / (pochhammer(1, 1, 1) * pochhammer(-1, 1, 1)), 20));
  REQUIRE(crank.first);
  CHECK(crank.first->n == 1);
  CHECK(crank.first->zexp == 0);
  CHECK(crank.first->value == -1);
}

TEST_CASE("series JSON round trip") {
  const UniSeries u = euler_series(1, 12);
  CHECK(uni_from_json(to_json(u)) == u);
  const BiSeries b = c_series(3, 8);
  CHECK(bi_from_json(to_json(b)) == b);
  const auto j = to_json(u);
  CHECK(j["order"] == 12);
  CHECK(j["rows"][1]["coeffs"][0] == "-1");
  const BiSeries w = expand_windowed(FactorList{} / pochhammer(1, 0, 1), 3, {-2, 2});
  const auto jw = to_json(w);
  CHECK(jw["exact"] == false);
  CHECK(bi_from_json(jw) == w);
}
