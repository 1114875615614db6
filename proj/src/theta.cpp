#include "etaq/theta.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/products.hpp"

namespace etaq {

namespace {

void require_rank(int a, int min, const char* what) {
  if (a < min) throw std::invalid_argument(std::string(what) + ": need a >= " + std::to_string(min));
}

// Twice the centered form: a x^2 + (2i - (a-1)) x, nonnegative for integer x.
long twice_term(int a, int i, long x) { return a * x * x + (2L * i - (a - 1)) * x; }

}  // namespace

long qform(int a, std::span<const int> v) {
  require_rank(a, 1, "qform");
  if (static_cast<int>(v.size()) != a) throw std::invalid_argument("qform: vector length must equal a");
  long sum = 0, sq = 0, lin = 0;
  for (int i = 0; i < a; ++i) {
    sum += v[i];
    sq += static_cast<long>(v[i]) * v[i];
    lin += static_cast<long>(i) * v[i];
  }
  if (sum != 0) throw std::invalid_argument("qform: coordinates must sum to zero");
  return (a * sq) / 2 + lin;
}

int coordinate_radius(int a, int bound) {
  require_rank(a, 1, "coordinate_radius");
  if (bound < 0) return -1;
  const long disc = static_cast<long>(a - 1) * (a - 1) + 8L * a * bound;
  long s = static_cast<long>(std::sqrt(static_cast<long double>(disc)));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  return static_cast<int>((a - 1 + s) / (2L * a));
}

std::vector<LatticeVector> enumerate_lattice(int a, int bound) {
  require_rank(a, 1, "enumerate_lattice");
  std::vector<LatticeVector> out;
  if (bound < 0) return out;
  const int radius = coordinate_radius(a, bound);
  const long limit = 2L * bound;
  LatticeVector v(static_cast<std::size_t>(a), 0);
  // Coordinates 0..a-2 are free, n_{a-1} = -(partial sum).
  auto recurse = [&](auto&& self, int i, long partial, long sum) -> void {
    if (i == a - 1) {
      const long last = -sum;
      if (std::abs(last) > radius) return;
      if (partial + twice_term(a, i, last) > limit) return;
      v[static_cast<std::size_t>(i)] = static_cast<int>(last);
      out.push_back(v);
      return;
    }
    const long remaining = a - 1 - i;
    for (int x = -radius; x <= radius; ++x) {
      const long p = partial + twice_term(a, i, x);
      if (p > limit) continue;
      if (std::abs(sum + x) > remaining * radius) continue;
      v[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, p, sum + x);
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

UniSeries klyachko_theta(int t, int order) {
  require_rank(t, 1, "klyachko_theta");
  UniSeries s(order);
  for (const auto& v : enumerate_lattice(t, order)) s[static_cast<int>(qform(t, v))] += 1;
  return s;
}

TailBound theta_tail(int a) { return TailBound::radical(2 * a, a - 1); }

std::vector<BiSeries> theta_components(int a, int order) {
  require_rank(a, 2, "theta_components");
  const int radius = coordinate_radius(a, order);
  const int zlo = -a * radius;
  const int width = 2 * a * radius + a;
  // counts[j][n][z - zlo]
  std::vector<std::vector<std::vector<long>>> counts(
      static_cast<std::size_t>(a),
      std::vector<std::vector<long>>(static_cast<std::size_t>(order) + 1,
                                     std::vector<long>(static_cast<std::size_t>(width), 0)));
  for (const auto& v : enumerate_lattice(a, order)) {
    const long q = qform(a, v);
    if (q < 0) throw std::logic_error("theta_components: negative quadratic form value");
    const auto n = static_cast<std::size_t>(q);
    counts[0][n][static_cast<std::size_t>(-a * v[a - 1] - zlo)] += 1;
    for (int j = 1; j < a; ++j) counts[j][n][static_cast<std::size_t>(a * v[j] + j - zlo)] += 1;
  }
  std::vector<BiSeries> out;
  out.reserve(static_cast<std::size_t>(a));
  for (int j = 0; j < a; ++j) {
    std::vector<LaurentPoly> rows;
    rows.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
      const auto& c = counts[j][n];
      rows.emplace_back(zlo, std::vector<Integer>(c.begin(), c.end()));
    }
    out.emplace_back(order, std::move(rows), theta_tail(a));
  }
  return out;
}

BiSeries f_component(int a, int j, int order) {
  require_rank(a, 2, "f_component");
  if (j < 0 || j >= a) throw std::invalid_argument("f_component: need 0 <= j < a");
  return std::move(theta_components(a, order)[static_cast<std::size_t>(j)]);
}

BiSeries c_series(int a, int order) {
  auto parts = theta_components(a, order);
  BiSeries sum = std::move(parts[0]);
  for (std::size_t j = 1; j < parts.size(); ++j) sum += parts[j];
  return sum;
}

FactorList r_factors(int a) {
  require_rank(a, 2, "r_factors");
  return euler_factor(1) * euler_factor(a, a - 2) * bracket(a, 0, a) / bracket(1, 0, 1);
}

FactorList d_factors(int a) {
  require_rank(a, 2, "d_factors");
  return euler_factor(a, 2 * a - 2) * bracket(a, 0, a) / bracket(1, 0, 1);
}

UniSeries d_specialized(int a, int r, int m, int order) {
  require_rank(a, 2, "d_specialized");
  if (r <= 0) throw std::invalid_argument("d_specialized: r must be positive");
  if (m <= 0) throw std::invalid_argument("d_specialized: m must be positive");
  const TailBound tail = theta_tail(a);
  int rows = order / m;
  while (tail.first_exponent_beyond(rows, r, m) - 1 < order) ++rows;
  const UniSeries theta = substitute_z(c_series(a, rows), r, m).truncated(order);
  const UniSeries prefix = expand_univariate(euler_factor(a * m, a) * euler_factor(m, -1), order);
  return theta * prefix;
}

LatticeVector reindex_cyclic(std::span<const int> n, int j) {
  const int a = static_cast<int>(n.size());
  if (j < 1 || j >= a) throw std::invalid_argument("reindex_cyclic: need 1 <= j < a");
  LatticeVector out(n.begin() + 1, n.end());
  out.push_back(n[0]);
  out[static_cast<std::size_t>(j - 1)] += 1;
  out[static_cast<std::size_t>(a - 1)] -= 1;
  return out;
}

LatticeVector reindex_reflect_f0(std::span<const int> n) {
  const int a = static_cast<int>(n.size());
  require_rank(a, 2, "reindex_reflect_f0");
  LatticeVector out(static_cast<std::size_t>(a));
  for (int i = 0; i <= a - 2; ++i) out[static_cast<std::size_t>(i)] = -n[static_cast<std::size_t>(a - 2 - i)];
  out[static_cast<std::size_t>(a - 1)] = -n[static_cast<std::size_t>(a - 1)];
  return out;
}

LatticeVector reindex_reflect_f1(std::span<const int> n) {
  const int a = static_cast<int>(n.size());
  require_rank(a, 2, "reindex_reflect_f1");
  LatticeVector out(static_cast<std::size_t>(a));
  out[0] = -n[0] + 1;
  for (int i = 1; i < a; ++i) out[static_cast<std::size_t>(i)] = -n[static_cast<std::size_t>(a - i)];
  out[static_cast<std::size_t>(a - 1)] -= 1;
  return out;
}

}  // namespace etaq
