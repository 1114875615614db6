#include "etaq/pcore.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/products.hpp"

namespace etaq {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  c.parts.resize(static_cast<std::size_t>(parts.front()), 0);
  for (int part : parts) {
    for (int j = 0; j < part; ++j) ++c.parts[static_cast<std::size_t>(j)];
  }
  return c;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back({cur});
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<int> hook_lengths(const Partition& p) {
  const Partition c = p.conjugate();
  std::vector<int> hooks;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (int j = 0; j < p.parts[i]; ++j) {
      const int arm = p.parts[i] - j - 1;
      const int leg = c.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

std::int64_t count_tcores(int t, int n) {
  if (t < 1) throw std::invalid_argument("count_tcores: t must be positive");
  if (n < 0 || n > 40) throw std::invalid_argument("count_tcores: n must lie in 0..40");
  std::int64_t count = 0;
  for (const auto& p : partitions(n)) {
    const auto hooks = hook_lengths(p);
    if (std::find(hooks.begin(), hooks.end(), t) == hooks.end()) ++count;
  }
  return count;
}

UniSeries tcore_series(int t, int order) {
  if (t < 1) throw std::invalid_argument("tcore_series: t must be positive");
  return expand_univariate(euler_factor(t, t) * euler_factor(1, -1), order);
}

VerificationReport positivity_scan(int tmin, int tmax, int order) {
  if (tmin < 4) throw std::invalid_argument("positivity_scan: tmin must be >= 4 (a_3(3) = 0)");
  if (tmax < tmin) throw std::invalid_argument("positivity_scan: empty t range");
  VerificationReport r;
  r.id = "PCORE_POS";
  r.params = {{"tmin", tmin}, {"tmax", tmax}};
  r.order = order;
  for (int t = tmin; t <= tmax && r.status == Status::Pass; ++t) {
    const UniSeries s = tcore_series(t, order);
    for (int n = 0; n <= order; ++n) {
      if (s[n] < 1) {
        r.status = Status::Fail;
        r.first = Discrepancy{{{"t", t}}, n, std::nullopt, s[n], Integer(1), "a_t(n) < 1"};
        break;
      }
    }
  }
  return r;
}

}  // namespace etaq
