#pragma once

#include <cstdint>
#include <vector>

#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// Parts in weakly decreasing order.
struct Partition {
  std::vector<int> parts;

  int size() const;
  /// Conjugate partition.
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// Hook lengths of every cell, row by row.
std::vector<int> hook_lengths(const Partition& p);

/// Number of partitions of n with no hook of length t (n <= 40).
std::int64_t count_tcores(int t, int n);

/// E(q^t)^t / E(q)
UniSeries tcore_series(int t, int order);

/// Every coefficient of tcore_series(t, order) is >= 1 for tmin <= t <= tmax (tmin >= 4).
VerificationReport positivity_scan(int tmin, int tmax, int order);

}  // namespace etaq
