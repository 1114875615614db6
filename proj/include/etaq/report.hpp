#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaq/series.hpp"

namespace etaq {

enum class Status {
  Pass,      // identity verified / proven nonnegativity confirmed
  Fail,
  ScanPass,  // conjecture scan found no counterexample
  ScanFail,
  Excluded,  // parameters outside the claim's hypothesis; expanded for documentation only
};

std::string to_string(Status s);

using ParamMap = std::map<std::string, long>;

/// First coefficient where a check went wrong: a negative coefficient for
/// nonnegativity scans, or a mismatch (with the expected value) for equalities.
struct Discrepancy {
  ParamMap params;
  int n = 0;
  std::optional<int> zexp;
  Integer value;
  std::optional<Integer> expected;
  std::string what;
};

struct VerificationReport {
  std::string id;
  ParamMap params;
  Status status = Status::Pass;
  int order = 0;
  std::optional<Discrepancy> first;
  std::vector<std::string> notes;
  std::optional<double> elapsed_ms;

  bool ok() const { return status == Status::Pass || status == Status::ScanPass || status == Status::Excluded; }
};

/// Every stored coefficient >= 0 (windowed series: only inside the window).
/// Fails with the lexicographically first (n, zexp) negative coefficient.
VerificationReport nonneg_scan(const UniSeries& s);
VerificationReport nonneg_scan(const BiSeries& s);

/// First (n, zexp) where the two series differ, compared up to the smaller order.
std::optional<Discrepancy> first_difference(const UniSeries& lhs, const UniSeries& rhs);
std::optional<Discrepancy> first_difference(const BiSeries& lhs, const BiSeries& rhs);

}  // namespace etaq
