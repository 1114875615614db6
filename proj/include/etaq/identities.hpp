#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etaq/report.hpp"
#include "etaq/series.hpp"

namespace etaq {

enum class IdentityId {
  THM1,
  CAZQ2,
  KID,
  EPROP,
  DPROD,
  SPROP,
  PCORE1,
  ATQ,
  ATQFIN,
  CORATQ1,
  CORATQ2,
  CORATQ3,
  CRANKGEN,
  ACI,
  RES1,
  RES2,
  EKIN,
  CAZQZERO,
  FUNCEQ_R,
  FUNCEQ_C,
  FUNCEQ_F,
  CONJ2A,
  CONJ2B,
  CONJ2C,
};

std::string to_string(IdentityId id);
/// Throws std::invalid_argument for unknown names.
IdentityId parse_identity(std::string_view name);
std::span<const IdentityId> all_identities();

struct IdentityInfo {
  IdentityId id;
  /// Parameter names in grid order.
  std::vector<std::string> params;
  int default_order;
  /// Largest order the builder accepts.
  int max_order;
  /// Conjecture: reports scan-pass / scan-fail, never pass.
  bool scan_only;
  /// Uncancellable q^0 pole: needs a z-window.
  bool needs_window;
};

const IdentityInfo& info(IdentityId id);

struct IdentityParams {
  ParamMap values;
  std::optional<int> order;
  std::optional<ZWindow> window;

  long get(const std::string& name) const;
};

/// Builds both sides (or the scanned side) and compares exactly.
/// Throws std::invalid_argument for missing or out-of-range parameters.
VerificationReport verify(IdentityId id, const IdentityParams& params);

/// Inclusive ranges per parameter name.
using ParamGrid = std::map<std::string, std::pair<long, long>>;

/// Every parameter tuple in the grid, ordered lexicographically by the id's parameter order.
std::vector<ParamMap> expand_grid(IdentityId id, const ParamGrid& grid);

/// One report for a whole conjecture grid: scan-pass iff no negative
/// coefficient appears for any tuple; otherwise the first failing tuple in grid order.
VerificationReport scan_conjecture(IdentityId id, const ParamGrid& grid, int order,
                                   std::optional<ZWindow> window, int jobs = 1);

/// M(m, n) for 0 <= n <= nmax (nmax <= 25), from the crank of every partition.
using CrankTable = std::vector<std::map<int, std::int64_t>>;
CrankTable crank_table(int nmax);

}  // namespace etaq
