#include "etaq/report.hpp"

#include <algorithm>

namespace etaq {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ScanPass: return "scan-pass";
    case Status::ScanFail: return "scan-fail";
    case Status::Excluded: return "excluded";
  }
  return "unknown";
}

VerificationReport nonneg_scan(const UniSeries& s) {
  VerificationReport r;
  r.id = "NONNEG";
  r.order = s.order();
  for (int n = 0; n <= s.order(); ++n) {
    if (sgn(s[n]) < 0) {
      r.status = Status::Fail;
      r.first = Discrepancy{{}, n, std::nullopt, s[n], std::nullopt, "negative coefficient"};
      return r;
    }
  }
  return r;
}

VerificationReport nonneg_scan(const BiSeries& s) {
  VerificationReport r;
  r.id = "NONNEG";
  r.order = s.order();
  for (int n = 0; n <= s.order(); ++n) {
    const LaurentPoly& row = s.row(n);
    int lo = row.lo(), hi = row.hi();
    if (s.window()) {
      lo = std::max(lo, s.window()->lo);
      hi = std::min(hi, s.window()->hi);
    }
    for (int i = lo; i <= hi; ++i) {
      Integer c = row.coeff(i);
      if (sgn(c) < 0) {
        r.status = Status::Fail;
        r.first = Discrepancy{{}, n, i, std::move(c), std::nullopt, "negative coefficient"};
        return r;
      }
    }
  }
  return r;
}

std::optional<Discrepancy> first_difference(const UniSeries& lhs, const UniSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    if (lhs[n] != rhs[n]) return Discrepancy{{}, n, std::nullopt, lhs[n], rhs[n], "coefficient mismatch"};
  }
  return std::nullopt;
}

std::optional<Discrepancy> first_difference(const BiSeries& lhs, const BiSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    const LaurentPoly& a = lhs.row(n);
    const LaurentPoly& b = rhs.row(n);
    if (a == b) continue;
    int lo = std::min(a.is_zero() ? b.lo() : a.lo(), b.is_zero() ? a.lo() : b.lo());
    int hi = std::max(a.hi(), b.hi());
    for (const auto& w : {lhs.window(), rhs.window()}) {
      if (w) {
        lo = std::max(lo, w->lo);
        hi = std::min(hi, w->hi);
      }
    }
    for (int i = lo; i <= hi; ++i) {
      if (a.coeff(i) != b.coeff(i)) return Discrepancy{{}, n, i, a.coeff(i), b.coeff(i), "coefficient mismatch"};
    }
  }
  return std::nullopt;
}

}  // namespace etaq
