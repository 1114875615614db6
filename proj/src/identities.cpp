#include "etaq/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "etaq/factors.hpp"
#include "etaq/numth.hpp"
#include "etaq/parallel.hpp"
#include "etaq/pcore.hpp"
#include "etaq/products.hpp"
#include "etaq/saito.hpp"
#include "etaq/theta.hpp"

namespace etaq {

namespace {

using enum IdentityId;

constexpr int kMaxOrder = 2000;

const std::array<IdentityInfo, 24>& catalog() {
  static const std::array<IdentityInfo, 24> table{{
      {THM1, {"a"}, 40, kMaxOrder, false, false},
      {CAZQ2, {}, 40, kMaxOrder, false, false},
      {KID, {"t"}, 100, kMaxOrder, false, false},
      {EPROP, {"M"}, 100, kMaxOrder, false, false},
      {DPROD, {"N"}, 150, kMaxOrder, false, false},
      {SPROP, {"N"}, 150, kMaxOrder, false, false},
      {PCORE1, {"t"}, 14, 40, false, false},
      {ATQ, {"i", "j"}, 60, kMaxOrder, false, false},
      {ATQFIN, {"L", "i", "j"}, 60, kMaxOrder, false, false},
      {CORATQ1, {"a", "b", "M"}, 80, kMaxOrder, false, false},
      {CORATQ2, {"m", "n"}, 80, kMaxOrder, false, false},
      {CORATQ3, {"m", "n"}, 80, kMaxOrder, false, false},
      {CRANKGEN, {}, 12, 25, false, false},
      {ACI, {}, 50, kMaxOrder, false, false},
      {RES1, {}, 50, kMaxOrder, false, false},
      {RES2, {}, 50, kMaxOrder, false, false},
      {EKIN, {}, 30, kMaxOrder, false, false},
      {CAZQZERO, {"a"}, 20, kMaxOrder, false, false},
      {FUNCEQ_R, {"a"}, 15, kMaxOrder, false, false},
      {FUNCEQ_C, {"a"}, 15, kMaxOrder, false, false},
      {FUNCEQ_F, {"a"}, 15, kMaxOrder, false, false},
      {CONJ2A, {"p"}, 100, kMaxOrder, true, true},
      {CONJ2B, {"a", "b", "m", "n"}, 120, kMaxOrder, true, false},
      {CONJ2C, {"a"}, 100, kMaxOrder, true, true},
  }};
  return table;
}

constexpr std::array<const char*, 24> kNames{
    "THM1",     "CAZQ2",  "KID",  "EPROP", "DPROD",    "SPROP",    "PCORE1",   "ATQ",
    "ATQFIN",   "CORATQ1", "CORATQ2", "CORATQ3", "CRANKGEN", "ACI", "RES1",  "RES2",
    "EKIN",     "CAZQZERO", "FUNCEQ_R", "FUNCEQ_C", "FUNCEQ_F", "CONJ2A", "CONJ2B", "CONJ2C",
};

// Context shared by the builders: validated parameters and the report being filled.
struct Job {
  const IdentityInfo& info;
  const IdentityParams& params;
  int order;
  VerificationReport report;

  int arg(const std::string& name, long lo, long hi = 1 << 20) const {
    const long v = params.get(name);
    if (v < lo || v > hi) {
      throw std::invalid_argument(to_string(info.id) + ": parameter " + name + "=" + std::to_string(v) +
                                  " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return static_cast<int>(v);
  }

  void fail(Discrepancy d, std::string what) {
    if (report.status == Status::Fail || report.status == Status::ScanFail) return;
    report.status = info.scan_only ? Status::ScanFail : Status::Fail;
    d.what = std::move(what);
    report.first = std::move(d);
  }

  template <class S>
  void expect_equal(const S& lhs, const S& rhs, const std::string& what) {
    if (auto d = first_difference(lhs, rhs)) fail(std::move(*d), what);
  }

  template <class S>
  void expect_nonneg(const S& s, const std::string& what) {
    if (auto r = nonneg_scan(s); r.first) fail(std::move(*r.first), what);
  }
};

// acc += q^shift * s, truncated to acc's order.
void add_shifted(UniSeries& acc, const UniSeries& s, int shift) {
  for (int n = 0; n + shift <= acc.order() && n <= s.order(); ++n) acc[n + shift] += s[n];
}

// Smallest stored order whose z -> zq shift still reaches `order`.
int order_for_shift(const TailBound& tail, int order) {
  int inner = order;
  while (tail.first_exponent_beyond(inner, 1, 1) - 1 < order) ++inner;
  return inner;
}

BiSeries shifted_times_zpow(const BiSeries& s, int k, int order) {
  return times_zpow(shift_z_to_zq(s).truncated(order), k);
}

// ---------------------------------------------------------------------------

void thm1(Job& job) {
  const int a = job.arg("a", 2, 64);
  const BiSeries lhs = c_series(a, job.order) * expand_factors(bracket(1, 0, 1), job.order);
  const BiSeries rhs = expand_factors(euler_factor(1) * euler_factor(a, a - 2) * bracket(a, 0, a), job.order);
  job.expect_equal(lhs, rhs, "C_a [z;q] != E(q) E(q^a)^(a-2) [z^a;q^a]");
}

void cazq2(Job& job) {
  const int order = job.order;
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int n = -order; n <= order; ++n) {
    const long e = 2L * n * n + n;
    if (e > order) continue;
    auto& row = rows[static_cast<std::size_t>(e)];
    row += LaurentPoly::monomial(1, 2 * n + 1);
    row += LaurentPoly::monomial(1, -2 * n);
  }
  const BiSeries closed(order, std::move(rows));
  job.expect_equal(closed, c_series(2, order), "closed form != C_2");
  const BiSeries product =
      expand_factors(pochhammer(1, 0, 1, -1) * pochhammer(-1, 1, 1, -1) * euler_factor(1), order);
  job.expect_equal(closed, product, "closed form != (-z;q)(-q/z;q)E(q)");
}

void kid(Job& job) {
  const int t = job.arg("t", 1, 64);
  job.expect_equal(klyachko_theta(t, job.order),
                   expand_univariate(euler_factor(t, t) * euler_factor(1, -1), job.order),
                   "lattice sum != E(q^t)^t/E(q)");
}

void eprop(Job& job) {
  const int m = job.arg("M", 1);
  const UniSeries lhs = mobius_product(m, job.order);
  job.expect_equal(lhs, coprime_product(m, job.order), "Moebius product != coprime product");
  if (m >= 3 && m % 2 == 1) {
    FactorList brackets;
    for (auto r : coprime_residues_halved(m)) brackets *= bracket(0, static_cast<int>(r), m);
    job.expect_equal(lhs, expand_univariate(brackets, job.order), "Moebius product != product of [q^r;q^M]");
  }
}

void dprod(Job& job) {
  const int n = job.arg("N", 2);
  auto r = verify_case2(n, job.order);
  job.report.status = r.status;
  job.report.first = std::move(r.first);
  job.report.notes = std::move(r.notes);
}

void sprop(Job& job) {
  const int n = job.arg("N", 2);
  auto r = verify_case3(n, job.order);
  job.report.status = r.status;
  job.report.first = std::move(r.first);
  job.report.notes = std::move(r.notes);
}

void pcore1(Job& job) {
  const int t = job.arg("t", 1, 64);
  const UniSeries s = tcore_series(t, job.order);
  UniSeries counts(job.order);
  for (int n = 0; n <= job.order; ++n) counts[n] = static_cast<long>(count_tcores(t, n));
  job.expect_equal(s, counts, "E(q^t)^t/E(q) != hook-length count");
}

void atq(Job& job) {
  const int i = job.arg("i", 1);
  const int j = job.arg("j", 1);
  const int order = job.order;
  const UniSeries lhs =
      expand_univariate(pochhammer(0, i + j, 1) / (pochhammer(0, i, 1) * pochhammer(0, j, 1)), order);
  UniSeries rhs(order);
  for (int n = 0; static_cast<long>(j) * n <= order; ++n) {
    const FactorList den = pochhammer(0, i + n, 1) * pochhammer(0, 1, 1, 1, n);
    add_shifted(rhs, expand_univariate(FactorList{} / den, order - j * n), j * n);
  }
  job.expect_equal(lhs, rhs, "product != sum");
  job.expect_nonneg(lhs, "negative coefficient");
}

void atqfin(Job& job) {
  const int L = job.arg("L", 0, 512);
  const int i = job.arg("i", 1);
  const int j = job.arg("j", 1);
  const int order = job.order;
  const UniSeries lhs = expand_univariate(
      pochhammer(0, i + j, 1, 1, L) / (pochhammer(0, i, 1, 1, L) * pochhammer(0, j, 1, 1, L)), order);
  UniSeries rhs(order);
  for (int k = 0; k <= L; ++k) {
    if (static_cast<long>(i) * k > order) break;
    const FactorList den = pochhammer(0, i + L - k, 1, 1, k) * pochhammer(0, j + k, 1, 1, L - k);
    const UniSeries term = gaussian_poly(L - k, k);
    UniSeries g(order - i * k);
    for (int n = 0; n <= std::min(term.order(), g.order()); ++n) g[n] = term[n];
    add_shifted(rhs, g * expand_univariate(FactorList{} / den, order - i * k), i * k);
  }
  job.expect_equal(lhs, rhs, "finite product != finite sum");
  job.expect_nonneg(lhs, "negative coefficient");
}

void coratq1(Job& job) {
  const int a = job.arg("a", 1);
  const int b = job.arg("b", 1);
  const int m = job.arg("M", 1);
  job.expect_nonneg(
      expand_univariate(pochhammer(0, a + b, m) / (pochhammer(0, a, m) * pochhammer(0, b, m)), job.order),
      "negative coefficient");
}

void coratq2(Job& job) {
  const int m = job.arg("m", 2);
  const int n = job.arg("n", 2);
  job.expect_nonneg(expand_univariate(euler_factor(m) * euler_factor(n) * euler_factor(1, -1), job.order),
                    "negative coefficient");
}

void coratq3(Job& job) {
  const int m = job.arg("m", 2, 1 << 10);
  const int n = job.arg("n", 2, 1 << 10);
  const UniSeries s =
      expand_univariate(euler_factor(m) * euler_factor(n) * euler_factor(m * n) * euler_factor(1, -1), job.order);
  if (m == 2 && n == 2) {
    job.report.status = Status::Excluded;
    auto scan = nonneg_scan(s);
    if (scan.first) {
      scan.first->what = "first negative coefficient (pair excluded by hypothesis)";
      job.report.first = std::move(scan.first);
    }
    job.report.notes.push_back("(m, n) = (2, 2) lies outside the hypothesis; expanded for documentation");
    return;
  }
  job.expect_nonneg(s, "negative coefficient");
}

FactorList crank_factors() {
  return euler_factor(1) / (pochhammer(1, 1, 1) * pochhammer(-1, 1, 1));
}

void crankgen(Job& job) {
  const int order = job.order;
  const BiSeries s = expand_factors(crank_factors(), order);
  if (s.row(0) != LaurentPoly::constant(1)) {
    job.fail(Discrepancy{{}, 0, 0, s.row(0).coeff(0), Integer(1), {}}, "constant term != 1");
  }
  if (order >= 1) {
    const LaurentPoly expected(-1, {Integer(1), Integer(-1), Integer(1)});
    for (int z = -1; z <= 1; ++z) {
      if (s.row(1).coeff(z) != expected.coeff(z)) {
        job.fail(Discrepancy{{}, 1, z, s.row(1).coeff(z), expected.coeff(z), {}}, "q^1 row != z + 1/z - 1");
        break;
      }
    }
  }
  const CrankTable table = crank_table(order);
  for (int n = 2; n <= order; ++n) {
    std::vector<Integer> dense(static_cast<std::size_t>(2 * n + 1));
    for (const auto& [m, count] : table[static_cast<std::size_t>(n)]) dense[static_cast<std::size_t>(m + n)] = count;
    const LaurentPoly expected(-n, std::move(dense));
    if (s.row(n) == expected) continue;
    for (int z = -n; z <= n; ++z) {
      if (s.row(n).coeff(z) != expected.coeff(z)) {
        job.fail(Discrepancy{{}, n, z, s.row(n).coeff(z), expected.coeff(z), {}}, "series != M(m,n)");
        return;
      }
    }
  }
}

void aci(Job& job) {
  FactorList f = euler_factor(1) / bracket(1, 0, 1);
  f.polys.push_back(LaurentPoly::binomial(2));
  const BiSeries lhs = expand_factors(cancel_q0(f), job.order);
  BiSeries rhs = expand_factors(crank_factors(), job.order);
  rhs.mul_poly(LaurentPoly(0, {Integer(1), Integer(1)}));
  job.expect_equal(lhs, rhs, "(1-z^2)E(q)/[z;q] != (1+z) crank series");
  job.expect_nonneg(lhs, "negative coefficient");
}

void res1(Job& job) {
  const FactorList f = euler_factor(2) * bracket(4, 0, 2) / (bracket(2, 0, 2) * bracket(3, 1, 2));
  job.expect_nonneg(expand_factors(cancel_q0(f), job.order), "negative coefficient");
}

void res2(Job& job) {
  const FactorList f = euler_factor(3) * pochhammer(2, 0, 3) / (pochhammer(-1, 3, 3) * pochhammer(1, 0, 1));
  job.expect_nonneg(expand_factors(cancel_q0(f), job.order), "negative coefficient");
}

void ekin(Job& job) {
  const int order = job.order;
  // Both sides multiplied by [z;q][z^3;q][z^3;q^3][z^-3 q;q^3][z^-3 q^2;q^3].
  const BiSeries lhs = expand_factors(
      bracket(2, 0, 1) * euler_factor(1) * bracket(3, 0, 3) * bracket(-3, 1, 3) * bracket(-3, 2, 3), order);
  const BiSeries common = expand_factors(euler_factor(3) * bracket(1, 0, 1) * bracket(3, 0, 1), order);
  const BiSeries sum =
      expand_factors(bracket(-3, 2, 3), order) + times_zpow(expand_factors(bracket(-3, 1, 3), order), 1);
  job.expect_equal(lhs, common * sum, "cleared sides differ");
}

void cazqzero(Job& job) {
  const int a = job.arg("a", 2, 64);
  const int order = job.order;
  const BiSeries c = c_series(a, order);
  const BiSeries reduced = reduce_mod_z_pow(c, a);
  for (int n = 0; n <= order; ++n) {
    const Integer first = reduced.row(n).coeff(0);
    for (int i = 1; i < a; ++i) {
      if (reduced.row(n).coeff(i) != first) {
        job.fail(Discrepancy{{}, n, i, reduced.row(n).coeff(i), first, {}}, "residue classes of C_a differ");
        return;
      }
    }
  }
  const BiSeries numerator = expand_factors(euler_factor(1) * euler_factor(a, a - 2) * bracket(a, 0, a), order);
  job.expect_equal(reduce_mod_z_pow(numerator, a), BiSeries(order), "numerator of R_a nonzero at z^a = 1");
  UniSeries theta = klyachko_theta(a, order);
  theta *= Integer(a);
  const UniSeries c_at_one = substitute_z_one(c);
  job.expect_equal(c_at_one, theta, "C_a(1;q) != a * lattice sum");
  job.expect_equal(c_at_one, substitute_z_one(expand_factors(cancel_q0(r_factors(a)), order)),
                   "C_a(1;q) != R_a(1;q)");
}

void funceq_r(Job& job) {
  const int a = job.arg("a", 2, 64);
  const FactorList r = r_factors(a);
  const BiSeries lhs = times_zpow(expand_factors(cancel_q0(shift_z_to_zq(r)), job.order), a - 1);
  job.expect_equal(lhs, expand_factors(cancel_q0(r), job.order), "z^(a-1) R_a(zq;q) != R_a(z;q)");
}

void funceq_c(Job& job) {
  const int a = job.arg("a", 2, 64);
  const BiSeries c = c_series(a, order_for_shift(theta_tail(a), job.order));
  job.expect_equal(shifted_times_zpow(c, a - 1, job.order), c.truncated(job.order),
                   "z^(a-1) C_a(zq;q) != C_a(z;q)");
}

void qdiff_checks(Job& job, int a) {
  std::mt19937 gen(0x5eed0000u + static_cast<unsigned>(a));
  std::uniform_int_distribution<int> coord(-20, 20);
  auto check = [&](const LatticeVector& n, const LatticeVector& np, long expected, const std::string& what) {
    long sum = 0;
    for (int x : np) sum += x;
    const long got = sum == 0 ? qform(a, np) - qform(a, n) : expected + 1;
    if (got != expected) {
      Discrepancy d{{}, 0, std::nullopt, Integer(got), Integer(expected), {}};
      for (std::size_t k = 0; k < n.size(); ++k) d.params["n" + std::to_string(k)] = n[k];
      job.fail(std::move(d), what);
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector n(static_cast<std::size_t>(a));
    int last = 0;
    for (int k = 0; k + 1 < a; ++k) {
      n[static_cast<std::size_t>(k)] = coord(gen);
      last -= n[static_cast<std::size_t>(k)];
    }
    n.back() = last;
    const auto at = [&](int k) { return static_cast<long>(n[static_cast<std::size_t>(k)]); };
    for (int j = 2; j < a; ++j) check(n, reindex_cyclic(n, j), a * at(j) + j, "Q difference (cyclic map)");
    check(n, reindex_reflect_f0(n), -a * at(a - 1), "Q difference (F_0 map)");
    check(n, reindex_reflect_f1(n), a * at(1) + 1, "Q difference (F_1 map)");
  }
}

void funceq_f(Job& job) {
  const int a = job.arg("a", 2, 64);
  const int order = job.order;
  const auto f = theta_components(a, order_for_shift(theta_tail(a), order));
  const auto at = [&](int j) -> const BiSeries& { return f[static_cast<std::size_t>(j)]; };
  for (int j = 2; j < a; ++j) {
    job.expect_equal(shifted_times_zpow(at(j), a - 1, order), at(j - 1).truncated(order),
                     "z^(a-1) F_" + std::to_string(j) + "(zq;q) != F_" + std::to_string(j - 1));
  }
  job.expect_equal(shifted_times_zpow(at(0), a - 1, order), at(a - 1).truncated(order),
                   "z^(a-1) F_0(zq;q) != F_" + std::to_string(a - 1));
  job.expect_equal(shifted_times_zpow(at(1), a - 1, order), at(0).truncated(order),
                   "z^(a-1) F_1(zq;q) != F_0");
  qdiff_checks(job, a);
}

ZWindow require_window(const Job& job) {
  if (!job.params.window) {
    throw std::invalid_argument(to_string(job.info.id) + " requires windowed mode (--window ZMIN:ZMAX)");
  }
  return *job.params.window;
}

void conj2a(Job& job) {
  const int p = job.arg("p", 1, 1 << 10);
  const FactorList f = euler_factor(1) / (pochhammer(1, 0, 1) * pochhammer(-p, 1, 1));
  job.expect_nonneg(expand_windowed(f, job.order, require_window(job)), "negative coefficient");
}

void conj2b(Job& job) {
  const int a = job.arg("a", 1, 1 << 10);
  const int b = job.arg("b", 1, 1 << 10);
  const int m = job.arg("m", 1, 1 << 10);
  const int n = job.arg("n", 1, 1 << 10);
  const int k = m * a + n * b;
  job.expect_nonneg(expand_univariate(euler_factor(k) / (pochhammer(0, a, k) * pochhammer(0, b, k)), job.order),
                    "negative coefficient");
}

void conj2c(Job& job) {
  const int a = job.arg("a", 1, 1 << 10);
  const FactorList f = bracket(a, 0, 1) * euler_factor(1) / (bracket(1, 0, 1) * bracket(a + 1, 0, 1));
  job.expect_nonneg(expand_windowed(f, job.order, require_window(job)), "negative coefficient");
}

using Builder = void (*)(Job&);

Builder builder(IdentityId id) {
  switch (id) {
    case THM1: return thm1;
    case CAZQ2: return cazq2;
    case KID: return kid;
    case EPROP: return eprop;
    case DPROD: return dprod;
    case SPROP: return sprop;
    case PCORE1: return pcore1;
    case ATQ: return atq;
    case ATQFIN: return atqfin;
    case CORATQ1: return coratq1;
    case CORATQ2: return coratq2;
    case CORATQ3: return coratq3;
    case CRANKGEN: return crankgen;
    case ACI: return aci;
    case RES1: return res1;
    case RES2: return res2;
    case EKIN: return ekin;
    case CAZQZERO: return cazqzero;
    case FUNCEQ_R: return funceq_r;
    case FUNCEQ_C: return funceq_c;
    case FUNCEQ_F: return funceq_f;
    case CONJ2A: return conj2a;
    case CONJ2B: return conj2b;
    case CONJ2C: return conj2c;
  }
  throw std::logic_error("identity without builder");
}

int crank(const Partition& p) {
  const auto ones = static_cast<int>(std::count(p.parts.begin(), p.parts.end(), 1));
  if (ones == 0) return p.parts.empty() ? 0 : p.parts.front();
  const auto larger = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(), [&](int x) { return x > ones; }));
  return larger - ones;
}

}  // namespace

std::string to_string(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

IdentityId parse_identity(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (name == kNames[i]) return static_cast<IdentityId>(i);
  }
  throw std::invalid_argument("unknown identity id: " + std::string(name));
}

std::span<const IdentityId> all_identities() {
  static const auto ids = [] {
    std::array<IdentityId, 24> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<IdentityId>(i);
    return out;
  }();
  return ids;
}

const IdentityInfo& info(IdentityId id) { return catalog()[static_cast<std::size_t>(id)]; }

long IdentityParams::get(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw std::invalid_argument("missing parameter " + name);
  return it->second;
}

VerificationReport verify(IdentityId id, const IdentityParams& params) {
  const IdentityInfo& meta = info(id);
  for (const auto& [name, value] : params.values) {
    if (std::find(meta.params.begin(), meta.params.end(), name) == meta.params.end()) {
      throw std::invalid_argument(to_string(id) + " takes no parameter " + name);
    }
  }
  const int order = params.order.value_or(meta.default_order);
  if (order < 0 || order > meta.max_order) {
    throw std::invalid_argument(to_string(id) + ": order must lie in 0.." + std::to_string(meta.max_order));
  }
  Job job{meta, params, order, {}};
  job.report.id = to_string(id);
  job.report.params = params.values;
  job.report.order = order;
  job.report.status = meta.scan_only ? Status::ScanPass : Status::Pass;
  builder(id)(job);
  return std::move(job.report);
}

std::vector<ParamMap> expand_grid(IdentityId id, const ParamGrid& grid) {
  const IdentityInfo& meta = info(id);
  for (const auto& [name, range] : grid) {
    if (std::find(meta.params.begin(), meta.params.end(), name) == meta.params.end()) {
      throw std::invalid_argument(to_string(id) + " takes no parameter " + name);
    }
    if (range.first > range.second) throw std::invalid_argument("empty range for parameter " + name);
  }
  std::vector<ParamMap> out;
  ParamMap cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == meta.params.size()) {
      out.push_back(cur);
      return;
    }
    const auto& name = meta.params[k];
    auto it = grid.find(name);
    if (it == grid.end()) throw std::invalid_argument(to_string(id) + ": missing parameter " + name);
    for (long v = it->second.first; v <= it->second.second; ++v) {
      cur[name] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

VerificationReport scan_conjecture(IdentityId id, const ParamGrid& grid, int order, std::optional<ZWindow> window,
                                   int jobs) {
  const IdentityInfo& meta = info(id);
  if (!meta.scan_only) throw std::invalid_argument(to_string(id) + " is not a conjecture");
  if (meta.needs_window && !window) {
    throw std::invalid_argument(to_string(id) + " requires windowed mode (--window ZMIN:ZMAX)");
  }
  const auto tuples = expand_grid(id, grid);
  const auto reports = parallel_map(tuples.size(), jobs, [&](std::size_t k) {
    return verify(id, IdentityParams{tuples[k], order, window});
  });
  VerificationReport out;
  out.id = to_string(id);
  for (const auto& [name, range] : grid) {
    out.params[name + "_min"] = range.first;
    out.params[name + "_max"] = range.second;
  }
  out.order = order;
  out.status = Status::ScanPass;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (reports[k].status == Status::ScanFail) {
      out.status = Status::ScanFail;
      out.first = reports[k].first;
      out.first->params = tuples[k];
      break;
    }
  }
  if (window) out.notes.push_back("window " + std::to_string(window->lo) + ":" + std::to_string(window->hi));
  out.notes.push_back(std::to_string(tuples.size()) + " parameter tuples scanned");
  return out;
}

CrankTable crank_table(int nmax) {
  if (nmax < 0 || nmax > 25) throw std::invalid_argument("crank_table: nmax must lie in 0..25");
  CrankTable table(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& p : partitions(n)) ++table[static_cast<std::size_t>(n)][crank(p)];
  }
  return table;
}

}  // namespace etaq
