#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "etaq/cache.hpp"
#include "etaq/identities.hpp"
#include "etaq/parallel.hpp"
#include "etaq/pcore.hpp"
#include "etaq/products.hpp"
#include "etaq/saito.hpp"
#include "etaq/serialize.hpp"
#include "etaq/theta.hpp"

namespace etaq::cli {

namespace {

using Range = std::pair<long, long>;

Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad range '" + text + "' (expected x or x..y)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = number(text);
    return {v, v};
  }
  const Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.first > r.second) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

ZWindow parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw std::invalid_argument("bad window '" + text + "' (expected ZMIN:ZMAX)");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const ZWindow w{std::stoi(lo, &u1), std::stoi(hi, &u2)};
    if (u1 != lo.size() || u2 != hi.size()) throw std::invalid_argument("");
    if (w.lo > w.hi) throw std::invalid_argument("");
    return w;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad window '" + text + "' (expected ZMIN:ZMAX with ZMIN <= ZMAX)");
  }
}

std::string rational_text(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

struct Common {
  std::optional<int> order;
  std::string format = "plain";
  int jobs = 1;
  std::string out_file;
  bool no_cache = false;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--order", c.order, "Highest q-exponent kept")->check(CLI::NonNegativeNumber);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app->add_option("--jobs", c.jobs, "Parallel jobs")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out_file, "Write output to FILE");
  app->add_flag("--no-cache", c.no_cache, "Bypass the expansion cache");
  app->add_flag("--timing", c.timing, "Record elapsed milliseconds in reports");
}

int require_order(const Common& c, int fallback, int limit = 100000) {
  const int order = c.order.value_or(fallback);
  if (order > limit) throw std::invalid_argument("order " + std::to_string(order) + " exceeds the limit " +
                                                 std::to_string(limit));
  return order;
}

std::optional<SeriesCache> open_cache(const Common& c) {
  if (c.no_cache) return std::nullopt;
  return SeriesCache(SeriesCache::default_dir());
}

template <class Fn>
UniSeries cached(const std::optional<SeriesCache>& cache, const std::string& key, Fn&& build) {
  if (cache) {
    if (auto hit = cache->load(key)) return std::move(*hit);
  }
  UniSeries s = build();
  if (cache) cache->store(key, s);
  return s;
}

// ---------------------------------------------------------------------------
// Output helpers

void print_uni(std::ostream& os, const UniSeries& s, const std::string& format, const std::string& title,
               const std::optional<Rational>& prefactor) {
  if (format == "json") {
    nlohmann::json doc{{"title", title}, {"series", to_json(s)}};
    if (prefactor) doc["prefactor"] = rational_text(*prefactor);
    os << doc.dump() << '\n';
    return;
  }
  if (format == "csv") {
    os << "n,coeff\n";
    for (int n = 0; n <= s.order(); ++n) os << n << ',' << s[n].get_str() << '\n';
    return;
  }
  os << "# " << title;
  if (prefactor) os << "  (times q^" << rational_text(*prefactor) << ")";
  os << '\n';
  for (int n = 0; n <= s.order(); ++n) os << n << ' ' << s[n].get_str() << '\n';
}

void print_bi(std::ostream& os, const BiSeries& s, const std::string& format, const std::string& title) {
  if (format == "json") {
    os << nlohmann::json{{"title", title}, {"series", to_json(s)}}.dump() << '\n';
    return;
  }
  if (format == "csv") {
    os << "n,zexp,coeff\n";
  } else {
    os << "# " << title << '\n';
  }
  const char sep = format == "csv" ? ',' : ' ';
  for (int n = 0; n <= s.order(); ++n) {
    const LaurentPoly& row = s.row(n);
    for (int i = row.lo(); i <= row.hi(); ++i) {
      const Integer c = row.coeff(i);
      if (sgn(c) != 0) os << n << sep << i << sep << c.get_str() << '\n';
    }
  }
}

std::string params_text(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

void print_report(std::ostream& os, const VerificationReport& r, const std::string& format) {
  if (format == "json") {
    os << to_json(r).dump() << '\n';
    return;
  }
  if (format == "csv") {
    os << r.id << ',' << '"' << params_text(r.params) << '"' << ',' << r.order << ',' << to_string(r.status) << ',';
    if (r.first) {
      os << r.first->n << ',' << (r.first->zexp ? std::to_string(*r.first->zexp) : "") << ','
         << r.first->value.get_str() << ',' << (r.first->expected ? r.first->expected->get_str() : "");
    } else {
      os << ",,,";
    }
    os << '\n';
    return;
  }
  os << r.id;
  if (!r.params.empty()) os << ' ' << params_text(r.params);
  os << " order=" << r.order << ": " << to_string(r.status);
  if (r.elapsed_ms) os << " (" << static_cast<long>(*r.elapsed_ms) << " ms)";
  os << '\n';
  if (r.first) {
    const auto& d = *r.first;
    os << "  " << d.what << " at q^" << d.n;
    if (d.zexp) os << " z^" << *d.zexp;
    if (!d.params.empty()) os << " [" << params_text(d.params) << "]";
    os << ": " << d.value.get_str();
    if (d.expected) os << " (expected " << d.expected->get_str() << ")";
    os << '\n';
  }
  for (const auto& note : r.notes) os << "  note: " << note << '\n';
}

void print_report_header(std::ostream& os, const std::string& format) {
  if (format == "csv") os << "id,params,order,status,n,zexp,value,expected\n";
}

template <class Fn>
auto timed(bool enabled, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto r = fn();
  if (enabled) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_expand(std::ostream& os, const Common& c, const std::string& eta_text) {
  const int order = require_order(c, 20);
  const EtaQuotientSpec spec = EtaQuotientSpec::parse(eta_text);
  const std::string canonical = spec.to_string();
  auto cache = open_cache(c);
  const auto eta = eta_quotient(spec, 0);  // prefactor only
  const UniSeries s = cached(cache, "eta:" + canonical + "@" + std::to_string(order),
                             [&] { return eta_quotient(spec, order).series; });
  print_uni(os, s, c.format, "eta quotient " + canonical, eta.prefactor);
  return kOk;
}

int cmd_saito(std::ostream& os, const Common& c, const std::string& n_text) {
  const int order = require_order(c, 200);
  const Range range = parse_range(n_text);
  if (range.first < 1) throw std::invalid_argument("N must be >= 1");
  auto cache = open_cache(c);
  const auto count = static_cast<std::size_t>(range.second - range.first + 1);
  const auto reports = parallel_map(count, c.jobs, [&](std::size_t k) {
    const long n = range.first + static_cast<long>(k);
    // nonneg_report recomputes the prefactor; the cached series feeds the scan.
    NonnegReport r;
    r.n = n;
    r.order = order;
    r.prefactor = saito_series(n, 0).prefactor;
    const UniSeries s = cached(cache, "saito:" + std::to_string(n) + "@" + std::to_string(order),
                               [&] { return saito_series(n, order).series; });
    for (int i = 0; i <= order; ++i) {
      if (sgn(s[i]) < 0) {
        r.pass = false;
        r.first_negative = std::make_pair(i, s[i]);
        break;
      }
    }
    return r;
  });
  bool all = true;
  if (c.format == "csv") os << "N,order,prefactor,pass,first_negative_n,first_negative_coeff\n";
  for (const auto& r : reports) {
    all = all && r.pass;
    if (c.format == "json") {
      os << to_json(r).dump() << '\n';
    } else if (c.format == "csv") {
      os << r.n << ',' << r.order << ',' << rational_text(r.prefactor) << ',' << (r.pass ? "true" : "false") << ',';
      if (r.first_negative) os << r.first_negative->first << ',' << r.first_negative->second.get_str();
      else os << ',';
      os << '\n';
    } else {
      os << "S_" << r.n << " order=" << r.order << " prefactor=q^" << r.prefactor.get_str() << ": "
         << (r.pass ? "nonnegative" : "NEGATIVE");
      if (r.first_negative) os << " at q^" << r.first_negative->first << " (" << r.first_negative->second.get_str() << ")";
      os << '\n';
    }
  }
  return all ? kOk : kFailure;
}

int cmd_theta(std::ostream& os, const Common& c, int a, std::optional<int> component, bool klyachko) {
  const int order = require_order(c, 20, 5000);
  if (klyachko) {
    if (a < 1) throw std::invalid_argument("--a must be >= 1");
    print_uni(os, klyachko_theta(a, order), c.format, "lattice theta sum, t=" + std::to_string(a), std::nullopt);
    return kOk;
  }
  if (a < 2) throw std::invalid_argument("--a must be >= 2");
  if (component) {
    if (*component < 0 || *component >= a) throw std::invalid_argument("--component must lie in 0..a-1");
    print_bi(os, f_component(a, *component, order), c.format,
             "F_" + std::to_string(*component) + " for a=" + std::to_string(a));
  } else {
    print_bi(os, c_series(a, order), c.format, "C_a for a=" + std::to_string(a));
  }
  return kOk;
}

int cmd_pcore(std::ostream& os, const Common& c, const std::string& t_text, bool brute, bool scan) {
  const Range t = parse_range(t_text);
  if (scan) {
    const int order = require_order(c, 300);
    auto r = timed(c.timing, [&] {
      return positivity_scan(static_cast<int>(t.first), static_cast<int>(t.second), order);
    });
    print_report_header(os, c.format);
    print_report(os, r, c.format);
    return r.ok() ? kOk : kFailure;
  }
  if (t.first != t.second) throw std::invalid_argument("--t takes a single value unless --scan is given");
  if (t.first < 1) throw std::invalid_argument("--t must be >= 1");
  const int order = require_order(c, 20, brute ? 40 : 100000);
  const UniSeries s = tcore_series(static_cast<int>(t.first), order);
  if (!brute) {
    print_uni(os, s, c.format, "t-cores, t=" + std::to_string(t.first), std::nullopt);
    return kOk;
  }
  bool agree = true;
  const auto counts = parallel_map(static_cast<std::size_t>(order) + 1, c.jobs, [&](std::size_t n) {
    return count_tcores(static_cast<int>(t.first), static_cast<int>(n));
  });
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= order; ++n) {
      rows.push_back({{"n", n}, {"series", s[n].get_str()}, {"brute", counts[static_cast<std::size_t>(n)]}});
      agree = agree && s[n] == counts[static_cast<std::size_t>(n)];
    }
    os << nlohmann::json{{"t", t.first}, {"order", order}, {"rows", rows}, {"agree", agree}}.dump() << '\n';
  } else {
    const char sep = c.format == "csv" ? ',' : ' ';
    os << (c.format == "csv" ? "n,coeff,brute\n" : "# n series brute\n");
    for (int n = 0; n <= order; ++n) {
      const auto b = counts[static_cast<std::size_t>(n)];
      agree = agree && s[n] == b;
      os << n << sep << s[n].get_str() << sep << b << '\n';
    }
  }
  return agree ? kOk : kFailure;
}

int cmd_verify(std::ostream& os, const Common& c, const std::string& id_text,
               const std::map<std::string, std::string>& ranges, const std::string& window_text) {
  const IdentityId id = parse_identity(id_text);
  ParamGrid grid;
  for (const auto& [name, text] : ranges) grid[name] = parse_range(text);
  const std::optional<ZWindow> window = window_text.empty() ? std::nullopt : std::optional(parse_window(window_text));
  const auto tuples = expand_grid(id, grid);
  const auto reports = parallel_map(tuples.size(), c.jobs, [&](std::size_t k) {
    return timed(c.timing, [&] { return verify(id, IdentityParams{tuples[k], c.order, window}); });
  });
  bool ok = true;
  print_report_header(os, c.format);
  for (const auto& r : reports) {
    ok = ok && r.ok();
    print_report(os, r, c.format);
  }
  return ok ? kOk : kFailure;
}

int cmd_scan(std::ostream& os, const Common& c, const std::string& id_text,
             const std::map<std::string, std::string>& ranges, const std::string& window_text) {
  const IdentityId id = parse_identity(id_text);
  ParamGrid grid;
  for (const auto& [name, text] : ranges) grid[name] = parse_range(text);
  const std::optional<ZWindow> window = window_text.empty() ? std::nullopt : std::optional(parse_window(window_text));
  const int order = c.order.value_or(info(id).default_order);
  auto r = timed(c.timing, [&] { return scan_conjecture(id, grid, order, window, c.jobs); });
  print_report_header(os, c.format);
  print_report(os, r, c.format);
  return r.ok() ? kOk : kFailure;
}

int cmd_cache(std::ostream& os, const std::string& action) {
  const SeriesCache cache(SeriesCache::default_dir());
  if (action == "path") {
    os << cache.dir().string() << '\n';
  } else if (action == "list") {
    for (const auto& k : cache.keys()) os << k << '\n';
  } else {
    os << "removed " << cache.clear() << " entries\n";
  }
  return kOk;
}

const char* const kParamNames[] = {"a", "b", "i", "j", "L", "m", "n", "M", "N", "p", "t"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series, eta quotients and nonnegativity checks", "etaq"};
  app.require_subcommand(1);
  Common common;

  auto* expand = app.add_subcommand("expand", "Expand an eta quotient");
  std::string eta_text;
  expand->add_option("--eta", eta_text, "Eta quotient, e.g. \"2^2 * 1^-1\"")->required();
  add_common(expand, common);

  auto* saito = app.add_subcommand("saito", "Nonnegativity of S_N");
  std::string n_text;
  saito->add_option("--N", n_text, "N or a range a..b")->required();
  add_common(saito, common);

  auto* theta = app.add_subcommand("theta", "Lattice sums C_a, F_j and the Klyachko theta sum");
  int a_value = 0;
  std::optional<int> component;
  bool klyachko = false;
  theta->add_option("--a", a_value, "Dimension a (t with --klyachko)")->required();
  theta->add_option("--component", component, "Only F_j");
  theta->add_flag("--klyachko", klyachko, "Univariate sum E(q^t)^t/E(q)");
  add_common(theta, common);

  auto* pcore = app.add_subcommand("pcore", "t-core counts");
  std::string t_text;
  bool brute = false, scan_flag = false;
  pcore->add_option("--t", t_text, "t, or tmin..tmax with --scan")->required();
  pcore->add_flag("--brute", brute, "Add hook-length counts (order <= 40)");
  pcore->add_flag("--scan", scan_flag, "Check a_t(n) >= 1 over the range of t");
  add_common(pcore, common);

  std::string id_text, window_text;
  std::map<std::string, std::string> ranges;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--id", id_text, "Identity id")->required();
    sub->add_option("--window", window_text, "z-window ZMIN:ZMAX (use --window=ZMIN:ZMAX for negative ZMIN)");
    for (const char* name : kParamNames) {
      sub->add_option_function<std::string>(
          std::string("--") + name, [&ranges, name](const std::string& v) { ranges[name] = v; },
          std::string("Parameter ") + name + " (x or x..y)");
    }
    add_common(sub, common);
  };
  auto* verify_cmd = app.add_subcommand("verify", "Verify an identity over a parameter grid");
  add_grid(verify_cmd);
  auto* scan_cmd = app.add_subcommand("scan", "Scan a conjecture over a parameter grid");
  add_grid(scan_cmd);

  auto* cache = app.add_subcommand("cache", "Inspect or clear the expansion cache");
  std::string action;
  cache->add_option("action", action, "path | list | clear")->required()->check(CLI::IsMember({"path", "list", "clear"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!common.out_file.empty()) {
    file.open(common.out_file);
    if (!file) {
      err << "error: cannot open " << common.out_file << " for writing\n";
      return kUsage;
    }
    os = &file;
  }

  try {
    std::ostringstream buffer;  // nothing reaches the stream unless the command completes
    int code = kOk;
    if (*expand) code = cmd_expand(buffer, common, eta_text);
    else if (*saito) code = cmd_saito(buffer, common, n_text);
    else if (*theta) code = cmd_theta(buffer, common, a_value, component, klyachko);
    else if (*pcore) code = cmd_pcore(buffer, common, t_text, brute, scan_flag);
    else if (*verify_cmd) code = cmd_verify(buffer, common, id_text, ranges, window_text);
    else if (*scan_cmd) code = cmd_scan(buffer, common, id_text, ranges, window_text);
    else if (*cache) code = cmd_cache(buffer, action);
    *os << buffer.str();
    os->flush();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace etaq::cli
