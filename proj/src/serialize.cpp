#include "etaq/serialize.hpp"

#include <stdexcept>

namespace etaq {

using nlohmann::json;

namespace {

json coeff_array(std::span<const Integer> cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.get_str());
  return a;
}

std::vector<Integer> parse_coeffs(const json& a) {
  std::vector<Integer> out;
  for (const auto& c : a) out.emplace_back(c.get<std::string>());
  return out;
}

}  // namespace

json to_json(const UniSeries& s) {
  json rows = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    rows.push_back({{"q", n}, {"zlo", 0}, {"coeffs", json::array({s[n].get_str()})}});
  }
  return {{"order", s.order()}, {"rows", std::move(rows)}};
}

json to_json(const BiSeries& s) {
  json rows = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    LaurentPoly r = s.row(n);
    if (s.window()) r = r.clipped(s.window()->lo, s.window()->hi);
    rows.push_back({{"q", n}, {"zlo", r.lo()}, {"coeffs", coeff_array(r.coeffs())}});
  }
  json j = {{"order", s.order()}, {"rows", std::move(rows)}};
  if (s.window()) {
    j["exact"] = false;
    j["window"] = json::array({s.window()->lo, s.window()->hi});
  }
  return j;
}

UniSeries uni_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  UniSeries s(order);
  for (const auto& row : j.at("rows")) {
    const int n = row.at("q").get<int>();
    if (n < 0 || n > order) throw std::invalid_argument("series JSON: row q out of range");
    const auto cs = parse_coeffs(row.at("coeffs"));
    const int zlo = row.at("zlo").get<int>();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (sgn(cs[i]) != 0 && zlo + static_cast<int>(i) != 0) {
        throw std::invalid_argument("series JSON: univariate series has a z-dependent term");
      }
      if (zlo + static_cast<int>(i) == 0) s[n] = cs[i];
    }
  }
  return s;
}

BiSeries bi_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (const auto& row : j.at("rows")) {
    const int n = row.at("q").get<int>();
    if (n < 0 || n > order) throw std::invalid_argument("series JSON: row q out of range");
    rows[static_cast<std::size_t>(n)] = LaurentPoly(row.at("zlo").get<int>(), parse_coeffs(row.at("coeffs")));
  }
  BiSeries s(order, std::move(rows));
  if (j.contains("window")) s.set_window({j["window"][0].get<int>(), j["window"][1].get<int>()});
  return s;
}

json to_json(const VerificationReport& r) {
  json first = nullptr;
  if (r.first) {
    const Discrepancy& d = *r.first;
    first = {{"n", d.n}, {"coeff", d.value.get_str()}, {"what", d.what}};
    if (d.zexp) first["zexp"] = *d.zexp;
    if (d.expected) first["expected"] = d.expected->get_str();
    if (!d.params.empty()) first["params"] = d.params;
  }
  json j = {{"id", r.id},
            {"params", r.params},
            {"status", to_string(r.status)},
            {"order", r.order},
            {"firstDiscrepancy", std::move(first)},
            {"elapsedMs", nullptr}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.elapsed_ms) j["elapsedMs"] = *r.elapsed_ms;
  return j;
}

}  // namespace etaq
