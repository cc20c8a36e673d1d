#include "seshadri/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace seshadri {

namespace {

long long as_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for JSON output");
  return v.convert_to<long long>();
}

std::string status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::Missing: return "missing";
  }
  throw std::logic_error("bad RowStatus");
}

}  // namespace

OrderedJson candidate_set_json(const CandidateSet& cs) {
  OrderedJson j;
  j["n"] = cs.n;
  j["delta"] = cs.params.delta.str();
  j["mu"] = cs.params.mu.str();
  OrderedJson cands = OrderedJson::array();
  for (const auto& c : cs.classes) {
    OrderedJson e;
    e["t"] = as_ll(c.degree);
    e["m"] = as_ll(c.m);
    e["k"] = as_ll(c.k);
    e["ratio"] = c.ratio.str();
    cands.push_back(std::move(e));
  }
  for (const auto& c : cs.general) {
    OrderedJson e;
    e["t"] = as_ll(c.degree);
    OrderedJson h = OrderedJson::array();
    for (const auto& hi : c.h) h.push_back(as_ll(hi));
    e["h"] = std::move(h);
    e["ratio"] = c.ratio.str();
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  OrderedJson ratios = OrderedJson::array();
  for (const auto& r : cs.ratios) ratios.push_back(r.str());
  j["ratios"] = std::move(ratios);
  j["truncated"] = cs.truncated;
  return j;
}

OrderedJson audit_entry_json(const AuditEntry& e) {
  OrderedJson j;
  j["m"] = as_ll(e.m);
  j["k"] = as_ll(e.k);
  if (e.degree) j["t"] = as_ll(*e.degree);
  if (e.ratio) j["ratio"] = e.ratio->str();
  j["status"] = to_string(e.status);
  if (!e.certificate.empty()) j["certificate"] = e.certificate;
  if (e.cert_bound_sq) j["cert_bound_sq"] = e.cert_bound_sq->str();
  return j;
}

OrderedJson bound_result_json(const BoundResult& r) {
  OrderedJson j;
  j["n"] = r.n;
  j["method"] = to_string(r.method);
  j["epsilon_lower_sq"] = r.epsilon_lower_sq.str();
  j["strict"] = r.strict;
  j["exact"] = r.exact;
  j["epsilon_lower_decimal"] = sqrt_decimal(r.epsilon_lower_sq, 12);
  OrderedJson audit = OrderedJson::array();
  for (const auto& e : r.audit) audit.push_back(audit_entry_json(e));
  j["audit"] = std::move(audit);
  return j;
}

OrderedJson hypothesis_report_json(const HypothesisReport& rep) {
  OrderedJson j;
  j["theorem"] = rep.theorem == TheoremId::A ? "A" : "B";
  j["n"] = rep.n;
  j["mu"] = rep.mu.str();
  j["passed"] = rep.passed();
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : rep.rows) {
    OrderedJson e;
    e["pattern"] = to_string(row.pattern);
    e["required_sq"] = row.required_sq.str();
    if (row.supplied_sq) e["supplied_sq"] = row.supplied_sq->str();
    else e["supplied_sq"] = nullptr;
    if (!row.source.empty()) e["source"] = row.source;
    e["status"] = status_name(row.status);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j;
}

OrderedJson certificate_json(const AlphaCertificate& c) {
  OrderedJson j;
  j["kind"] = c.kind == CertKind::Alpha ? "alpha" : "alpha0";
  j["pattern"] = to_string(c.pattern);
  j["bound_sq"] = c.bound_sq.str();
  j["provenance"] = c.provenance;
  return j;
}

SurfaceData surface_from_json(const OrderedJson& j) {
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "p2") return SurfaceData::p2();
    throw std::invalid_argument("unknown surface preset: " + preset);
  }
  SurfaceData s;
  auto get_int = [&](const char* key, const Int& fallback, bool required) -> Int {
    if (!j.contains(key)) {
      if (required) throw std::invalid_argument(std::string("surface config: missing key ") + key);
      return fallback;
    }
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>()).num();
    throw std::invalid_argument(std::string("surface config: key ") + key + " must be an integer");
  };
  s.l2 = get_int("L2", 1, true);
  s.lk = get_int("LK", 0, true);
  s.pa = get_int("pa", 0, true);
  s.degree_unit = get_int("degree_unit", 1, false);
  if (j.contains("rank1")) s.rank1 = j.at("rank1").get<bool>();
  if (!j.contains("mode")) throw std::invalid_argument("surface config: missing key mode");
  s.mode = surface_mode_from_string(j.at("mode").get<std::string>());
  s.validate();
  return s;
}

SurfaceData load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open surface config: " + path);
  OrderedJson j;
  in >> j;
  return surface_from_json(j);
}

std::string render_json(const OrderedJson& j) { return j.dump(); }

}  // namespace seshadri
