#include "kpair/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kpair::json_io {

namespace {

std::vector<Qubit> qubit_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("pattern: field \"") + key + "\" must be an array");
  }
  std::vector<Qubit> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw std::invalid_argument(std::string("pattern: field \"") + key + "\" must hold non-negative integers");
    }
    out.push_back(v.get<Qubit>());
  }
  return out;
}

}  // namespace

json to_json(const pairability::MeasurementPattern& p) {
  json basis = json::object();
  for (Qubit q = 0; q < p.n; ++q) {
    if (p.basis[q]) basis[std::to_string(q)] = std::string(1, to_char(*p.basis[q]));
  }
  return {{"n", p.n}, {"E", p.e_set}, {"X", p.x_set}, {"Z", p.z_set}, {"basis", basis}};
}

pairability::MeasurementPattern pattern_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("pattern: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw std::invalid_argument("pattern: field \"n\" must be a non-negative integer");
  }
  const auto n = j["n"].get<std::size_t>();
  auto e = qubit_array(j, "E");
  auto x = qubit_array(j, "X");
  auto z = qubit_array(j, "Z");
  std::vector<std::optional<Basis>> basis(n);
  if (j.contains("basis")) {
    if (!j["basis"].is_object()) throw std::invalid_argument("pattern: field \"basis\" must be an object");
    for (const auto& [key, value] : j["basis"].items()) {
      std::size_t q = 0;
      try {
        std::size_t used = 0;
        q = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::logic_error&) {
        throw std::invalid_argument("pattern: basis key \"" + key + "\" is not a qubit index");
      }
      if (q >= n) throw std::invalid_argument("pattern: basis key \"" + key + "\" out of range");
      if (!value.is_string() || value.get<std::string>().size() != 1 || !basis_from_char(value.get<std::string>()[0])) {
        throw std::invalid_argument("pattern: basis of qubit " + key + " must be \"X\", \"Y\" or \"Z\"");
      }
      basis[q] = basis_from_char(value.get<std::string>()[0]);
    }
  } else {
    for (auto q : x) {
      if (q < n) basis[q] = Basis::X;
    }
    for (auto q : z) {
      if (q < n) basis[q] = Basis::Z;
    }
  }
  pairability::MeasurementPattern p;
  p.n = n;
  std::sort(e.begin(), e.end());
  std::sort(x.begin(), x.end());
  std::sort(z.begin(), z.end());
  p.e_set = std::move(e);
  p.x_set = std::move(x);
  p.z_set = std::move(z);
  p.basis = std::move(basis);
  p.validate();
  return p;
}

json to_json(const pairability::CssCertificate& c) {
  json f = json::array();
  json fbar = json::array();
  for (const auto& v : c.f) f.push_back(v.to_string());
  for (const auto& v : c.fbar) fbar.push_back(v.to_string());
  return {{"f", f}, {"fbar", fbar}};
}

pairability::CssCertificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("fbar") || !j["f"].is_array() || !j["fbar"].is_array()) {
    throw std::invalid_argument("certificate: expected {\"f\": [...], \"fbar\": [...]}");
  }
  pairability::CssCertificate c;
  for (const auto& v : j["f"]) {
    if (!v.is_string()) throw std::invalid_argument("certificate: field \"f\" must hold bit strings");
    c.f.push_back(f2::BitVec::from_string(v.get<std::string>()));
  }
  for (const auto& v : j["fbar"]) {
    if (!v.is_string()) throw std::invalid_argument("certificate: field \"fbar\" must hold bit strings");
    c.fbar.push_back(f2::BitVec::from_string(v.get<std::string>()));
  }
  return c;
}

json to_json(const PairList& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({p.a, p.b});
  return out;
}

json to_json(const locc::ProtocolTranscript& t) {
  json meas = json::array();
  for (const auto& m : t.measurements) {
    meas.push_back({{"qubits", m.qubits}, {"pauli", m.pauli}, {"outcome", m.outcome}, {"random", m.random}});
  }
  json corr = json::array();
  for (const auto& c : t.corrections) {
    corr.push_back({{"pair", c.pair}, {"qubit", c.qubit}, {"pauli", std::string(1, c.pauli)}});
  }
  json out = {{"measurements", meas},
              {"corrections", corr},
              {"verdict", t.verdict},
              {"random_outcomes", t.random_outcomes},
              {"success", t.success()}};
  out["seed"] = t.seed ? json(*t.seed) : json(nullptr);
  if (t.branch) out["branch"] = *t.branch;
  return out;
}

json to_json(const netroute::RoutePlan& plan) {
  return {{"paths", plan.paths}, {"congestion", plan.congestion}};
}

json to_json(const search::PairabilityReport& r) {
  json tuples = json::array();
  for (const auto& t : r.tuples) {
    json entry = {{"pairs", to_json(t.pairs)}};
    entry["pattern"] = t.pattern ? json(t.pattern->to_string()) : json(nullptr);
    tuples.push_back(entry);
  }
  return {{"tuples", tuples},
          {"checked", r.tuples.size()},
          {"successes", r.successes},
          {"all_succeeded", r.all_succeeded()}};
}

bool is_valid_pattern_json(const json& j) {
  try {
    if (!j.contains("basis")) return false;
    (void)pattern_from_json(j);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace kpair::json_io
