#pragma once

// Data files (JSON), category serialization (JSON, DOT) and table rendering.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qcat/family.hpp"
#include "qcat/skeleton.hpp"

namespace qcat {

using json = nlohmann::json;

// Schema: prime, table (n*n row-major), labels, rank, action (n matrices of
// rank*rank integers), rho (n*n*rank), eta (n*n*n*rank or absent), e,
// module_symbols. "m" is optional and checked against the table.
inline ProPData propdata_from_json(const json& j) {
  try {
    ProPData d;
    d.name = j.value("name", std::string("data"));
    const auto p = j.at("prime").get<std::uint64_t>();
    d.P = FiniteGroup(p, j.at("table").get<std::vector<int>>(), j.value("labels", std::vector<std::string>{}));
    if (j.contains("m") && j.at("m").get<int>() != d.P.log_order())
      throw InvalidData("declared m differs from the table");
    const auto rank = j.at("rank").get<std::size_t>();
    d.action = std::make_shared<const PModuleAction>(p, rank, j.at("action").get<std::vector<std::vector<std::int64_t>>>());
    d.rho = j.at("rho").get<std::vector<std::int64_t>>();
    if (j.contains("eta") && !j.at("eta").is_null()) d.eta = j.at("eta").get<std::vector<std::int64_t>>();
    d.e = j.contains("e") ? j.at("e").get<int>() : 3 * d.P.log_order();
    d.module_symbols = j.value("module_symbols", std::vector<std::string>{});
    return d;
  } catch (const json::exception& ex) {
    throw InvalidData(std::string("malformed data file: ") + ex.what());
  }
}

inline json propdata_to_json(const ProPData& d) {
  const std::size_t n = d.P.size();
  std::vector<int> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(d.P.label(a));
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<int>(d.P.mul(a, b));
  }
  std::vector<std::vector<std::int64_t>> action;
  for (std::size_t a = 0; a < n; ++a) action.push_back(d.action->integer_matrix(a));
  json j = {{"name", d.name},          {"prime", d.P.prime()}, {"m", d.P.log_order()},
            {"table", table},          {"labels", labels},     {"rank", d.action->rank()},
            {"action", action},        {"rho", d.rho},         {"e", d.e},
            {"module_symbols", d.module_symbols}};
  j["eta"] = d.eta.empty() ? json(nullptr) : json(d.eta);
  return j;
}

inline ProPData load_propdata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidData("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InvalidData(std::string("cannot parse ") + path + ": " + ex.what());
  }
  return propdata_from_json(j);
}

inline json category_to_json(const Category& c) {
  json objs = json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    objs.push_back({{"index", i}, {"label", c.objects[i].label}, {"order", c.objects[i].elements.size()},
                    {"elements", c.objects[i].elements}});
  json mors = json::array();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (const auto& f : c.hom[a][b])
        mors.push_back({{"source", a}, {"target", b}, {"witness", f.witness}, {"map", f.map}});
  return {{"objects", objs}, {"morphisms", mors}};
}

inline std::string category_to_dot(const Category& c, const std::string& name = "quillen") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < c.size(); ++i) os << "  n" << i << " [label=\"" << c.objects[i].label << "\"];\n";
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (const auto& f : c.hom[a][b]) {
        if (a == b && f.map == c.objects[a].elements) continue;
        os << "  n" << a << " -> n" << b << " [label=\"" << f.witness << "\"];\n";
      }
  os << "}\n";
  return os.str();
}

// "source -> range : induced by" rows; sources of order 1 are omitted
// unless requested.
inline std::string category_table(const Category& c, bool with_trivial_sources = false) {
  std::size_t w1 = 6, w2 = 5;
  for (const auto& o : c.objects) {
    w1 = std::max(w1, o.label.size());
    w2 = std::max(w2, o.label.size());
  }
  std::ostringstream os;
  os << "objects (" << c.size() << "):";
  for (const auto& o : c.objects) os << ' ' << o.label;
  os << "\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("source", w1) << "  " << pad("range", w2) << "  induced by\n";
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (!with_trivial_sources && c.objects[a].elements.size() == 1) continue;
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (c.hom[a][b].empty()) continue;
      std::string ws;
      for (std::size_t k = 0; k < c.hom[a][b].size(); ++k) ws += (k ? ", " : "") + c.hom[a][b][k].witness;
      os << pad(c.objects[a].label, w1) << "  " << pad(c.objects[b].label, w2) << "  " << ws << "\n";
    }
  }
  return os.str();
}

inline json cochain_to_json(const Cochain& c) {
  json vals = json::array();
  const auto& dom = *c.domain();
  for (std::size_t idx = 0; idx < dom.tuple_count(c.degree()); ++idx) {
    auto args = dom.normalized_tuple(idx, c.degree());
    PModVector v = c.at(args);
    if (v.is_zero()) continue;
    std::vector<std::string> labels;
    for (auto a : args) labels.push_back(dom.group().label(a));
    vals.push_back({{"args", labels}, {"value", signed_entries(v)}});
  }
  return {{"degree", c.degree()}, {"precision", c.ring().precision()}, {"nonzero", vals}};
}

inline json functor_report_json(const EquivalenceReport& e) {
  return {{"essentially_surjective", e.essentially_surjective},
          {"full", e.full},
          {"faithful", e.faithful},
          {"full_on_inhabited", e.full_on_inhabited},
          {"witnesses", e.witnesses}};
}

}  // namespace qcat
