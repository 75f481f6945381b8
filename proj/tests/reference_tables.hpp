#pragma once

// Published skeleton tables of the three Klein-four families, as words.
// Exponent placeholders: "{2^x}" and "{2^x-1}" are substituted per level.
// Rows whose source is <1>, and O -> A x O, are left implicit (one morphism).

#include <string>
#include <vector>

namespace reftab {

struct Row {
  std::string source, target;
  std::vector<std::string> conjugators;
};

// Objects as generating words; "O" stands for the central involution t^{2^{x+1}}.
struct Object {
  std::string name;
  std::vector<std::string> generators;
};

inline std::vector<Object> s_objects() {
  return {{"<1>", {}}, {"<a>", {"a"}}, {"<at>", {"at"}}, {"<ab>", {"ab"}}, {"<abt>", {"abt"}}};
}

inline std::vector<Row> s_rows() {
  return {{"<a>", "<a>", {"1"}},        {"<a>", "<at>", {"b"}},          {"<at>", "<at>", {"1"}},
          {"<at>", "<a>", {"bt^-1"}},   {"<ab>", "<ab>", {"1"}},         {"<ab>", "<abt>", {"b"}},
          {"<abt>", "<abt>", {"1"}},    {"<abt>", "<ab>", {"bt^-1"}}};
}

inline std::vector<Object> gx_objects(bool with_ab) {
  std::vector<Object> o{{"<1>", {}},
                        {"O", {"O"}},
                        {"<a>", {"a"}},
                        {"<a>xO", {"a", "O"}},
                        {"<at>", {"at"}},
                        {"<at>xO", {"at", "O"}}};
  if (with_ab) {
    o.push_back({"<ab>", {"ab"}});
    o.push_back({"<ab>xO", {"ab", "O"}});
    o.push_back({"<abt>", {"abt"}});
    o.push_back({"<abt>xO", {"abt", "O"}});
  }
  return o;
}

// One block of the G_x table for a pair (A, At) of complements.
inline std::vector<Row> gx_block(const std::string& A, const std::string& At, const std::string& forward) {
  const std::string AO = A + "xO", AtO = At + "xO";
  return {{A, A, {"1"}},
          {A, AO, {"1", "t^{2^x}"}},
          {AO, AO, {"1", "t^{2^x}"}},
          {A, At, {forward}},
          {A, AtO, {"b", "bt^{2^x}"}},
          {AO, AtO, {"b", "bt^{2^x}"}},
          {At, At, {"1"}},
          {At, AtO, {"1", "t^{2^x}"}},
          {AtO, AtO, {"1", "t^{2^x}"}},
          {At, A, {"bt^-1"}},
          {At, AO, {"bt^-1", "bt^{2^x-1}"}},
          {AtO, AO, {"bt^-1", "bt^{2^x-1}"}}};
}

inline std::vector<Row> dihedral_rows() {
  auto r = gx_block("<a>", "<at>", "b");
  auto s = gx_block("<ab>", "<abt>", "b");
  r.insert(r.end(), s.begin(), s.end());
  return r;
}

inline std::vector<Row> semidihedral_rows() { return gx_block("<a>", "<at>", "bt^{2^x}"); }

inline std::vector<Object> quaternion_objects() { return {{"<1>", {}}, {"O", {"O"}}}; }

inline std::string substitute(std::string w, int x) {
  auto rep = [&](const std::string& key, long long v) {
    for (std::size_t pos; (pos = w.find(key)) != std::string::npos;) w.replace(pos, key.size(), std::to_string(v));
  };
  rep("{2^x-1}", (1LL << x) - 1);
  rep("{2^x}", 1LL << x);
  return w;
}

}  // namespace reftab
