#pragma once

// Built-in pro-p data. The Klein-four families: P = {1, a, b, ab} acting on
// T = Z_2 by t^a = t^-1, t^b = t, with S = Ext(rho) of maximal class and
// modules M_x of order 2^{x+2}. The semidihedral and quaternion members use
// eta = D_2(eps)/2 for an integral 2-cochain eps.

#include <string>
#include <vector>

#include "qcat/family.hpp"

namespace qcat {

// D_2 of an integral 2-cochain, entrywise over Z; tables as in ProPData.
inline std::vector<std::int64_t> integer_coboundary2(const FiniteGroup& P, const PModuleAction& act,
                                                     const std::vector<std::int64_t>& eps) {
  const std::size_t n = P.size(), d = act.rank();
  std::vector<std::int64_t> out(n * n * n * d, 0);
  auto val = [&](std::size_t g, std::size_t h, std::size_t k) { return eps[(g * n + h) * d + k]; };
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2)
      for (std::size_t g3 = 0; g3 < n; ++g3) {
        const auto& A = act.integer_matrix(g3);
        for (std::size_t k = 0; k < d; ++k) {
          std::int64_t s = val(g2, g3, k) - val(P.mul(g1, g2), g3, k) + val(g1, P.mul(g2, g3), k);
          for (std::size_t j = 0; j < d; ++j) s -= val(g1, g2, j) * A[j * d + k];
          out[((g1 * n + g2) * n + g3) * d + k] = s;
        }
      }
  return out;
}

inline FiniteGroup klein_four() {
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = a ^ b;
  return FiniteGroup(2, table, {"1", "a", "b", "ab"});
}

namespace detail {

inline ProPData klein_family(std::string name, const std::vector<std::pair<std::size_t, std::size_t>>& eps_support) {
  ProPData d;
  d.name = std::move(name);
  d.P = klein_four();
  d.action = std::make_shared<const PModuleAction>(
      2, 1, std::vector<std::vector<std::int64_t>>{{1}, {-1}, {1}, {-1}});
  d.rho.assign(16, 0);
  // b = a-conjugation twisted by t: (b,a) and (ab,a) carry t^-1, (b,b) and (ab,b) carry t.
  d.rho[2 * 4 + 1] = -1;
  d.rho[2 * 4 + 2] = 1;
  d.rho[3 * 4 + 1] = -1;
  d.rho[3 * 4 + 2] = 1;
  if (!eps_support.empty()) {
    std::vector<std::int64_t> eps(16, 0);
    for (auto [g, h] : eps_support) eps[g * 4 + h] = 1;
    auto deps = integer_coboundary2(d.P, *d.action, eps);
    for (auto v : deps)
      if (v % 2 != 0) throw InvalidData("fixture cochain is not divisible by 2");
    for (auto& v : deps) v /= 2;
    d.eta = std::move(deps);
  }
  d.e = 2;
  d.module_symbols = {"t"};
  return d;
}

}  // namespace detail

inline ProPData dihedral2() { return detail::klein_family("dihedral2", {}); }

inline ProPData semidihedral2() {
  return detail::klein_family("semidihedral2", {{2, 1}, {3, 1}, {2, 3}, {3, 3}});
}

inline ProPData quaternion2() {
  return detail::klein_family("quaternion2", {{1, 1}, {1, 3}, {3, 1}, {3, 3}});
}

// C_3 acting on Z_3^2 through the ring of integers of Q_3(zeta_3); split, eta = 0.
inline ProPData cyclic3() {
  ProPData d;
  d.name = "cyclic3";
  std::vector<int> table(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) table[a * 3 + b] = (a + b) % 3;
  d.P = FiniteGroup(3, table, {"1", "c", "c2"});
  d.action = std::make_shared<const PModuleAction>(
      3, 2, std::vector<std::vector<std::int64_t>>{{1, 0, 0, 1}, {0, -1, 1, -1}, {-1, 1, -1, 0}});
  d.rho.assign(9 * 2, 0);
  d.e = 2;
  d.module_symbols = {"u", "v"};
  return d;
}

inline std::vector<std::string> builtin_family_names() {
  return {"dihedral2", "semidihedral2", "quaternion2", "cyclic3"};
}

inline ProPData builtin_family(const std::string& name) {
  if (name == "dihedral2") return dihedral2();
  if (name == "semidihedral2") return semidihedral2();
  if (name == "quaternion2") return quaternion2();
  if (name == "cyclic3") return cyclic3();
  throw InvalidData("unknown family '" + name + "'");
}

}  // namespace qcat
