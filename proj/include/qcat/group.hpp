#pragma once

// Finite p-groups given by multiplication tables, subgroups, elementary
// abelian subgroup enumeration and the integral module structure of T.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/padic.hpp"

namespace qcat {

// Anything with indexed elements and a multiplication.
template <class G>
concept IndexedGroup = requires(const G& g, std::size_t a) {
  { g.size() } -> std::convertible_to<std::size_t>;
  { g.mul(a, a) } -> std::convertible_to<std::size_t>;
  { g.inv(a) } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::convertible_to<std::size_t>;
  { g.prime() } -> std::convertible_to<std::uint64_t>;
};

class FiniteGroup {
 public:
  FiniteGroup() = default;
  // table is row-major: table[a * n + b] = a * b.
  FiniteGroup(std::uint64_t p, std::vector<int> table, std::vector<std::string> labels = {})
      : p_(p), table_(std::move(table)), labels_(std::move(labels)) {
    std::size_t n = 0;
    while (n * n < table_.size()) ++n;
    if (n == 0 || n * n != table_.size()) throw InvalidData("multiplication table is not square");
    n_ = n;
    std::size_t q = n;
    m_ = 0;
    while (q % p_ == 0) {
      q /= p_;
      ++m_;
    }
    if (q != 1) throw InvalidData("group order is not a power of p");
    for (int v : table_)
      if (v < 0 || static_cast<std::size_t>(v) >= n_) throw InvalidData("table entry out of range");
    identity_ = n_;
    for (std::size_t e = 0; e < n_ && identity_ == n_; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n_ && ok; ++a)
        ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ == n_) throw InvalidData("table has no identity");
    inverse_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n_; ++a)
      if (inverse_[a] == n_) throw InvalidData("element without inverse");
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidData("table is not associative");
    if (labels_.empty())
      for (std::size_t a = 0; a < n_; ++a) labels_.push_back("g" + std::to_string(a));
    if (labels_.size() != n_) throw InvalidData("label count differs from group order");
  }

  std::size_t size() const { return n_; }
  std::uint64_t prime() const { return p_; }
  int log_order() const { return m_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(table_[a * n_ + b]);
  }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  // a^g = g^-1 a g
  std::size_t conj(std::size_t a, std::size_t g) const { return mul(mul(inv(g), a), g); }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

 private:
  std::uint64_t p_ = 2;
  std::size_t n_ = 0;
  int m_ = 0;
  std::vector<int> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
};

// Canonical identity of a subgroup: its sorted element indices.
struct Subgroup {
  std::vector<std::size_t> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(std::size_t a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }
  bool contains(const Subgroup& o) const {
    return std::includes(elements.begin(), elements.end(), o.elements.begin(), o.elements.end());
  }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() <=> b.elements.size();
    return a.elements <=> b.elements;
  }
};

template <IndexedGroup G>
std::size_t element_power(const G& g, std::size_t a, std::uint64_t k) {
  std::size_t r = g.identity();
  for (std::uint64_t i = 0; i < k; ++i) r = g.mul(r, a);
  return r;
}

template <IndexedGroup G>
std::size_t conjugate_element(const G& g, std::size_t a, std::size_t by) {
  return g.mul(g.mul(g.inv(by), a), by);
}

template <IndexedGroup G>
Subgroup generated_subgroup(const G& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a : frontier)
      for (std::size_t x : gens) {
        std::size_t b = g.mul(a, x);
        if (s.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return Subgroup{{s.begin(), s.end()}};
}

template <IndexedGroup G>
Subgroup conjugate_subgroup(const G& g, const Subgroup& s, std::size_t by) {
  Subgroup out;
  out.elements.reserve(s.size());
  for (std::size_t a : s.elements) out.elements.push_back(conjugate_element(g, a, by));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// All elementary abelian subgroups, the trivial one included, sorted by
// size and then by element list.
template <IndexedGroup G>
std::vector<Subgroup> elementary_abelian_subgroups(const G& g) {
  const std::uint64_t p = g.prime();
  const std::size_t one = g.identity();
  std::vector<std::size_t> order_p;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (a != one && element_power(g, a, p) == one) order_p.push_back(a);

  std::set<Subgroup> seen;
  std::vector<Subgroup> layer{Subgroup{{one}}};
  seen.insert(layer.front());
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& e : layer) {
      for (std::size_t y : order_p) {
        if (e.contains(y)) continue;
        bool commutes = std::all_of(e.elements.begin(), e.elements.end(),
                                    [&](std::size_t a) { return g.mul(a, y) == g.mul(y, a); });
        if (!commutes) continue;
        Subgroup bigger;
        std::size_t yk = one;
        for (std::uint64_t k = 0; k < p; ++k) {
          for (std::size_t a : e.elements) bigger.elements.push_back(g.mul(a, yk));
          yk = g.mul(yk, y);
        }
        std::sort(bigger.elements.begin(), bigger.elements.end());
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    layer = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Integral matrices describing a right action of P on Z_p^d: the image of a
// row vector v under g is v * A_g, and A_gh = A_g * A_h.
class PModuleAction {
 public:
  PModuleAction() = default;
  PModuleAction(std::uint64_t p, std::size_t d, std::vector<std::vector<std::int64_t>> matrices)
      : p_(p), d_(d), mats_(std::move(matrices)) {
    for (const auto& a : mats_)
      if (a.size() != d_ * d_) throw InvalidData("action matrix has wrong shape");
  }

  std::uint64_t prime() const { return p_; }
  std::size_t rank() const { return d_; }
  std::size_t group_size() const { return mats_.size(); }
  const std::vector<std::int64_t>& integer_matrix(std::size_t g) const { return mats_[g]; }
  PModMatrix matrix(std::size_t g, const Ring& ring) const {
    return PModMatrix::from_integers(ring, d_, d_, mats_[g]);
  }

  // Homomorphism property at the given precision.
  void validate(const FiniteGroup& P, const Ring& ring) const {
    if (mats_.size() != P.size()) throw InvalidData("one action matrix per group element expected");
    if (!(matrix(P.identity(), ring) == PModMatrix::identity(ring, d_)))
      throw InvalidData("identity does not act trivially");
    for (std::size_t a = 0; a < P.size(); ++a)
      for (std::size_t b = 0; b < P.size(); ++b)
        if (!(matrix(a, ring) * matrix(b, ring) == matrix(P.mul(a, b), ring)))
          throw InvalidData("action is not a homomorphism at " + P.label(a) + "," + P.label(b));
  }

 private:
  std::uint64_t p_ = 2;
  std::size_t d_ = 0;
  std::vector<std::vector<std::int64_t>> mats_;
};

// {n in sub : n * A_l = n for all l in L}
inline SubModule module_centralizer(const PModuleAction& action, const Subgroup& L,
                                    const SubModule& sub) {
  const Ring& ring = sub.ring();
  const std::size_t d = action.rank();
  std::vector<std::size_t> nontrivial;
  for (std::size_t l : L.elements) {
    PModMatrix a = action.matrix(l, ring);
    if (!(a == PModMatrix::identity(ring, d))) nontrivial.push_back(l);
  }
  if (nontrivial.empty()) return sub;
  // Column form: (A_l - I)^T n^T = 0, stacked over l.
  PModMatrix stacked(ring, d * nontrivial.size(), d);
  for (std::size_t k = 0; k < nontrivial.size(); ++k) {
    PModMatrix a = action.matrix(nontrivial[k], ring);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Residue v = a(j, i);
        if (i == j) v = ring.sub(v, 1 % ring.modulus());
        stacked(k * d + i, j) = v;
      }
  }
  KernelBasis kb = kernel_basis(stacked);
  return SubModule(ring, d, kb.generators).intersect(sub);
}

struct UniserialData {
  std::vector<SubModule> series;  // T_0 = T, T_{i+1} = [T_i, S]
  std::size_t rank = 0;
};

// Computes the series T_i modulo p^N and checks index p at every step while
// the terms stay well above the truncation, plus p T_i = T_{i+d}.
inline UniserialData verify_uniserial(const PModuleAction& action, const FiniteGroup& P, int levels) {
  const std::size_t d = action.rank();
  const int precision = levels + 2;
  Ring ring(action.prime(), precision);
  UniserialData u;
  u.rank = d;
  SubModule cur = SubModule::whole(ring, d);
  const int steps = static_cast<int>(d) * levels;
  u.series.push_back(cur);
  for (int i = 0; i < steps; ++i) {
    std::vector<PModVector> gens;
    for (const auto& g : cur.generators())
      for (std::size_t s = 0; s < P.size(); ++s) {
        PModVector img = action.matrix(s, ring).left_multiply(g) - g;
        if (!img.is_zero()) gens.push_back(img);
      }
    SubModule nxt(ring, d, std::move(gens));
    int drop = cur.log_order() - nxt.log_order();
    if (drop != 1)
      throw NotUniserial("[T_" + std::to_string(i) + " : T_" + std::to_string(i + 1) +
                         "] = p^" + std::to_string(drop));
    u.series.push_back(nxt);
    cur = nxt;
  }
  Residue pp = ring.reduce(static_cast<std::int64_t>(action.prime()));
  for (int i = 0; i + static_cast<int>(d) < static_cast<int>(u.series.size()); ++i)
    if (!(u.series[i].scaled(pp) == u.series[i + d]))
      throw NotUniserial("p T_" + std::to_string(i) + " differs from T_" + std::to_string(i + d));
  return u;
}

}  // namespace qcat
