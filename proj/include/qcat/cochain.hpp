#pragma once

// Normalized cochains of a subgroup L of P with values in T / p^N T, the
// coboundary operator, cohomology, the conjugation action and the transport
// maps between coefficient modules.
//
// Conventions: module elements are row vectors, m^g = m * A_g, and
//   D_n(c)(g_1..g_{n+1}) = c(g_2..) + sum_i (-1)^i c(..g_i g_{i+1}..)
//                          + (-1)^{n+1} c(g_1..g_n)^{g_{n+1}}.

#include <memory>
#include <numeric>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/group.hpp"
#include "qcat/padic.hpp"

namespace qcat {

// A subgroup of P used as the domain of cochains.
class Domain {
 public:
  Domain(const FiniteGroup& P, Subgroup L) : P_(&P), L_(std::move(L)), pos_(P.size(), -1) {
    for (std::size_t i = 0; i < L_.size(); ++i) pos_[L_.elements[i]] = static_cast<int>(i);
    if (pos_[P.identity()] < 0) throw InvalidData("domain does not contain the identity");
    for (std::size_t e : L_.elements)
      if (e != P.identity()) nonid_.push_back(e);
  }
  static std::shared_ptr<const Domain> whole(const FiniteGroup& P) {
    Subgroup all;
    for (std::size_t a = 0; a < P.size(); ++a) all.elements.push_back(a);
    return std::make_shared<const Domain>(P, all);
  }

  const FiniteGroup& group() const { return *P_; }
  const Subgroup& subgroup() const { return L_; }
  std::size_t size() const { return L_.size(); }
  const std::vector<std::size_t>& nonidentity() const { return nonid_; }
  bool contains(std::size_t g) const { return pos_[g] >= 0; }
  std::size_t position(std::size_t g) const { return static_cast<std::size_t>(pos_[g]); }
  std::size_t element(std::size_t i) const { return L_.elements[i]; }

  // Number of normalized coordinates for degree n.
  std::size_t tuple_count(int n) const {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c *= nonid_.size();
    return c;
  }
  // Position of a tuple of nonidentity elements among normalized tuples;
  // returns npos if some entry is the identity.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t normalized_index(const std::size_t* args, int n) const {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      if (args[i] == P_->identity()) return npos;
      idx = idx * nonid_.size() + nonid_rank(args[i]);
    }
    return idx;
  }
  std::vector<std::size_t> normalized_tuple(std::size_t idx, int n) const {
    std::vector<std::size_t> t(n);
    for (int i = n - 1; i >= 0; --i) {
      t[i] = nonid_[idx % nonid_.size()];
      idx /= nonid_.size();
    }
    return t;
  }

 private:
  std::size_t nonid_rank(std::size_t g) const {
    std::size_t p = position(g);
    std::size_t id = position(P_->identity());
    return p > id ? p - 1 : p;
  }
  const FiniteGroup* P_;
  Subgroup L_;
  std::vector<int> pos_;
  std::vector<std::size_t> nonid_;
};
using DomainPtr = std::shared_ptr<const Domain>;

// T / p^N T with the action of P.
class Module {
 public:
  Module(std::shared_ptr<const PModuleAction> action, Ring ring)
      : action_(std::move(action)), ring_(ring) {
    for (std::size_t g = 0; g < action_->group_size(); ++g) mats_.push_back(action_->matrix(g, ring_));
  }
  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return action_->rank(); }
  const PModMatrix& matrix(std::size_t g) const { return mats_[g]; }
  const std::shared_ptr<const PModuleAction>& action() const { return action_; }
  PModVector act(const PModVector& v, std::size_t g) const { return mats_[g].left_multiply(v); }
  std::shared_ptr<const Module> at_precision(int n) const {
    return std::make_shared<const Module>(action_, ring_.with_precision(n));
  }

 private:
  std::shared_ptr<const PModuleAction> action_;
  Ring ring_;
  std::vector<PModMatrix> mats_;
};
using ModulePtr = std::shared_ptr<const Module>;

class Cochain {
 public:
  Cochain() = default;  // placeholder only; every accessor needs a domain and module
  Cochain(DomainPtr dom, ModulePtr mod, int degree)
      : dom_(std::move(dom)), mod_(std::move(mod)), n_(degree),
        coords_(mod_->ring(), dom_->tuple_count(degree) * mod_->rank()) {}
  Cochain(DomainPtr dom, ModulePtr mod, int degree, PModVector coords)
      : dom_(std::move(dom)), mod_(std::move(mod)), n_(degree), coords_(std::move(coords)) {
    if (coords_.dim() != dom_->tuple_count(n_) * mod_->rank())
      throw InvalidData("cochain coordinate vector has wrong length");
  }

  const DomainPtr& domain() const { return dom_; }
  const ModulePtr& module() const { return mod_; }
  const Ring& ring() const { return mod_->ring(); }
  int degree() const { return n_; }
  std::size_t rank() const { return mod_->rank(); }
  const PModVector& coords() const { return coords_; }

  PModVector at(const std::vector<std::size_t>& args) const { return at(args.data()); }
  PModVector at(const std::size_t* args) const {
    PModVector v(ring(), rank());
    std::size_t idx = dom_->normalized_index(args, n_);
    if (idx == Domain::npos) return v;
    for (std::size_t k = 0; k < rank(); ++k) v[k] = coords_[idx * rank() + k];
    return v;
  }
  PModVector at(std::size_t a) const { return at(&a); }
  PModVector at(std::size_t a, std::size_t b) const {
    std::size_t t[2] = {a, b};
    return at(t);
  }
  void set(const std::vector<std::size_t>& args, const PModVector& v) {
    std::size_t idx = dom_->normalized_index(args.data(), n_);
    if (idx == Domain::npos) {
      if (!v.is_zero()) throw InvalidData("normalized cochain must vanish on the identity");
      return;
    }
    for (std::size_t k = 0; k < rank(); ++k) coords_[idx * rank() + k] = ring().reduce_unsigned(v[k]);
  }

  bool is_zero() const { return coords_.is_zero(); }
  int valuation() const { return coords_.valuation(); }

  Cochain operator+(const Cochain& o) const { return with(coords_ + o.coords_); }
  Cochain operator-(const Cochain& o) const { return with(coords_ - o.coords_); }
  Cochain operator-() const { return with(-coords_); }
  Cochain scaled(Residue c) const { return with(coords_.scaled(c)); }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n_ == b.n_ && a.dom_->subgroup() == b.dom_->subgroup() && a.coords_ == b.coords_;
  }

 private:
  Cochain with(PModVector v) const { return Cochain(dom_, mod_, n_, std::move(v)); }
  DomainPtr dom_;
  ModulePtr mod_;
  int n_ = 0;
  PModVector coords_;
};

// Matrix of D_n on normalized coordinates (columns: degree n, rows: n+1).
inline PModMatrix coboundary_matrix(const Domain& dom, const Module& mod, int n) {
  const Ring& ring = mod.ring();
  const std::size_t d = mod.rank();
  const std::size_t rows = dom.tuple_count(n + 1), cols = dom.tuple_count(n);
  const FiniteGroup& P = dom.group();
  PModMatrix out(ring, rows * d, cols * d);
  const Residue one = ring.reduce(1);
  std::vector<std::size_t> sub(static_cast<std::size_t>(n));
  auto add_block = [&](std::size_t row, std::size_t col, Residue sign, const PModMatrix* act) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // value_i gets sign * (c_col * A)_i = sign * sum_j c_j A(j, i)
        Residue coef = act ? (*act)(j, i) : (i == j ? one : 0);
        if (coef == 0) continue;
        Residue& cell = out(row * d + i, col * d + j);
        cell = ring.add(cell, ring.mul(sign, coef));
      }
  };
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::size_t> g = dom.normalized_tuple(r, n + 1);
    for (int i = 0; i <= n + 1; ++i) {
      Residue sign = (i % 2 == 0) ? one : ring.neg(one);
      const PModMatrix* act = nullptr;
      if (i == 0) {
        for (int k = 0; k < n; ++k) sub[k] = g[k + 1];
      } else if (i <= n) {
        for (int k = 0, s = 0; k <= n; ++k) {
          if (k == i - 1) {
            sub[s++] = P.mul(g[k], g[k + 1]);
            ++k;
          } else {
            sub[s++] = g[k];
          }
        }
      } else {
        for (int k = 0; k < n; ++k) sub[k] = g[k];
        act = &mod.matrix(g[n]);
      }
      std::size_t col = dom.normalized_index(sub.data(), n);
      if (n == 0) col = 0;
      if (col == Domain::npos) continue;
      add_block(r, col, sign, act);
    }
  }
  return out;
}

inline Cochain coboundary(const Cochain& c) {
  PModMatrix m = coboundary_matrix(*c.domain(), *c.module(), c.degree());
  return Cochain(c.domain(), c.module(), c.degree() + 1, m * c.coords());
}

// lambda_m(l) = m^l - m
inline Cochain lambda(const DomainPtr& dom, const ModulePtr& mod, const PModVector& m) {
  Cochain c(dom, mod, 1);
  for (std::size_t l : dom->nonidentity()) c.set({l}, mod->act(m, l) - m);
  return c;
}

// c^g(args) = c(args^g)^{g^-1}, as a cochain on `target`, whose
// g-conjugates must lie in the domain of c.
inline Cochain act(const Cochain& c, std::size_t g, const DomainPtr& target) {
  const FiniteGroup& P = target->group();
  const int n = c.degree();
  Cochain out(target, c.module(), n);
  const std::size_t ginv = P.inv(g);
  for (std::size_t idx = 0; idx < target->tuple_count(n); ++idx) {
    std::vector<std::size_t> args = target->normalized_tuple(idx, n);
    for (auto& a : args) {
      a = P.conj(a, g);
      if (!c.domain()->contains(a)) throw NotMapped("conjugate leaves the cochain domain");
    }
    out.set(target->normalized_tuple(idx, n), c.module()->act(c.at(args), ginv));
  }
  return out;
}
inline Cochain act(const Cochain& c, std::size_t g) { return act(c, g, c.domain()); }

inline Cochain restrict_to(const Cochain& c, const DomainPtr& sub) {
  const int n = c.degree();
  Cochain out(sub, c.module(), n);
  for (std::size_t idx = 0; idx < sub->tuple_count(n); ++idx) {
    std::vector<std::size_t> args = sub->normalized_tuple(idx, n);
    if (!std::all_of(args.begin(), args.end(), [&](std::size_t a) { return c.domain()->contains(a); }))
      throw NotMapped("restriction target is not a subgroup of the domain");
    out.set(args, c.at(args));
  }
  return out;
}

// Reduction of coefficients modulo p^precision.
inline Cochain project(const Cochain& c, int precision) {
  auto mod = c.module()->at_precision(precision);
  return Cochain(c.domain(), mod, c.degree(), c.coords().reduced(precision));
}

// Values multiplied by p^l, viewed modulo p^(N+l). With l = 1 this is the
// map induced by T/p^r T -> T/p^(r+1) T, t -> p t.
inline Cochain multiply_up(const Cochain& c, int l) {
  const int n = c.ring().precision() + l;
  auto mod = c.module()->at_precision(n);
  PModVector v = c.coords().lifted(n);
  return Cochain(c.domain(), mod, c.degree(), v.scaled(mod->ring().power_of_p(l)));
}
inline Cochain mul(const Cochain& c) { return multiply_up(c, 1); }

// Division of values by p^l, viewed modulo p^(N-l).
inline Cochain divide_down(const Cochain& c, int l) {
  const int n = c.ring().precision() - l;
  if (n < 0) throw DivNotDivisible("division below precision zero");
  auto mod = c.module()->at_precision(n);
  const Ring& r = c.ring();
  PModVector v(mod->ring(), c.coords().dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (r.valuation(c.coords()[i]) < l) throw DivNotDivisible("cochain value not divisible by p^" + std::to_string(l));
    v[i] = mod->ring().reduce_unsigned(r.divide_by_p_power(c.coords()[i], l));
  }
  return Cochain(c.domain(), mod, c.degree(), v);
}

// Cohomology H^n(L, M). In lattice mode M = T and the computation is done
// modulo p^N with N well above every divisor; in finite mode M = T/p^N T.
struct Cohomology {
  int degree = 0;
  bool lattice = false;
  Ring ring;
  std::vector<int> invariants;          // exponents of the cyclic factors, ascending
  std::vector<PModVector> generators;   // transversal generators, same order
  int log_order_cocycles = 0;           // finite mode only
  int log_order_coboundaries = 0;       // finite mode only
  std::size_t cocycle_rank = 0;         // lattice mode: rank of Z^n

  int log_order() const { return std::accumulate(invariants.begin(), invariants.end(), 0); }
  int exponent() const { return invariants.empty() ? 0 : *std::max_element(invariants.begin(), invariants.end()); }
};

namespace detail {

inline std::vector<std::pair<PModVector, int>> quotient_basis(const Ring& ring, std::size_t dim,
                                                              const std::vector<PModVector>& zgens,
                                                              const std::vector<int>& zorders,
                                                              const PModMatrix& relations_in_z) {
  // relations_in_z: columns are coboundaries written in the z generators.
  const std::size_t k = zgens.size();
  PModMatrix rel(ring, k, k + relations_in_z.cols());
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = ring.power_of_p(zorders[i]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < relations_in_z.cols(); ++j) rel(i, k + j) = relations_in_z(i, j);
  DiagonalForm f = smith_normal_form(rel);
  std::vector<std::pair<PModVector, int>> out;
  for (std::size_t i = 0; i < k; ++i) {
    int ex = i < f.rank ? f.exponents[i] : ring.precision();
    if (ex == 0) continue;
    PModVector g(ring, dim);
    for (std::size_t j = 0; j < k; ++j) {
      Residue c = f.left_inv(j, i);
      if (c) g = g + zgens[j].scaled(c);
    }
    out.emplace_back(g, ex);
  }
  return out;
}

}  // namespace detail

inline Cohomology cohomology(const DomainPtr& dom, const ModulePtr& mod, int n, bool lattice) {
  if (n < 1) throw InvalidData("cohomology degree must be at least 1");
  const Ring& ring = mod->ring();
  PModMatrix dn = coboundary_matrix(*dom, *mod, n);
  PModMatrix dprev = coboundary_matrix(*dom, *mod, n - 1);
  DiagonalForm f = smith_normal_form(dn);
  Cohomology h;
  h.degree = n;
  h.lattice = lattice;
  h.ring = ring;
  const std::size_t cols = dn.cols();
  std::vector<std::pair<PModVector, int>> basis;
  if (lattice) {
    std::vector<PModVector> z = free_kernel(f, cols);
    h.cocycle_rank = z.size();
    // Coboundaries in z coordinates: rows >= rank of right_inv * b.
    PModMatrix bz(ring, z.size(), dprev.cols());
    for (std::size_t j = 0; j < dprev.cols(); ++j) {
      PModVector y = f.right_inv * dprev.column(j);
      for (std::size_t i = 0; i < z.size(); ++i) bz(i, j) = y[f.rank + i];
    }
    std::vector<int> orders(z.size(), ring.precision());
    basis = detail::quotient_basis(ring, cols, z, orders, bz);
    for (auto& [g, ex] : basis)
      if (ex >= ring.precision()) throw PrecisionTooLow("cohomology is not finite at this precision");
  } else {
    KernelBasis kb = kernel_basis(f, cols);
    h.log_order_cocycles = kb.log_order();
    h.log_order_coboundaries = image_log_order(smith_normal_form(dprev));
    PModMatrix bz(ring, kb.generators.size(), dprev.cols());
    for (std::size_t j = 0; j < dprev.cols(); ++j) {
      PModVector y = f.right_inv * dprev.column(j);
      std::size_t gi = 0;
      for (std::size_t i = 0; i < cols; ++i) {
        if (i < f.rank && f.exponents[i] == 0) continue;
        Residue v = y[i];
        if (i < f.rank) v = ring.divide_by_p_power(v, ring.precision() - f.exponents[i]);
        bz(gi++, j) = v;
      }
    }
    basis = detail::quotient_basis(ring, cols, kb.generators, kb.order_exponents, bz);
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (auto& [g, ex] : basis) {
    h.invariants.push_back(ex);
    h.generators.push_back(g);
  }
  return h;
}

// Same as the lattice computation, but recomputed two digits higher; the
// abelian invariants must agree.
inline Cohomology lattice_cohomology_checked(const DomainPtr& dom, const ModulePtr& mod, int n) {
  Cohomology a = cohomology(dom, mod, n, true);
  Cohomology b = cohomology(dom, mod->at_precision(mod->ring().precision() + 2), n, true);
  if (a.invariants != b.invariants) throw PrecisionUnstable("cohomology invariants changed with precision");
  return a;
}

// Transversal of B^n in Z^n: all sum a_j g_j with 0 <= a_j < p^{f_j}, in
// lexicographic order of (a_0, a_1, ...).
inline std::vector<Cochain> transversal(const Cohomology& h, const DomainPtr& dom, const ModulePtr& mod) {
  std::vector<PModVector> out{PModVector(mod->ring(), h.generators.empty() ? dom->tuple_count(h.degree) * mod->rank()
                                                                            : h.generators.front().dim())};
  for (std::size_t j = h.generators.size(); j-- > 0;) {
    std::vector<PModVector> next;
    std::uint64_t count = 1;
    for (int k = 0; k < h.invariants[j]; ++k) count *= mod->ring().p();
    for (std::uint64_t a = 0; a < count; ++a)
      for (const auto& v : out)
        next.push_back(v + h.generators[j].lifted(mod->ring().precision()).scaled(mod->ring().reduce(static_cast<std::int64_t>(a))));
    out = std::move(next);
  }
  std::vector<Cochain> cs;
  for (auto& v : out) cs.emplace_back(dom, mod, h.degree, v);
  return cs;
}

}  // namespace qcat
