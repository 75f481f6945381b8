#pragma once

// Z^n(L, T/p^r T) = I ⊕ K, where I is the image of Z^n(L, T) and K is a
// complement built from one Smith form of D_n over T. In the coordinates
// y = R^-1 x of that form, with divisors p^{e_i} (i < s):
//   I = {y_i = 0 for i < s},  K = {y_i in p^{r-e_i} for i < s, y_i = 0 else}.
// The same R serves every r, so mul(K at r) = K at r+1 holds by construction.

#include <vector>

#include "qcat/cochain.hpp"

namespace qcat {

class Splitting {
 public:
  // The module must be T at a working precision well above every level r used.
  Splitting(DomainPtr dom, ModulePtr lattice, int degree)
      : dom_(std::move(dom)), mod_(std::move(lattice)), n_(degree) {
    PModMatrix d = coboundary_matrix(*dom_, *mod_, n_);
    cols_ = d.cols();
    form_ = smith_normal_form(d);
    for (std::size_t i = 0; i < form_.rank; ++i)
      if (form_.exponents[i] > 0) torsion_.push_back(i);
  }

  const DomainPtr& domain() const { return dom_; }
  const ModulePtr& lattice() const { return mod_; }
  int degree() const { return n_; }
  const DiagonalForm& form() const { return form_; }
  std::size_t free_rank() const { return cols_ - form_.rank; }
  // Exponents e_i of the nontrivial torsion coordinates; K ≅ ⊕ Z/p^{e_i}.
  std::vector<int> torsion_exponents() const {
    std::vector<int> e;
    for (std::size_t i : torsion_) e.push_back(form_.exponents[i]);
    return e;
  }
  int max_exponent() const { return form_.max_exponent(); }
  int log_order_K() const {
    int s = 0;
    for (std::size_t i : torsion_) s += form_.exponents[i];
    return s;
  }

  ModulePtr level(int r) const { return mod_->at_precision(r); }

  void require_level(int r) const {
    if (r < max_exponent())
      throw PrecisionTooLow("level " + std::to_string(r) + " is below the torsion exponent " +
                            std::to_string(max_exponent()));
    if (r > mod_->ring().precision() - max_exponent())
      throw PrecisionTooLow("level " + std::to_string(r) + " exceeds the working precision");
  }

  std::vector<PModVector> I_generators(int r) const {
    require_level(r);
    std::vector<PModVector> out;
    for (std::size_t j = form_.rank; j < cols_; ++j) out.push_back(form_.right.column(j).reduced(r));
    return out;
  }
  // Generators of K at level r with their orders p^{e_i}.
  std::vector<std::pair<PModVector, int>> K_generators(int r) const {
    require_level(r);
    std::vector<std::pair<PModVector, int>> out;
    Ring rr = mod_->ring().with_precision(r);
    for (std::size_t i : torsion_) {
      int e = form_.exponents[i];
      out.emplace_back(form_.right.column(i).reduced(r).scaled(rr.power_of_p(r - e)), e);
    }
    return out;
  }
  // K element with coordinates c_i mod p^{e_i}.
  Cochain K_element(int r, const std::vector<Residue>& c) const {
    auto gens = K_generators(r);
    ModulePtr m = level(r);
    PModVector v(m->ring(), cols_);
    for (std::size_t k = 0; k < gens.size(); ++k) v = v + gens[k].first.scaled(m->ring().reduce_unsigned(c[k]));
    return Cochain(dom_, m, n_, v);
  }
  // All elements of K at level r, by coordinate vectors in lexicographic order.
  std::vector<std::vector<Residue>> K_coordinates() const {
    std::vector<std::vector<Residue>> out{{}};
    for (std::size_t i : torsion_) {
      std::uint64_t ord = 1;
      for (int k = 0; k < form_.exponents[i]; ++k) ord *= mod_->ring().p();
      std::vector<std::vector<Residue>> next;
      for (const auto& v : out)
        for (std::uint64_t a = 0; a < ord; ++a) {
          auto w = v;
          w.push_back(a);
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
    return out;
  }

  struct Parts {
    Cochain lattice_part;  // over T, at the working precision
    Cochain torsion_part;  // in K at level r
    std::vector<Residue> torsion_coords;
  };

  // gamma = pro_r(lattice_part) + torsion_part.
  Parts decompose(const Cochain& gamma) const {
    const int r = gamma.ring().precision();
    require_level(r);
    Ring rr = gamma.ring();
    PModMatrix rinv = form_.right_inv.reduced(r);
    PModVector y = rinv * gamma.coords();
    for (std::size_t i = 0; i < form_.rank; ++i)
      if (rr.valuation(y[i]) < r - form_.exponents[i])
        throw NotACocycle("cochain is not a cocycle at level " + std::to_string(r));
    const Ring& big = mod_->ring();
    PModVector yfree(big, cols_), ytor(rr, cols_);
    std::vector<Residue> c;
    for (std::size_t j = form_.rank; j < cols_; ++j) yfree[j] = big.reduce_unsigned(y[j]);
    for (std::size_t i : torsion_) {
      ytor[i] = y[i];
      c.push_back(rr.divide_by_p_power(y[i], r - form_.exponents[i]));
    }
    Cochain bar(dom_, mod_, n_, form_.right * yfree);
    Cochain under(dom_, gamma.module(), n_, form_.right.reduced(r) * ytor);
    return {bar, under, c};
  }

  // pro_{r-1}(lattice part) + div(torsion part)
  Cochain epi(const Cochain& gamma) const {
    const int r = gamma.ring().precision();
    require_level(r - 1);
    Parts parts = decompose(gamma);
    return project(parts.lattice_part, r - 1) + divide_down(parts.torsion_part, 1);
  }

  // J^n at level r: cocycles with values in p^{r-m} T / p^r T.
  SubModule J(int r, int m) const { return scaled_cocycles(r, r - m); }
  // J^{n,*} at level r: cocycles with values in p^m T / p^r T.
  SubModule Jstar(int r, int m) const { return scaled_cocycles(r, m); }

  SubModule I(int r) const { return SubModule(mod_->ring().with_precision(r), cols_, I_generators(r)); }
  SubModule K(int r) const {
    std::vector<PModVector> g;
    for (auto& [v, e] : K_generators(r)) g.push_back(v);
    return SubModule(mod_->ring().with_precision(r), cols_, g);
  }
  SubModule Z(int r) const {
    ModulePtr m = level(r);
    return SubModule(m->ring(), cols_, kernel_basis(coboundary_matrix(*dom_, *m, n_)).generators);
  }
  SubModule B(int r) const {
    ModulePtr m = level(r);
    PModMatrix d = coboundary_matrix(*dom_, *m, n_ - 1);
    std::vector<PModVector> g;
    for (std::size_t j = 0; j < d.cols(); ++j) g.push_back(d.column(j));
    return SubModule(m->ring(), cols_, g);
  }

 private:
  SubModule scaled_cocycles(int r, int shift) const {
    ModulePtr small = level(r - shift);
    KernelBasis kb = kernel_basis(coboundary_matrix(*dom_, *small, n_));
    Ring rr = mod_->ring().with_precision(r);
    std::vector<PModVector> g;
    for (auto& v : kb.generators) g.push_back(v.lifted(r).scaled(rr.power_of_p(shift)));
    return SubModule(rr, cols_, g);
  }

  DomainPtr dom_;
  ModulePtr mod_;
  int n_;
  std::size_t cols_ = 0;
  DiagonalForm form_;
  std::vector<std::size_t> torsion_;
};

// The representative of a class in H^3(P, T) inside K^2(P, T/p^r T): with
// L D_2 R = diag(p^{e_i}), c_i = (L eta)_i mod p^{e_i} and
// eta_r = R (c_i p^{r - e_i}). Lifting eta_r to T, applying D_2 and dividing
// by p^r returns a cocycle cohomologous to eta.
class EtaRepresentative {
 public:
  EtaRepresentative(const Splitting& s2, const Cochain& eta) : split_(&s2) {
    if (s2.degree() != 2) throw InvalidData("connecting data needs the degree-2 splitting");
    if (!coboundary(eta).is_zero()) throw NotACocycle("eta fails the 3-cocycle condition");
    const DiagonalForm& f = s2.form();
    const Ring& ring = eta.ring();
    PModVector le = f.left * eta.coords();
    for (std::size_t i = f.rank; i < le.dim(); ++i)
      if (ring.valuation(le[i]) < ring.precision() - f.max_exponent() - 1)
        throw NotACocycle("eta has an infinite-order class component");
    auto ex = s2.torsion_exponents();
    std::size_t k = 0;
    for (std::size_t i = 0; i < f.rank; ++i) {
      if (f.exponents[i] == 0) continue;
      Ring small = ring.with_precision(ex[k]);
      coords_.push_back(small.reduce_unsigned(le[i]));
      ++k;
    }
  }
  const std::vector<Residue>& coords() const { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
  }
  Cochain at_level(int r) const { return split_->K_element(r, coords_); }

 private:
  const Splitting* split_;
  std::vector<Residue> coords_;
};

// con: lift a level-r cocycle to T, apply D and divide by p^r.
inline Cochain connecting_map(const Cochain& gamma, const ModulePtr& lattice) {
  const int r = gamma.ring().precision();
  Cochain lifted(gamma.domain(), lattice, gamma.degree(), gamma.coords().lifted(lattice->ring().precision()));
  Cochain d = coboundary(lifted);
  Cochain q = divide_down(d, r);
  return Cochain(q.domain(), lattice, q.degree(), q.coords().lifted(lattice->ring().precision()));
}

// Checks of Z^n(L, T/p^r T) = I ⊕ K at one level r, as log_p orders.
struct SplittingCheck {
  int degree = 0, level = 0;
  int log_Z = 0, log_I = 0, log_K = 0;
  int log_H_finite = 0;  // H^n(L, T/p^r T)
  int log_H = 0;         // H^n(L, T)
  int log_H_next = 0;    // H^{n+1}(L, T)
  bool orders = false;        // |Z| = |I| |K|
  bool intersection = false;  // I ∩ K = 0
  bool spans = false;         // I + K = Z
  bool cohomology = false;    // |H^n(L,T/p^rT)| = |H^n(L,T)| |H^{n+1}(L,T)|
  bool mul_coherent = false;  // mul(K at r) = K at r+1
  bool ok() const { return orders && intersection && spans && cohomology && mul_coherent; }
};

inline SplittingCheck verify_splitting(const Splitting& s, int r) {
  s.require_level(r + 1);
  SplittingCheck c;
  c.degree = s.degree();
  c.level = r;
  SubModule Z = s.Z(r), I = s.I(r), K = s.K(r);
  c.log_Z = Z.log_order();
  c.log_I = I.log_order();
  c.log_K = K.log_order();
  c.orders = c.log_Z == c.log_I + c.log_K;
  c.intersection = I.intersect(K).log_order() == 0;
  c.spans = (I + K) == Z;
  c.log_H_finite = cohomology(s.domain(), s.level(r), s.degree(), false).log_order();
  c.log_H = lattice_cohomology_checked(s.domain(), s.lattice(), s.degree()).log_order();
  c.log_H_next = lattice_cohomology_checked(s.domain(), s.lattice(), s.degree() + 1).log_order();
  c.cohomology = c.log_H_finite == c.log_H + c.log_H_next;
  Ring up = s.lattice()->ring().with_precision(r + 1);
  std::vector<PModVector> g;
  for (const auto& v : K.generators()) g.push_back(v.lifted(r + 1).scaled(up.reduce(static_cast<std::int64_t>(up.p()))));
  c.mul_coherent = SubModule(up, K.dim(), g) == s.K(r + 1);
  return c;
}

}  // namespace qcat
