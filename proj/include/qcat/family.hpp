#pragma once

// A coclass family G_x = Ext(rho_x + eta_x) built from pro-p data
// (P, action on T, rho, eta), together with everything that has to be chosen
// once and reused for every x: complements t_L, transversals T^1(L,T), the
// complements K of the splitting, eta_x and omega_{L,x}.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/cochain.hpp"
#include "qcat/extension.hpp"
#include "qcat/group.hpp"
#include "qcat/splitting.hpp"

namespace qcat {

struct ProPData {
  std::string name;
  FiniteGroup P;
  std::shared_ptr<const PModuleAction> action;
  std::vector<std::int64_t> rho;  // |P|^2 * d integers, row-major over (g, h, k)
  std::vector<std::int64_t> eta;  // |P|^3 * d integers, or empty for eta = 0
  int e = 0;                      // M_x = T / p^{x+e} T
  std::vector<std::string> module_symbols;  // names of the basis of T, e.g. {"t"}

  int m() const { return P.log_order(); }
  std::size_t d() const { return action->rank(); }
};

inline Cochain cochain_from_integers(const DomainPtr& dom, const ModulePtr& mod, int n,
                                     const std::vector<std::int64_t>& table) {
  const std::size_t g = dom->group().size(), d = mod->rank();
  std::size_t total = d;
  for (int i = 0; i < n; ++i) total *= g;
  Cochain c(dom, mod, n);
  if (table.empty()) return c;
  if (table.size() != total) throw InvalidData("cochain table has wrong length");
  std::vector<std::size_t> args(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx * d < total; ++idx) {
    std::size_t rem = idx;
    for (int i = n - 1; i >= 0; --i) {
      args[i] = rem % g;
      rem /= g;
    }
    std::vector<std::int64_t> vals(table.begin() + idx * d, table.begin() + (idx + 1) * d);
    PModVector v = PModVector::from_integers(mod->ring(), vals);
    bool has_identity = std::any_of(args.begin(), args.end(), [&](std::size_t a) { return a == dom->group().identity(); });
    if (has_identity) {
      if (!v.is_zero()) throw InvalidData("cochain table is not normalized");
      continue;
    }
    c.set(args, v);
  }
  return c;
}

// Per elementary abelian L <= P.
struct SubgroupData {
  Subgroup L;
  DomainPtr dom;
  bool splits = false;           // L in the set of split subgroups over T
  bool splits_eta = false;       // additionally [res_L eta] = 0
  std::optional<Cochain> t;      // t_L over T, D_1(t_L) = -res_L(rho)
  std::optional<Cochain> omega0; // omega_{L,0} over T/p^e T
  Cohomology h1;                 // H^1(L, T)
  std::vector<Cochain> transversal;  // T^1(L, T)
  std::shared_ptr<Splitting> split1; // Z^1(L, T/p^r T) = I ⊕ K
  int log_h2 = 0;                // log_p |H^2(L, T)|
  std::vector<std::vector<std::uint64_t>> fixed_subspaces;  // O_x(L) in F_p coordinates of A_x
  std::vector<std::size_t> generators;  // a minimal generating set of L
};

// One member G_x of the family and the data depending on x.
struct FamilyLevel {
  int x = 0;
  int r = 0;  // x + e
  ModulePtr M;
  std::shared_ptr<const ExtensionGroup> G;
  Cochain nu;
  Cochain eta_x;
  std::map<std::size_t, Cochain> t_x;  // by subgroup index, for L in the eta-split set
  std::map<std::size_t, Cochain> omega_x;
};

class FamilyContext {
 public:
  // Domains keep a pointer to data_.P, so the context must stay put.
  FamilyContext(const FamilyContext&) = delete;
  FamilyContext& operator=(const FamilyContext&) = delete;

  FamilyContext(ProPData data, int x_max, int slack = 8) : data_(std::move(data)), x_max_(x_max) {
    const FiniteGroup& P = data_.P;
    const int m = data_.m();
    if (data_.e < 1) throw InvalidData("truncation offset must be positive");
    if (x_max < 0) throw InvalidData("negative family index");
    precision_ = x_max + 1 + data_.e + 2 * m + slack;
    Ring ring(P.prime(), precision_);
    data_.action->validate(P, ring);
    verify_uniserial(*data_.action, P, 2 * m + 2);
    T_ = std::make_shared<const Module>(data_.action, ring);
    whole_ = Domain::whole(P);
    rho_ = cochain_from_integers(whole_, T_, 2, data_.rho);
    if (!coboundary(*rho_).is_zero()) throw NotACocycle("rho fails the 2-cocycle condition");
    eta_ = cochain_from_integers(whole_, T_, 3, data_.eta);
    split2_ = std::make_shared<Splitting>(whole_, T_, 2);
    eta_rep_.emplace(*split2_, *eta_);
    if (data_.e < split2_->max_exponent())
      throw PrecisionTooLow("truncation offset below the exponent of H^3(P, T)");

    auto subs = elementary_abelian_subgroups(P);
    for (auto& L : subs) {
      SubgroupData sd;
      sd.L = L;
      sd.dom = std::make_shared<const Domain>(P, L);
      sd.generators = minimal_generators(L);
      PModMatrix d1 = coboundary_matrix(*sd.dom, *T_, 1);
      DiagonalForm f1 = smith_normal_form(d1);
      Cochain rhoL = restrict_to(*rho_, sd.dom);
      if (auto sol = solve_mod(f1, -rhoL.coords())) {
        sd.splits = true;
        sd.t = Cochain(sd.dom, T_, 1, *sol);
        Cochain etaL = restrict_to(*eta_, sd.dom);
        PModMatrix d2 = coboundary_matrix(*sd.dom, *T_, 2);
        sd.splits_eta = solve_mod(d2, etaL.coords()).has_value();
      }
      sd.h1 = lattice_cohomology_checked(sd.dom, T_, 1);
      sd.transversal = transversal(sd.h1, sd.dom, T_);
      sd.split1 = std::make_shared<Splitting>(sd.dom, T_, 1);
      sd.log_h2 = sd.split1->log_order_K();
      sd.fixed_subspaces = fixed_subspaces(L);
      subgroups_.push_back(std::move(sd));
    }
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
      if (subgroups_[i].splits) split_.push_back(i);
      if (subgroups_[i].splits_eta) split_eta_.push_back(i);
    }
    // omega_{L,0}: D_1(omega) = -res_L(eta_0) over T/p^e T with values in
    // p^c T, c = max(0, e - 2m); later levels are mul-images.
    const int e = data_.e;
    const int c = std::max(0, e - 2 * m);
    ModulePtr M0 = T_->at_precision(e);
    Cochain eta0 = eta_rep_->at_level(e);
    for (std::size_t i : split_eta_) {
      SubgroupData& sd = subgroups_[i];
      PModMatrix d1 = coboundary_matrix(*sd.dom, *M0, 1).scaled(M0->ring().power_of_p(c));
      Cochain etaL = restrict_to(eta0, sd.dom);
      auto sol = solve_mod(d1, -etaL.coords());
      if (!sol) throw NoComplement("no omega with image in p^" + std::to_string(c) + " M_0");
      sd.omega0 = Cochain(sd.dom, M0, 1, sol->scaled(M0->ring().power_of_p(c)));
    }
  }

  const ProPData& data() const { return data_; }
  const FiniteGroup& P() const { return data_.P; }
  int m() const { return data_.m(); }
  int e() const { return data_.e; }
  int precision() const { return precision_; }
  int x_max() const { return x_max_; }
  const ModulePtr& T() const { return T_; }
  const DomainPtr& whole() const { return whole_; }
  const Cochain& rho() const { return *rho_; }
  const Cochain& eta() const { return *eta_; }
  const Splitting& split2() const { return *split2_; }
  const EtaRepresentative& eta_representative() const { return *eta_rep_; }
  const std::vector<SubgroupData>& subgroups() const { return subgroups_; }
  const SubgroupData& subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<std::size_t>& split_subgroups() const { return split_; }
  const std::vector<std::size_t>& eta_split_subgroups() const { return split_eta_; }

  std::optional<std::size_t> find_subgroup(const Subgroup& L) const {
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      if (subgroups_[i].L == L) return i;
    return std::nullopt;
  }

  Cochain eta_at(int x) const { return eta_rep_->at_level(x + data_.e); }

  // omega_{L,x} = p^x omega_{L,0} at level x + e.
  Cochain omega_at(std::size_t i, int x) const {
    const Cochain& w0 = *subgroups_[i].omega0;
    return multiply_up(w0, x);
  }
  Cochain t_at(std::size_t i, int x) const {
    return project(*subgroups_[i].t, x + data_.e) + omega_at(i, x);
  }

  FamilyLevel level(int x) const {
    if (x < 0 || x > x_max_ + 1) throw PrecisionTooLow("level " + std::to_string(x) + " outside the prepared range");
    FamilyLevel lv;
    lv.x = x;
    lv.r = x + data_.e;
    lv.M = T_->at_precision(lv.r);
    lv.eta_x = eta_at(x);
    lv.nu = project(*rho_, lv.r) + lv.eta_x;
    lv.G = std::make_shared<const ExtensionGroup>(lv.nu);
    for (std::size_t i : split_eta_) {
      lv.omega_x.emplace(i, omega_at(i, x));
      lv.t_x.emplace(i, t_at(i, x));
    }
    return lv;
  }

  // l^w for l in L (P-conjugation), as a map of P-indices.
  bool maps_into(std::size_t li, std::size_t hi, std::size_t w) const {
    const FiniteGroup& P = data_.P;
    for (std::size_t l : subgroups_[li].L.elements)
      if (!subgroups_[hi].L.contains(P.conj(l, w))) return false;
    return true;
  }

  // zeta-hat over T: l -> (t_L(l)^w - t_H(l^w) + rho(l,w) - rho(w,l^w))^{w^-1}
  Cochain zeta_hat(std::size_t li, std::size_t hi, std::size_t w) const {
    return zeta_hat_with(*subgroups_[li].t, *subgroups_[hi].t, *rho_, li, w);
  }
  // The same expression for arbitrary sections and cocycle, e.g. at level x.
  Cochain zeta_hat_with(const Cochain& tL, const Cochain& tH, const Cochain& nu, std::size_t li,
                        std::size_t w) const {
    const FiniteGroup& P = data_.P;
    const SubgroupData& sd = subgroups_[li];
    const Module& mod = *tL.module();
    Cochain out(sd.dom, tL.module(), 1);
    const std::size_t winv = P.inv(w);
    for (std::size_t l : sd.dom->nonidentity()) {
      std::size_t k = P.conj(l, w);
      if (!tH.domain()->contains(k)) throw NotMapped("L^w is not contained in H");
      PModVector v = mod.act(tL.at(l), w) - tH.at(k) + nu.at(l, w) - nu.at(w, k);
      out.set({l}, mod.act(v, winv));
    }
    return out;
  }

  // Elements of order p of M_x form A_x = p^{r-1} M_x; O_x(L) are the
  // subspaces of its L-fixed part, in F_p coordinates independent of x.
  // Each subspace is a sorted list of encoded F_p vectors.
  std::vector<std::vector<std::uint64_t>> fixed_subspaces(const Subgroup& L) const {
    const std::uint64_t p = data_.P.prime();
    const std::size_t d = data_.d();
    Ring fp(p, 1);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    std::vector<std::uint64_t> fixed;
    for (std::uint64_t code = 0; code < total; ++code) {
      PModVector v = decode_fp(code, fp);
      bool ok = true;
      for (std::size_t l : L.elements) ok = ok && data_.action->matrix(l, fp).left_multiply(v) == v;
      if (ok) fixed.push_back(code);
    }
    // Subspaces by closure, ordered by size then elements.
    std::set<std::vector<std::uint64_t>> seen{{0}};
    std::vector<std::vector<std::uint64_t>> layer{{0}};
    while (!layer.empty()) {
      std::vector<std::vector<std::uint64_t>> next;
      for (const auto& s : layer)
        for (std::uint64_t y : fixed) {
          if (std::binary_search(s.begin(), s.end(), y)) continue;
          std::set<std::uint64_t> span(s.begin(), s.end());
          PModVector yv = decode_fp(y, fp);
          for (std::uint64_t a : s) {
            PModVector av = decode_fp(a, fp);
            for (std::uint64_t k = 1; k < p; ++k) span.insert(encode_fp(av + yv.scaled(k)));
          }
          std::vector<std::uint64_t> sv(span.begin(), span.end());
          if (seen.insert(sv).second) next.push_back(sv);
        }
      layer = std::move(next);
    }
    std::vector<std::vector<std::uint64_t>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  PModVector decode_fp(std::uint64_t code, const Ring& fp) const {
    PModVector v(fp, data_.d());
    for (std::size_t i = 0; i < data_.d(); ++i) {
      v[i] = code % fp.p();
      code /= fp.p();
    }
    return v;
  }
  std::uint64_t encode_fp(const PModVector& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = v.dim(); i-- > 0;) code = code * v.ring().p() + v[i] % v.ring().p();
    return code;
  }
  // p^{r-1} * v for an F_p coordinate vector.
  PModVector embed_fp(std::uint64_t code, const Ring& ring) const {
    Ring fp(ring.p(), 1);
    PModVector v = decode_fp(code, fp).lifted(ring.precision());
    return v.scaled(ring.power_of_p(ring.precision() - 1));
  }

  std::string element_word(std::size_t w, const PModVector& m) const {
    std::string mpart;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      std::int64_t k = m.ring().signed_value(m[i]);
      if (k == 0) continue;
      std::string sym = i < data_.module_symbols.size() ? data_.module_symbols[i] : "t" + std::to_string(i + 1);
      mpart += sym;
      if (k != 1) mpart += "^" + std::to_string(k);
    }
    if (w == data_.P.identity()) return mpart.empty() ? "1" : mpart;
    return data_.P.label(w) + mpart;
  }

 private:
  std::vector<std::size_t> minimal_generators(const Subgroup& L) const {
    std::vector<std::size_t> gens;
    Subgroup cur{{data_.P.identity()}};
    for (std::size_t a : L.elements) {
      if (cur.contains(a)) continue;
      gens.push_back(a);
      cur = generated_subgroup(data_.P, gens);
    }
    return gens;
  }

  ProPData data_;
  int x_max_ = 0;
  int precision_ = 0;
  ModulePtr T_;
  DomainPtr whole_;
  std::optional<Cochain> rho_, eta_;
  std::shared_ptr<Splitting> split2_;
  std::optional<EtaRepresentative> eta_rep_;
  std::vector<SubgroupData> subgroups_;
  std::vector<std::size_t> split_, split_eta_;
};

// x_{L,H,w}: the first x at which the cocycle defect of zeta-hat becomes
// visible modulo p^{x+e}; 0 when the defect vanishes.
struct X0Report {
  struct Entry {
    std::size_t L, H, w;
    bool cocycle = true;
    int valuation = 0;
    int level = 0;
  };
  std::vector<Entry> entries;
  int x_max = 0;
  int x0 = 0;
};

inline int defect_level(int valuation, int e) { return std::max(0, valuation + 1 - e); }

inline X0Report compute_x0(const FamilyContext& ctx, const FamilyContext& check) {
  X0Report rep;
  const FiniteGroup& P = ctx.P();
  for (std::size_t li : ctx.eta_split_subgroups())
    for (std::size_t hi : ctx.eta_split_subgroups())
      for (std::size_t w = 0; w < P.size(); ++w) {
        if (!ctx.maps_into(li, hi, w)) continue;
        Cochain a = coboundary(ctx.zeta_hat(li, hi, w));
        Cochain b = coboundary(check.zeta_hat(li, hi, w));
        X0Report::Entry en{li, hi, w, a.is_zero(), a.valuation(), 0};
        if (a.is_zero() != b.is_zero() || (!a.is_zero() && a.valuation() != b.valuation()))
          throw PrecisionUnstable("zeta-hat defect changes with precision; raise the slack");
        if (!en.cocycle) en.level = defect_level(en.valuation, ctx.e());
        rep.x_max = std::max(rep.x_max, en.level);
        rep.entries.push_back(en);
      }
  rep.x0 = rep.x_max + ctx.m();
  return rep;
}

// Builds the comparison context four digits higher and certifies x_0.
inline X0Report compute_x0(const FamilyContext& ctx) {
  FamilyContext check(ctx.data(), ctx.x_max(), ctx.precision() - (ctx.x_max() + 1 + ctx.e() + 2 * ctx.m()) + 4);
  return compute_x0(ctx, check);
}

}  // namespace qcat
