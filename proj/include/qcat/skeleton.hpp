#pragma once

// Semi-skeletons of the Quillen categories of S = Ext(rho) and of G_x, the
// lifting of G_x-morphisms to S, pushouts into G_{x+1}, and the functors
// F_S and F between these skeletons.
//
// S-objects C_L(gamma) are infinite; a morphism C_L(gamma) -> C_H(sigma) is
// determined by l -> l^w on L, so S-side maps act on P-indices. G_x-side maps
// act on encoded elements of G_x.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/family.hpp"

namespace qcat {

// Ordering used to pick readable conjugators: small signed entries first,
// positive before negative on ties.
inline std::vector<std::int64_t> display_key(const PModVector& v) {
  std::vector<std::int64_t> key{0};
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::int64_t s = v.ring().signed_value(v[i]);
    key[0] += s < 0 ? -s : s;
    key.push_back(s < 0 ? -s : s);
    key.push_back(s < 0 ? 1 : 0);
  }
  return key;
}

// m with lambda^w_m = R, i.e. u (A_l - I) = R(l) for all l and m = u A_w.
// Kernel elements of order below p^N only reflect the truncation, so the
// solution is taken minimal over them; free kernel directions stay zero.
inline std::optional<PModVector> solve_lambda(const Cochain& R, std::size_t w) {
  PModMatrix d0 = coboundary_matrix(*R.domain(), *R.module(), 0);
  DiagonalForm f = smith_normal_form(d0);
  auto u = solve_mod(f, -R.coords());
  if (!u) return std::nullopt;
  const Ring& ring = R.ring();
  KernelBasis kb = kernel_basis(f, d0.cols());
  std::vector<PModVector> cands{*u};
  for (std::size_t j = 0; j < kb.generators.size(); ++j) {
    if (kb.order_exponents[j] >= ring.precision()) continue;
    std::uint64_t order = 1;
    for (int k = 0; k < kb.order_exponents[j]; ++k) order *= ring.p();
    std::vector<PModVector> next;
    for (const auto& c : cands) {
      PModVector cur = c;
      for (std::uint64_t k = 0; k < order; ++k, cur = cur + kb.generators[j]) next.push_back(cur);
    }
    cands = std::move(next);
  }
  std::optional<PModVector> best;
  for (const auto& c : cands) {
    PModVector m = R.module()->act(c, w);
    if (!best || display_key(m) < display_key(*best)) best = m;
  }
  return best;
}

inline std::vector<std::int64_t> display_key(const std::vector<std::int64_t>& entries) {
  std::vector<std::int64_t> key{0};
  for (std::int64_t s : entries) {
    key[0] += s < 0 ? -s : s;
    key.push_back(s < 0 ? -s : s);
    key.push_back(s < 0 ? 1 : 0);
  }
  return key;
}

// Keeps, per induced map, one conjugator: P-parts acting trivially on T
// first, then the smallest module part, then the smallest P-index.
inline void offer_morphism(std::vector<Morphism>& hom, Morphism f, const PModuleAction& action) {
  auto key = [&](const Morphism& g) {
    const auto& a = action.integer_matrix(g.w);
    bool trivial = true;
    for (std::size_t i = 0; i < action.rank(); ++i)
      for (std::size_t j = 0; j < action.rank(); ++j) trivial = trivial && a[i * action.rank() + j] == (i == j ? 1 : 0);
    return std::make_tuple(!trivial, display_key(g.m), g.w);
  };
  for (auto& g : hom)
    if (g.map == f.map) {
      if (key(f) < key(g)) g = std::move(f);
      return;
    }
  hom.push_back(std::move(f));
}

// lambda^w_m = lambda_{m^{w^-1}}
inline Cochain lambda_w(const DomainPtr& dom, const ModulePtr& mod, const PModVector& m, std::size_t w) {
  return lambda(dom, mod, mod->act(m, dom->group().inv(w)));
}

inline std::vector<std::int64_t> signed_entries(const PModVector& v) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v.ring().signed_value(v[i]));
  return out;
}

inline std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) s += (i ? "," : "") + words[i];
  return s;
}

// ---------------------------------------------------------------- S side

struct SObject {
  std::size_t subgroup;  // index into FamilyContext::subgroups
  std::size_t t1;        // index into the transversal T^1(L, T)
  Cochain gamma_bar;
};

struct SkeletonS {
  Category cat;
  std::vector<SObject> info;

  std::optional<std::size_t> find(std::size_t subgroup, std::size_t t1) const {
    for (std::size_t i = 0; i < info.size(); ++i)
      if (info[i].subgroup == subgroup && info[i].t1 == t1) return i;
    return std::nullopt;
  }
};

inline SkeletonS skeleton_S(const FamilyContext& ctx) {
  const FiniteGroup& P = ctx.P();
  SkeletonS sk;
  for (std::size_t li : ctx.split_subgroups()) {
    const SubgroupData& sd = ctx.subgroup(li);
    for (std::size_t k = 0; k < sd.transversal.size(); ++k) {
      const Cochain& g = sd.transversal[k];
      std::vector<std::string> words;
      for (std::size_t l : sd.generators) words.push_back(ctx.element_word(l, sd.t->at(l) + g.at(l)));
      std::string label = "<" + (words.empty() ? std::string("1") : join_words(words)) + ">";
      sk.cat.objects.push_back({label, sd.L.elements});
      sk.info.push_back({li, k, g});
    }
  }
  sk.cat.resize(sk.cat.size());
  ExtensionGroup S(ctx.rho());
  for (std::size_t a = 0; a < sk.cat.size(); ++a)
    for (std::size_t b = 0; b < sk.cat.size(); ++b) {
      const SObject& A = sk.info[a];
      const SObject& B = sk.info[b];
      const SubgroupData& sl = ctx.subgroup(A.subgroup);
      const SubgroupData& sh = ctx.subgroup(B.subgroup);
      auto& hom = sk.cat.hom[a][b];
      for (std::size_t w = 0; w < P.size(); ++w) {
        if (!ctx.maps_into(A.subgroup, B.subgroup, w)) continue;
        Cochain R = ctx.zeta_hat(A.subgroup, B.subgroup, w) - act(B.gamma_bar, w, sl.dom) + A.gamma_bar;
        auto m = solve_lambda(R, w);
        if (!m) continue;
        std::vector<std::size_t> map;
        for (std::size_t l : sl.L.elements) map.push_back(P.conj(l, w));
        // Direct check in Ext(rho) at the working precision.
        ExtElement g{w, *m};
        for (std::size_t l : sl.dom->nonidentity()) {
          std::size_t k = P.conj(l, w);
          ExtElement img = S.conjugate({l, sl.t->at(l) + A.gamma_bar.at(l)}, g);
          if (!(img == ExtElement{k, sh.t->at(k) + B.gamma_bar.at(k)}))
            throw NotAMorphism("S-side criterion disagrees with conjugation");
        }
        offer_morphism(hom, {map, ctx.element_word(w, *m), w, signed_entries(*m)}, *ctx.data().action);
      }
    }
  sk.cat.normalize();
  return sk;
}

// ---------------------------------------------------------------- G_x side

struct GxKey {
  std::size_t subgroup = 0;
  std::size_t t1 = 0;
  std::vector<Residue> k;  // K^1 coordinates, the same at every level
  std::size_t o = 0;       // index into O_x(L)
  friend auto operator<=>(const GxKey&, const GxKey&) = default;
};

struct GxObject {
  GxKey key;
  Cochain gamma_bar;  // T^1 representative over T
  Cochain kappa;      // K^1 part at level r
  Cochain gamma;      // pro_x(gamma_bar) + kappa
  std::vector<PModVector> O;  // sorted elements of O in M_x
};

struct SkeletonGx {
  int x = 0;
  FamilyLevel level;
  Category cat;
  std::vector<GxObject> info;

  std::optional<std::size_t> find(const GxKey& key) const {
    for (std::size_t i = 0; i < info.size(); ++i)
      if (info[i].key == key) return i;
    return std::nullopt;
  }
  const ExtensionGroup& group() const { return *level.G; }
};

inline std::string o_label(std::size_t oi, std::size_t count) {
  if (oi == 0) return "";
  return count == 2 ? "O" : "O" + std::to_string(oi);
}

// Elements of M_x ordered by size of the signed entries, positive first on ties.
inline std::vector<PModVector> display_order(const Ring& ring, std::size_t d, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > cap / ring.modulus()) throw CapExceeded("module too large to enumerate");
    total *= ring.modulus();
  }
  std::vector<std::pair<std::vector<std::int64_t>, PModVector>> all;
  for (std::size_t code = 0; code < total; ++code) {
    PModVector v(ring, d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = c % ring.modulus();
      c /= ring.modulus();
    }
    std::vector<std::int64_t> key = display_key(v);
    all.emplace_back(std::move(key), v);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PModVector> out;
  for (auto& [k, v] : all) out.push_back(v);
  return out;
}

// Representatives of M_x modulo C_{M_x}(L) A_w, in display order.
inline std::vector<PModVector> centralizer_coset_reps(const FamilyContext& ctx, const ModulePtr& M,
                                                      const Subgroup& L, std::size_t w,
                                                      const std::vector<PModVector>& order) {
  const Ring& ring = M->ring();
  SubModule C = module_centralizer(*ctx.data().action, L, SubModule::whole(ring, M->rank()));
  std::vector<PModVector> cw;
  for (const auto& c : C.elements()) cw.push_back(M->act(c, w));
  std::set<PModVector> covered;
  std::vector<PModVector> reps;
  for (const auto& m : order) {
    if (covered.count(m)) continue;
    reps.push_back(m);
    for (const auto& c : cw) covered.insert(m + c);
  }
  return reps;
}

inline std::vector<std::size_t> conjugate_elements(const ExtensionGroup& G, const std::vector<std::size_t>& elems,
                                                   const ExtElement& g) {
  std::vector<std::size_t> out;
  out.reserve(elems.size());
  for (std::size_t e : elems) out.push_back(G.encode(G.conjugate(G.decode(e), g)));
  return out;
}

inline bool contains_all(const std::vector<std::size_t>& sorted, const std::vector<std::size_t>& v) {
  return std::all_of(v.begin(), v.end(), [&](std::size_t e) { return std::binary_search(sorted.begin(), sorted.end(), e); });
}

inline SkeletonGx skeleton_Gx(const FamilyContext& ctx, int x, std::size_t cap = 1u << 16) {
  const FiniteGroup& P = ctx.P();
  SkeletonGx sk;
  sk.x = x;
  sk.level = ctx.level(x);
  const FamilyLevel& lv = sk.level;
  const ExtensionGroup& G = *lv.G;
  const Ring& ring = lv.M->ring();
  if (G.size() > cap) throw CapExceeded("G_x has order " + std::to_string(G.size()));

  for (std::size_t li : ctx.eta_split_subgroups()) {
    const SubgroupData& sd = ctx.subgroup(li);
    const Cochain& tx = lv.t_x.at(li);
    for (std::size_t t1 = 0; t1 < sd.transversal.size(); ++t1)
      for (const auto& kc : sd.split1->K_coordinates())
        for (std::size_t oi = 0; oi < sd.fixed_subspaces.size(); ++oi) {
          Cochain kappa = sd.split1->K_element(lv.r, kc);
          Cochain gamma = project(sd.transversal[t1], lv.r) + kappa;
          std::vector<PModVector> O;
          for (std::uint64_t code : sd.fixed_subspaces[oi]) O.push_back(ctx.embed_fp(code, ring));
          std::sort(O.begin(), O.end());
          std::vector<std::size_t> elems;
          for (std::size_t l : sd.L.elements)
            for (const auto& o : O) elems.push_back(G.encode({l, tx.at(l) + gamma.at(l) + o}));
          std::sort(elems.begin(), elems.end());
          std::vector<std::string> words;
          for (std::size_t l : sd.generators) words.push_back(ctx.element_word(l, tx.at(l) + gamma.at(l)));
          std::string ol = o_label(oi, sd.fixed_subspaces.size());
          std::string label;
          if (words.empty())
            label = ol.empty() ? "<1>" : ol;
          else
            label = "<" + join_words(words) + ">" + (ol.empty() ? "" : "x" + ol);
          sk.cat.objects.push_back({label, std::move(elems)});
          sk.info.push_back({{li, t1, kc, oi}, sd.transversal[t1], kappa, gamma, std::move(O)});
        }
  }
  sk.cat.resize(sk.cat.size());

  const auto order = display_order(ring, lv.M->rank(), cap);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PModVector>> reps_cache;
  for (std::size_t a = 0; a < sk.cat.size(); ++a)
    for (std::size_t b = 0; b < sk.cat.size(); ++b) {
      const GxObject& A = sk.info[a];
      const GxObject& B = sk.info[b];
      const std::size_t li = A.key.subgroup, hi = B.key.subgroup;
      const SubgroupData& sl = ctx.subgroup(li);
      auto& hom = sk.cat.hom[a][b];
      for (std::size_t w = 0; w < P.size(); ++w) {
        if (!ctx.maps_into(li, hi, w)) continue;
        bool o_inside = std::all_of(A.O.begin(), A.O.end(), [&](const PModVector& o) {
          return std::binary_search(B.O.begin(), B.O.end(), lv.M->act(o, w));
        });
        if (!o_inside) continue;
        Cochain base = ctx.zeta_hat_with(lv.t_x.at(li), lv.t_x.at(hi), lv.nu, li, w) -
                       act(B.gamma, w, sl.dom) + A.gamma;
        auto key = std::make_pair(li, w);
        if (!reps_cache.count(key)) reps_cache[key] = centralizer_coset_reps(ctx, lv.M, sl.L, w, order);
        for (const auto& m : reps_cache[key]) {
          Cochain delta = base - lambda_w(sl.dom, lv.M, m, w);
          if (!coboundary(delta).is_zero()) continue;
          bool in_u = true;
          for (std::size_t l : sl.dom->nonidentity())
            in_u = in_u && std::binary_search(B.O.begin(), B.O.end(), lv.M->act(delta.at(l), w));
          if (!in_u) continue;
          ExtElement g{w, m};
          auto map = conjugate_elements(G, sk.cat.objects[a].elements, g);
          if (!contains_all(sk.cat.objects[b].elements, map))
            throw NotAMorphism("G_x-side criterion disagrees with conjugation");
          offer_morphism(hom, {map, ctx.element_word(w, m), w, signed_entries(m)}, *ctx.data().action);
        }
      }
    }
  sk.cat.normalize();
  return sk;
}

// ---------------------------------------------------------------- lifting

struct Lifting {
  std::size_t w = 0;
  PModVector mbar;    // over T: zeta_hat - gamma_bar_B^w + gamma_bar_A = lambda^w_{mbar}
  PModVector munder;  // in M_x: m = pro_x(mbar) + munder
  bool residual1_zero = false;
  bool residual2_zero = false;
};

inline Lifting lift_morphism(const FamilyContext& ctx, const SkeletonGx& sk, std::size_t a, std::size_t b,
                             const ExtElement& g, int x0) {
  if (sk.x < x0)
    throw BelowX0("level " + std::to_string(sk.x) + " is below x_0 = " + std::to_string(x0));
  const FamilyLevel& lv = sk.level;
  const GxObject& A = sk.info[a];
  const GxObject& B = sk.info[b];
  const std::size_t li = A.key.subgroup, hi = B.key.subgroup;
  const SubgroupData& sl = ctx.subgroup(li);
  if (!ctx.maps_into(li, hi, g.w) ||
      !contains_all(sk.cat.objects[b].elements, conjugate_elements(*lv.G, sk.cat.objects[a].elements, g)))
    throw NotAMorphism("conjugator does not map " + sk.cat.objects[a].label + " into " + sk.cat.objects[b].label);

  Cochain zhat = ctx.zeta_hat(li, hi, g.w);
  Cochain R = zhat - act(B.gamma_bar, g.w, sl.dom) + A.gamma_bar;
  auto mbar = solve_lambda(R, g.w);
  if (!mbar) throw NotAMorphism("no lift over the lattice");
  Lifting out;
  out.w = g.w;
  out.mbar = *mbar;
  out.residual1_zero = (R - lambda_w(sl.dom, ctx.T(), *mbar, g.w)).is_zero();
  out.munder = g.m - mbar->reduced(lv.r);

  // Finite part: phi - kappa_B^w + kappa_A - delta = lambda^w_{munder}.
  Cochain zx = ctx.zeta_hat_with(lv.t_x.at(li), lv.t_x.at(hi), lv.nu, li, g.w);
  Cochain phi = zx - project(zhat, lv.r);
  Cochain delta = zx - lambda_w(sl.dom, lv.M, g.m, g.w) - act(B.gamma, g.w, sl.dom) + A.gamma;
  Cochain lhs = phi - act(B.kappa, g.w, sl.dom) + A.kappa - delta;
  out.residual2_zero = (lhs - lambda_w(sl.dom, lv.M, out.munder, g.w)).is_zero();
  return out;
}

// g-hat = (w, pro_{x+1}(mbar) + mul(munder)) in G_{x+1}.
inline ExtElement pushout(const Lifting& h, const FamilyLevel& next) {
  const Ring& ring = next.M->ring();
  PModVector up = h.munder.lifted(ring.precision()).scaled(ring.reduce(static_cast<std::int64_t>(ring.p())));
  return {h.w, h.mbar.reduced(ring.precision()) + up};
}

inline PModVector morphism_module_part(const Morphism& f, const Ring& ring) {
  return PModVector::from_integers(ring, f.m);
}

// ---------------------------------------------------------------- functors

struct FunctorBuild {
  FunctorData F;
  std::size_t lifts = 0;
  bool residuals_zero = true;  // both lifting residuals vanish for every lifted morphism
};

inline FunctorBuild functor_FS(const FamilyContext& ctx, const SkeletonGx& src, const SkeletonS& dst, int x0) {
  FunctorBuild out;
  FunctorData& F = out.F;
  const FiniteGroup& P = ctx.P();
  for (const auto& o : src.info) {
    auto idx = dst.find(o.key.subgroup, o.key.t1);
    if (!idx) throw NotMapped("no S-object for " + std::to_string(o.key.subgroup));
    F.objects.push_back(*idx);
  }
  const std::size_t n = src.cat.size();
  F.morphisms.assign(n, std::vector<std::vector<std::size_t>>(n));
  const Ring& ring = src.level.M->ring();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& f : src.cat.hom[a][b]) {
        ExtElement g{f.w, morphism_module_part(f, ring)};
        Lifting h = lift_morphism(ctx, src, a, b, g, x0);
        ++out.lifts;
        out.residuals_zero = out.residuals_zero && h.residual1_zero && h.residual2_zero;
        std::vector<std::size_t> map;
        for (std::size_t l : dst.cat.objects[F.objects[a]].elements) map.push_back(P.conj(l, h.w));
        auto k = dst.cat.find(F.objects[a], F.objects[b], map);
        if (!k) throw NotAMorphism("lifting does not induce an S-morphism");
        F.morphisms[a][b].push_back(*k);
      }
  return out;
}

inline FunctorBuild functor_F(const FamilyContext& ctx, const SkeletonGx& src, const SkeletonGx& dst, int x0) {
  if (dst.x != src.x + 1) throw InvalidData("F goes from level x to level x+1");
  FunctorBuild out;
  FunctorData& F = out.F;
  for (const auto& o : src.info) {
    auto idx = dst.find(o.key);
    if (!idx) throw NotMapped("object key missing at the next level");
    F.objects.push_back(*idx);
  }
  const std::size_t n = src.cat.size();
  F.morphisms.assign(n, std::vector<std::vector<std::size_t>>(n));
  const Ring& ring = src.level.M->ring();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& f : src.cat.hom[a][b]) {
        ExtElement g{f.w, morphism_module_part(f, ring)};
        Lifting h = lift_morphism(ctx, src, a, b, g, x0);
        ++out.lifts;
        out.residuals_zero = out.residuals_zero && h.residual1_zero && h.residual2_zero;
        ExtElement gh = pushout(h, dst.level);
        auto map = conjugate_elements(dst.group(), dst.cat.objects[F.objects[a]].elements, gh);
        auto k = dst.cat.find(F.objects[a], F.objects[b], map);
        if (!k) throw NotAMorphism("pushout does not induce a morphism at the next level");
        F.morphisms[a][b].push_back(*k);
      }
  return out;
}

// ---------------------------------------------------------------- oracle

struct OracleReport {
  std::size_t skeleton_objects = 0, brute_objects = 0;
  std::size_t skeleton_classes = 0, brute_classes = 0;
  bool objects_found = true;  // every skeleton object is a subgroup of the brute-force list
  bool homs_equal = true;     // Hom sets agree as sets of maps
  bool dense = true;          // every brute-force object is isomorphic to a skeleton object
  bool classes_biject = true;
  bool composition = true;    // the inclusion functor respects composition
  std::vector<std::size_t> embedding;       // skeleton object -> brute-force object
  std::vector<std::string> conjugacy_witnesses;  // per brute-force object
  std::string first_mismatch;
  bool ok() const { return objects_found && homs_equal && dense && classes_biject && composition; }
};

inline std::vector<std::size_t> iso_classes(const Category& c) {
  std::vector<std::size_t> cls(c.size(), c.size());
  std::size_t next = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (cls[a] != c.size()) continue;
    cls[a] = next;
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (cls[b] == c.size() && c.isomorphic(a, b)) cls[b] = next;
    ++next;
  }
  return cls;
}

inline OracleReport compare_with_bruteforce(const Category& skel, const Category& brute) {
  OracleReport r;
  r.skeleton_objects = skel.size();
  r.brute_objects = brute.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < brute.size(); ++i) index[brute.objects[i].elements] = i;
  for (std::size_t i = 0; i < skel.size(); ++i) {
    auto it = index.find(skel.objects[i].elements);
    if (it == index.end()) {
      r.objects_found = false;
      if (r.first_mismatch.empty()) r.first_mismatch = "object " + skel.objects[i].label + " is not elementary abelian";
      return r;
    }
    r.embedding.push_back(it->second);
  }
  for (std::size_t a = 0; a < skel.size(); ++a)
    for (std::size_t b = 0; b < skel.size(); ++b) {
      const auto& s = skel.hom[a][b];
      const auto& t = brute.hom[r.embedding[a]][r.embedding[b]];
      bool same = s.size() == t.size();
      for (std::size_t k = 0; same && k < s.size(); ++k) same = s[k].map == t[k].map;
      if (!same) {
        r.homs_equal = false;
        if (r.first_mismatch.empty())
          r.first_mismatch = "Hom(" + skel.objects[a].label + ", " + skel.objects[b].label + "): " +
                             std::to_string(s.size()) + " vs " + std::to_string(t.size());
      }
    }
  auto bc = iso_classes(brute);
  auto sc = iso_classes(skel);
  r.brute_classes = bc.empty() ? 0 : *std::max_element(bc.begin(), bc.end()) + 1;
  r.skeleton_classes = sc.empty() ? 0 : *std::max_element(sc.begin(), sc.end()) + 1;
  std::set<std::size_t> hit;
  for (std::size_t e : r.embedding) hit.insert(bc[e]);
  r.classes_biject = hit.size() == r.brute_classes && r.skeleton_classes == r.brute_classes;
  for (std::size_t j = 0; j < brute.size(); ++j) {
    std::string wit;
    for (std::size_t i = 0; i < skel.size() && wit.empty(); ++i) {
      std::size_t e = r.embedding[i];
      if (brute.isomorphic(j, e)) wit = brute.hom[j][e].front().witness + " : " + brute.objects[j].label + " -> " + skel.objects[i].label;
    }
    if (wit.empty()) {
      r.dense = false;
      if (r.first_mismatch.empty()) r.first_mismatch = "no skeleton object conjugate to " + brute.objects[j].label;
    }
    r.conjugacy_witnesses.push_back(wit);
  }
  if (r.homs_equal) {
    FunctorData inc;
    inc.objects = r.embedding;
    inc.morphisms.assign(skel.size(), std::vector<std::vector<std::size_t>>(skel.size()));
    for (std::size_t a = 0; a < skel.size(); ++a)
      for (std::size_t b = 0; b < skel.size(); ++b)
        for (std::size_t k = 0; k < skel.hom[a][b].size(); ++k) inc.morphisms[a][b].push_back(k);
    r.composition = check_functor(inc, skel, brute).ok();
  }
  return r;
}

// Brute-force category of G_x with elements rendered as words.
inline Category bruteforce_Gx(const FamilyContext& ctx, const SkeletonGx& sk, std::size_t cap) {
  const ExtensionGroup& G = sk.group();
  return category_bruteforce(G, cap, [&](std::size_t e) {
    ExtElement el = G.decode(e);
    return ctx.element_word(el.w, el.m);
  });
}

}  // namespace qcat
