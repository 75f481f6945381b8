#pragma once

// Finite categories whose morphisms are injections induced by conjugation.
// A morphism is identified with its induced map: for every element of the
// source (in the source's canonical order) the image element.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/group.hpp"

namespace qcat {

struct Morphism {
  std::vector<std::size_t> map;  // images of the source elements
  std::string witness;           // a conjugating element, rendered
  std::size_t w = 0;             // conjugator: element index, or its P-part
  std::vector<std::int64_t> m;   // module part of the conjugator, signed; empty if none
  friend bool operator<(const Morphism& a, const Morphism& b) { return a.map < b.map; }
};

struct CategoryObject {
  std::string label;
  std::vector<std::size_t> elements;  // sorted keys the morphism maps act on
};

class Category {
 public:
  std::vector<CategoryObject> objects;
  std::vector<std::vector<std::vector<Morphism>>> hom;  // hom[a][b], sorted by map

  std::size_t size() const { return objects.size(); }
  const std::vector<Morphism>& operator()(std::size_t a, std::size_t b) const { return hom[a][b]; }

  void resize(std::size_t n) {
    hom.assign(n, std::vector<std::vector<Morphism>>(n));
  }
  void normalize() {
    for (auto& row : hom)
      for (auto& h : row) std::sort(h.begin(), h.end());
  }
  std::optional<std::size_t> find(std::size_t a, std::size_t b, const std::vector<std::size_t>& map) const {
    const auto& h = hom[a][b];
    auto it = std::lower_bound(h.begin(), h.end(), map,
                               [](const Morphism& m, const std::vector<std::size_t>& v) { return m.map < v; });
    if (it == h.end() || it->map != map) return std::nullopt;
    return static_cast<std::size_t>(it - h.begin());
  }
  // Apply f: a -> b, then g: b -> c.
  std::vector<std::size_t> compose(std::size_t b, const std::vector<std::size_t>& f,
                                   const std::vector<std::size_t>& g) const {
    const auto& eb = objects[b].elements;
    std::vector<std::size_t> out;
    out.reserve(f.size());
    for (std::size_t v : f) {
      auto it = std::lower_bound(eb.begin(), eb.end(), v);
      if (it == eb.end() || *it != v) throw NotAMorphism("map leaves its target object");
      out.push_back(g[static_cast<std::size_t>(it - eb.begin())]);
    }
    return out;
  }
  std::size_t morphism_count() const {
    std::size_t c = 0;
    for (auto& row : hom)
      for (auto& h : row) c += h.size();
    return c;
  }
  std::vector<std::vector<std::size_t>> hom_sizes() const {
    std::vector<std::vector<std::size_t>> s(size(), std::vector<std::size_t>(size()));
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) s[a][b] = hom[a][b].size();
    return s;
  }
  bool isomorphic(std::size_t a, std::size_t b) const {
    return objects[a].elements.size() == objects[b].elements.size() && !hom[a][b].empty();
  }
};

struct AxiomReport {
  bool identities = true;
  bool closed = true;
  bool associative = true;
  std::string failure;
  bool ok() const { return identities && closed && associative; }
};

inline AxiomReport check_axioms(const Category& c) {
  AxiomReport r;
  for (std::size_t a = 0; a < c.size(); ++a)
    if (!c.find(a, a, c.objects[a].elements)) {
      r.identities = false;
      r.failure = "no identity on " + c.objects[a].label;
      return r;
    }
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (const auto& f : c.hom[a][b])
        for (std::size_t d = 0; d < c.size(); ++d)
          for (const auto& g : c.hom[b][d]) {
            auto fg = c.compose(b, f.map, g.map);
            if (!c.find(a, d, fg)) {
              r.closed = false;
              r.failure = "composite " + c.objects[a].label + " -> " + c.objects[d].label + " missing";
              return r;
            }
            for (std::size_t e = 0; e < c.size(); ++e)
              for (const auto& h : c.hom[d][e]) {
                auto left = c.compose(d, fg, h.map);
                auto right = c.compose(b, f.map, c.compose(d, g.map, h.map));
                if (left != right) {
                  r.associative = false;
                  r.failure = "composition not associative";
                  return r;
                }
              }
          }
  return r;
}

// The Quillen category of a finite group by exhaustive conjugation.
template <IndexedGroup G, class Render>
Category category_bruteforce(const G& g, std::size_t cap, Render render) {
  if (g.size() > cap) throw CapExceeded("group order " + std::to_string(g.size()) + " exceeds the cap");
  Category c;
  for (auto& s : elementary_abelian_subgroups(g)) {
    std::string label = "<";
    for (std::size_t i = 0; i < s.elements.size(); ++i) label += (i ? "," : "") + render(s.elements[i]);
    c.objects.push_back({label + ">", s.elements});
  }
  c.resize(c.size());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < c.size(); ++i) index[c.objects[i].elements] = i;
  for (std::size_t a = 0; a < c.size(); ++a) {
    const auto& ea = c.objects[a].elements;
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::vector<std::size_t> img;
      img.reserve(ea.size());
      for (std::size_t v : ea) img.push_back(conjugate_element(g, v, x));
      for (std::size_t b = 0; b < c.size(); ++b) {
        const auto& eb = c.objects[b].elements;
        if (eb.size() < ea.size()) continue;
        bool inside = std::all_of(img.begin(), img.end(),
                                  [&](std::size_t v) { return std::binary_search(eb.begin(), eb.end(), v); });
        if (!inside) continue;
        auto& h = c.hom[a][b];
        if (std::none_of(h.begin(), h.end(), [&](const Morphism& m) { return m.map == img; }))
          h.push_back({img, render(x), x, {}});
      }
    }
  }
  c.normalize();
  return c;
}

// A functor between finite categories of this kind.
struct FunctorData {
  std::vector<std::size_t> objects;
  // morphisms[a][b][k]: index in target hom[objects[a]][objects[b]].
  std::vector<std::vector<std::vector<std::size_t>>> morphisms;
};

struct FunctorReport {
  bool identities = true;
  bool composition = true;
  std::string failure;
  bool ok() const { return identities && composition; }
};

inline FunctorReport check_functor(const FunctorData& F, const Category& src, const Category& dst) {
  FunctorReport r;
  for (std::size_t a = 0; a < src.size(); ++a) {
    auto id = src.find(a, a, src.objects[a].elements);
    std::size_t fa = F.objects[a];
    auto did = dst.find(fa, fa, dst.objects[fa].elements);
    if (!id || !did || F.morphisms[a][a][*id] != *did) {
      r.identities = false;
      r.failure = "identity of " + src.objects[a].label + " not preserved";
      return r;
    }
  }
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      for (std::size_t i = 0; i < src.hom[a][b].size(); ++i)
        for (std::size_t c = 0; c < src.size(); ++c)
          for (std::size_t j = 0; j < src.hom[b][c].size(); ++j) {
            auto comp = src.compose(b, src.hom[a][b][i].map, src.hom[b][c][j].map);
            auto k = src.find(a, c, comp);
            std::size_t fa = F.objects[a], fb = F.objects[b], fc = F.objects[c];
            auto fcomp = dst.compose(fb, dst.hom[fa][fb][F.morphisms[a][b][i]].map,
                                     dst.hom[fb][fc][F.morphisms[b][c][j]].map);
            if (!k || dst.hom[fa][fc][F.morphisms[a][c][*k]].map != fcomp) {
              r.composition = false;
              r.failure = "composition through " + src.objects[b].label + " not preserved";
              return r;
            }
          }
  return r;
}

struct EquivalenceReport {
  bool essentially_surjective = true;
  bool full = true;
  bool faithful = true;
  // Surjective on every Hom set whose source Hom is nonempty.
  bool full_on_inhabited = true;
  std::vector<std::string> witnesses;
  bool equivalence() const { return essentially_surjective && full && faithful; }
};

inline EquivalenceReport check_equivalence(const FunctorData& F, const Category& src, const Category& dst) {
  EquivalenceReport r;
  for (std::size_t b = 0; b < dst.size(); ++b) {
    bool hit = false;
    for (std::size_t a = 0; a < src.size() && !hit; ++a) hit = dst.isomorphic(F.objects[a], b);
    if (!hit) {
      r.essentially_surjective = false;
      r.witnesses.push_back("not dense: " + dst.objects[b].label);
    }
  }
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b) {
      std::size_t fa = F.objects[a], fb = F.objects[b];
      std::vector<std::size_t> images = F.morphisms[a][b];
      std::sort(images.begin(), images.end());
      bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      images.erase(std::unique(images.begin(), images.end()), images.end());
      bool surjective = images.size() == dst.hom[fa][fb].size();
      const std::string pair = src.objects[a].label + " -> " + src.objects[b].label;
      if (!injective) {
        r.faithful = false;
        r.witnesses.push_back("not faithful: " + pair);
      }
      if (!surjective) {
        r.full = false;
        if (!src.hom[a][b].empty()) r.full_on_inhabited = false;
        r.witnesses.push_back("not full: " + pair);
      }
    }
  return r;
}

inline FunctorData identity_functor(const Category& c) {
  FunctorData F;
  for (std::size_t a = 0; a < c.size(); ++a) F.objects.push_back(a);
  F.morphisms.assign(c.size(), std::vector<std::vector<std::size_t>>(c.size()));
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (std::size_t k = 0; k < c.hom[a][b].size(); ++k) F.morphisms[a][b].push_back(k);
  return F;
}

}  // namespace qcat
