#pragma once

// Ext(tau): the set P x M with (g,m)(h,n) = (gh, m^h + n + tau(g,h)), and
// complements to M over subgroups of P.

#include <optional>
#include <vector>

#include "qcat/cochain.hpp"

namespace qcat {

struct ExtElement {
  std::size_t w = 0;
  PModVector m;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

class ExtensionGroup {
 public:
  // tau is a 2-cochain on all of P with finite coefficients.
  explicit ExtensionGroup(Cochain tau) : tau_(std::move(tau)) {
    const FiniteGroup& P = tau_.domain()->group();
    if (tau_.degree() != 2 || tau_.domain()->size() != P.size())
      throw InvalidData("extension cocycle must be a 2-cochain on the whole group");
    const Ring& ring = tau_.ring();
    radix_ = ring.modulus();
    msize_ = 1;
    for (std::size_t i = 0; i < tau_.rank() && indexable_; ++i) {
      if (msize_ > (std::size_t{1} << 40) / radix_) indexable_ = false;
      msize_ *= radix_;
    }
    // (g,0)(h,0)(k,0) associates for all triples iff tau is a cocycle.
    for (std::size_t g = 0; g < P.size(); ++g)
      for (std::size_t h = 0; h < P.size(); ++h)
        for (std::size_t k = 0; k < P.size(); ++k) {
          ExtElement a{g, zero()}, b{h, zero()}, c{k, zero()};
          if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c))))
            throw NotACocycle("associativity fails at (" + P.label(g) + "," + P.label(h) + "," +
                              P.label(k) + ")");
        }
  }

  const FiniteGroup& base() const { return tau_.domain()->group(); }
  const Module& module() const { return *tau_.module(); }
  const Cochain& cocycle() const { return tau_; }
  const Ring& ring() const { return tau_.ring(); }
  // Element indices exist only below 2^40 elements; arithmetic works regardless.
  bool indexable() const { return indexable_; }
  std::size_t module_size() const {
    require_index();
    return msize_;
  }

  PModVector zero() const { return PModVector(ring(), tau_.rank()); }
  ExtElement one() const { return {base().identity(), zero()}; }

  ExtElement multiply(const ExtElement& a, const ExtElement& b) const {
    return {base().mul(a.w, b.w), module().act(a.m, b.w) + b.m + tau_.at(a.w, b.w)};
  }
  // (g,m)^-1 = (g^-1, -m^{g^-1} - tau(g, g^-1))
  ExtElement inverse(const ExtElement& a) const {
    std::size_t wi = base().inv(a.w);
    return {wi, -module().act(a.m, wi) - tau_.at(a.w, wi)};
  }
  // a^g = g^-1 a g
  ExtElement conjugate(const ExtElement& a, const ExtElement& g) const {
    return multiply(multiply(inverse(g), a), g);
  }

  std::size_t encode(const ExtElement& a) const {
    require_index();
    std::size_t idx = 0;
    for (std::size_t k = a.m.dim(); k-- > 0;) idx = idx * radix_ + a.m[k];
    return a.w * msize_ + idx;
  }
  ExtElement decode(std::size_t idx) const {
    require_index();
    ExtElement a{idx / msize_, zero()};
    idx %= msize_;
    for (std::size_t k = 0; k < a.m.dim(); ++k) {
      a.m[k] = idx % radix_;
      idx /= radix_;
    }
    return a;
  }

  // IndexedGroup interface.
  std::size_t size() const { return base().size() * module_size(); }
  std::uint64_t prime() const { return ring().p(); }
  std::size_t identity() const { return encode(one()); }
  std::size_t mul(std::size_t a, std::size_t b) const { return encode(multiply(decode(a), decode(b))); }
  std::size_t inv(std::size_t a) const { return encode(inverse(decode(a))); }

 private:
  void require_index() const {
    if (!indexable_) throw CapExceeded("module too large to index");
  }

  Cochain tau_;
  std::uint64_t radix_ = 1;
  std::size_t msize_ = 1;
  bool indexable_ = true;
};

// Complements to M over L in Ext(tau): a base section l -> (l, m_l) and the
// cocycle group Z^1(L, M) parametrizing the others as C(delta).
struct ComplementFamily {
  Cochain base;            // m_l, with D_1(base) = -res_L(tau)
  KernelBasis cocycles;    // generators of Z^1(L, M)
  int log_count() const { return cocycles.log_order(); }
};

inline ComplementFamily complements_of(const ExtensionGroup& ext, const DomainPtr& L) {
  Cochain tauL = restrict_to(ext.cocycle(), L);
  ModulePtr mod = ext.cocycle().module();
  PModMatrix d1 = coboundary_matrix(*L, *mod, 1);
  DiagonalForm f = smith_normal_form(d1);
  auto sol = solve_mod(f, -tauL.coords());
  if (!sol) throw NoComplement("restriction of the extension cocycle is not a coboundary");
  return {Cochain(L, mod, 1, *sol), kernel_basis(f, d1.cols())};
}

// Elements of C(delta) = {(l, m_l + delta(l))}, encoded and sorted.
inline Subgroup complement_elements(const ExtensionGroup& ext, const Cochain& section) {
  Subgroup s;
  for (std::size_t i = 0; i < section.domain()->size(); ++i) {
    std::size_t l = section.domain()->element(i);
    s.elements.push_back(ext.encode({l, section.at(l)}));
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

}  // namespace qcat
