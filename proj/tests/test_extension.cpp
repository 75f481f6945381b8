#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/qcat.hpp"
#include "words.hpp"

using namespace qcat;

namespace {

std::size_t order_of(const ExtensionGroup& G, std::size_t g) {
  std::size_t k = 1;
  for (std::size_t y = g; y != G.identity(); y = G.mul(y, g)) ++k;
  return k;
}

}  // namespace

TEST(ExtensionGroup, ZeroCocycleIsSemidirect) {
  ProPData d = dihedral2();
  auto mod = std::make_shared<const Module>(d.action, Ring(2, 3));
  ExtensionGroup G(Cochain(Domain::whole(d.P), mod, 2));
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) EXPECT_EQ(G.multiply({g, G.zero()}, {h, G.zero()}), (ExtElement{d.P.mul(g, h), G.zero()}));
}

TEST(ExtensionGroup, DihedralRelations) {
  FamilyContext ctx(dihedral2(), 0);
  auto lv = ctx.level(0);
  const ExtensionGroup& G = *lv.G;
  EXPECT_EQ(G.size(), 16u);
  auto a = words::parse(ctx, G, "a"), b = words::parse(ctx, G, "b"), t = words::parse(ctx, G, "t");
  EXPECT_EQ(G.multiply(a, a), G.one());
  EXPECT_EQ(G.multiply(b, b), t);
  EXPECT_EQ(G.conjugate(b, a), words::parse(ctx, G, "bt^-1"));
  EXPECT_EQ(G.conjugate(t, a), G.inverse(t));
  EXPECT_EQ(G.conjugate(t, b), t);
  EXPECT_EQ(order_of(G, G.encode(t)), 4u);
}

TEST(ExtensionGroup, QuaternionHasUniqueInvolution) {
  FamilyContext ctx(quaternion2(), 0);
  auto lv = ctx.level(0);
  std::size_t involutions = 0;
  for (std::size_t g = 0; g < lv.G->size(); ++g) involutions += order_of(*lv.G, g) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(ExtensionGroup, SemidihedralInvolutionCount) {
  // Semidihedral of order 2^n has 2^{n-2} + 1 involutions.
  FamilyContext ctx(semidihedral2(), 2);
  for (int x = 0; x <= 2; ++x) {
    auto lv = ctx.level(x);
    std::size_t involutions = 0;
    for (std::size_t g = 0; g < lv.G->size(); ++g) involutions += order_of(*lv.G, g) == 2;
    EXPECT_EQ(involutions, lv.G->size() / 4 + 1) << "x=" << x;
  }
}

TEST(ExtensionGroup, EncodeDecodeRoundTrip) {
  FamilyContext ctx(cyclic3(), 0);
  auto lv = ctx.level(0);
  for (std::size_t i = 0; i < lv.G->size(); i += 7) EXPECT_EQ(lv.G->encode(lv.G->decode(i)), i);
}

TEST(ExtensionGroup, IndexCapIsLazy) {
  ProPData d = cyclic3();
  auto mod = std::make_shared<const Module>(d.action, Ring(3, 30));
  ExtensionGroup G(Cochain(Domain::whole(d.P), mod, 2));
  EXPECT_FALSE(G.indexable());
  auto u = G.multiply({1, G.zero()}, {2, G.zero()});
  EXPECT_EQ(u.w, d.P.mul(1, 2));
  EXPECT_THROW(G.size(), CapExceeded);
  EXPECT_THROW(G.encode(u), CapExceeded);
}

TEST(ExtensionGroup, AssociativeExactlyForCocycles) {
  std::mt19937 rng(17);
  for (const auto& name : {"dihedral2", "quaternion2", "cyclic3"}) {
    FamilyContext ctx(builtin_family(name), 0);
    Cochain tau = project(ctx.rho(), 2);
    EXPECT_NO_THROW(ExtensionGroup{tau});
    for (int trial = 0; trial < 30; ++trial) {
      PModVector v = tau.coords();
      std::size_t i = rng() % v.dim();
      v[i] = v.ring().add(v[i], 1 + rng() % (v.ring().modulus() - 1));
      Cochain bad(tau.domain(), tau.module(), 2, v);
      const bool cocycle = coboundary(bad).is_zero();
      if (cocycle)
        EXPECT_NO_THROW(ExtensionGroup{bad});
      else
        EXPECT_THROW(ExtensionGroup{bad}, NotACocycle);
    }
  }
}

TEST(Complements, TrivialSubgroup) {
  FamilyContext ctx(dihedral2(), 0);
  auto lv = ctx.level(0);
  auto fam = complements_of(*lv.G, ctx.subgroup(0).dom);
  EXPECT_EQ(fam.log_count(), 0);
  EXPECT_EQ(complement_elements(*lv.G, fam.base).elements, (std::vector<std::size_t>{lv.G->identity()}));
}

TEST(Complements, DihedralInvolutionHasTwoClasses) {
  FamilyContext ctx(dihedral2(), 0);
  auto lv = ctx.level(0);
  const auto& L = ctx.subgroup(1);
  ASSERT_EQ(L.L.elements, (std::vector<std::size_t>{0, 1}));
  auto brute = oracle::complements_bruteforce(*lv.G, L.L.elements);
  EXPECT_EQ(oracle::complement_classes(*lv.G, L.L.elements, brute), 2u);
  auto fam = complements_of(*lv.G, L.dom);
  Subgroup base = complement_elements(*lv.G, fam.base);
  EXPECT_EQ(base.size(), 2u);
  // <a> and <at> represent the two classes.
  std::vector<std::vector<PModVector>> reps{{words::parse(ctx, *lv.G, "a").m}, {words::parse(ctx, *lv.G, "at").m}};
  EXPECT_EQ(oracle::complement_classes(*lv.G, L.L.elements, reps), 2u);
}

TEST(Complements, QuaternionInvolutionDoesNotSplit) {
  FamilyContext ctx(quaternion2(), 0);
  auto lv = ctx.level(0);
  EXPECT_THROW(complements_of(*lv.G, ctx.subgroup(1).dom), NoComplement);
}

TEST(Complements, CountsAgainstBruteForce) {
  for (const auto& name : {"dihedral2", "semidihedral2", "quaternion2"}) {
    FamilyContext ctx(builtin_family(name), 1);
    for (int x = 0; x <= 1; ++x) {
      auto lv = ctx.level(x);
      for (const auto& sd : ctx.subgroups()) {
        auto brute = oracle::complements_bruteforce(*lv.G, sd.L.elements);
        std::size_t count = 0, classes = 0;
        try {
          auto fam = complements_of(*lv.G, sd.dom);
          count = std::size_t{1} << fam.log_count();
          classes = std::size_t{1} << cohomology(sd.dom, lv.M, 1, false).log_order();
          for (const auto& z : fam.cocycles.generators) {
            Cochain section = fam.base + Cochain(sd.dom, lv.M, 1, z);
            Subgroup s = complement_elements(*lv.G, section);
            for (std::size_t u : s.elements)
              for (std::size_t v : s.elements) EXPECT_TRUE(s.contains(lv.G->mul(u, v)));
          }
        } catch (const NoComplement&) {
        }
        EXPECT_EQ(brute.size(), count) << name << " x=" << x << " |L|=" << sd.L.size();
        EXPECT_EQ(oracle::complement_classes(*lv.G, sd.L.elements, brute), classes) << name << " x=" << x;
      }
    }
  }
}
