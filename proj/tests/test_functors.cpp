#include <gtest/gtest.h>

#include "qcat/qcat.hpp"
#include "words.hpp"

using namespace qcat;

namespace {

std::size_t find_label(const Category& c, const std::string& label) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.objects[i].label == label) return i;
  throw std::runtime_error("no object " + label);
}

struct Chain {
  std::unique_ptr<FamilyContext> owner;
  const FamilyContext& ctx;
  int x0;
  std::vector<SkeletonGx> levels;  // x0 .. x0 + count - 1
};

Chain chain(const std::string& name, int count) {
  auto owner = std::make_unique<FamilyContext>(builtin_family(name), 8);
  const FamilyContext& ctx = *owner;
  const int x0 = compute_x0(ctx).x0;
  Chain c{std::move(owner), ctx, x0, {}};
  for (int x = x0; x < x0 + count; ++x) c.levels.push_back(skeleton_Gx(c.ctx, x));
  return c;
}

}  // namespace

TEST(FunctorS, KleinFamilies) {
  struct Expect {
    const char* name;
    bool dense, full_inhabited, faithful;
  };
  for (const auto& e : {Expect{"dihedral2", true, true, false}, Expect{"semidihedral2", false, true, false},
                        Expect{"quaternion2", false, true, true}}) {
    auto c = chain(e.name, 1);
    auto S = skeleton_S(c.ctx);
    auto fs = functor_FS(c.ctx, c.levels[0], S, c.x0);
    EXPECT_TRUE(check_functor(fs.F, c.levels[0].cat, S.cat).ok()) << e.name;
    EXPECT_TRUE(fs.residuals_zero);
    auto r = check_equivalence(fs.F, c.levels[0].cat, S.cat);
    EXPECT_EQ(r.essentially_surjective, e.dense) << e.name;
    EXPECT_EQ(r.full_on_inhabited, e.full_inhabited) << e.name;
    EXPECT_EQ(r.faithful, e.faithful) << e.name;
  }
}

TEST(FunctorS, DihedralCollapsesTwoConjugators) {
  auto c = chain("dihedral2", 1);
  auto S = skeleton_S(c.ctx);
  auto fs = functor_FS(c.ctx, c.levels[0], S, c.x0);
  const auto& cat = c.levels[0].cat;
  std::size_t a = find_label(cat, "<a>"), atO = find_label(cat, "<at>xO");
  ASSERT_EQ(cat.hom[a][atO].size(), 2u);
  EXPECT_EQ(fs.F.morphisms[a][atO][0], fs.F.morphisms[a][atO][1]);
  EXPECT_EQ(S.cat.objects[fs.F.objects[atO]].label, "<at>");
}

TEST(FunctorS, RefusesBelowX0) {
  FamilyContext ctx(dihedral2(), 3);
  auto sk = skeleton_Gx(ctx, 1);
  auto S = skeleton_S(ctx);
  EXPECT_THROW(functor_FS(ctx, sk, S, 2), BelowX0);
}

TEST(Lifting, IdentityLiftsToIdentity) {
  auto c = chain("semidihedral2", 2);
  const auto& sk = c.levels[0];
  for (std::size_t a = 0; a < sk.cat.size(); ++a) {
    auto h = lift_morphism(c.ctx, sk, a, a, sk.group().one(), c.x0);
    EXPECT_EQ(h.w, c.ctx.P().identity());
    EXPECT_TRUE(h.residual1_zero && h.residual2_zero);
    EXPECT_EQ(pushout(h, c.levels[1].level), c.levels[1].group().one());
  }
}

TEST(Lifting, RejectsNonMorphisms) {
  auto c = chain("dihedral2", 1);
  const auto& sk = c.levels[0];
  std::size_t a = find_label(sk.cat, "<a>"), ab = find_label(sk.cat, "<ab>");
  EXPECT_THROW(lift_morphism(c.ctx, sk, a, ab, sk.group().one(), c.x0), NotAMorphism);
}

TEST(Pushout, ConjugatorBStaysB) {
  auto c = chain("dihedral2", 4);
  for (std::size_t i = 0; i + 1 < c.levels.size(); ++i) {
    const auto& sk = c.levels[i];
    const auto& nx = c.levels[i + 1];
    std::size_t a = find_label(sk.cat, "<a>"), atO = find_label(sk.cat, "<at>xO");
    ExtElement b = words::parse(c.ctx, sk.group(), "b");
    auto h = lift_morphism(c.ctx, sk, a, atO, b, c.x0);
    ExtElement bh = pushout(h, nx.level);
    std::size_t na = find_label(nx.cat, "<a>");
    EXPECT_EQ(conjugate_elements(nx.group(), nx.cat.objects[na].elements, bh),
              conjugate_elements(nx.group(), nx.cat.objects[na].elements, words::parse(c.ctx, nx.group(), "b")));
  }
}

TEST(Pushout, IndependentOfTheLiftingChoice) {
  // mbar may change by c A_w with c fixed by L; the induced morphism may not.
  for (const auto& name : {"dihedral2", "semidihedral2", "cyclic3"}) {
    FamilyContext ctx(builtin_family(name), 3);
    const int x0 = compute_x0(ctx).x0;
    if (std::string(name) == "cyclic3" && x0 > 1) GTEST_SKIP();
    auto sk = skeleton_Gx(ctx, x0);
    auto nx = skeleton_Gx(ctx, x0 + 1);
    const Ring& big = ctx.T()->ring();
    std::size_t checked = 0;
    for (std::size_t a = 0; a < sk.cat.size(); ++a)
      for (std::size_t b = 0; b < sk.cat.size(); ++b)
        for (const auto& f : sk.cat.hom[a][b]) {
          ExtElement g{f.w, morphism_module_part(f, sk.level.M->ring())};
          auto h = lift_morphism(ctx, sk, a, b, g, x0);
          const auto& L = ctx.subgroup(sk.info[a].key.subgroup).L;
          SubModule fixed = module_centralizer(*ctx.data().action, L, SubModule::whole(big, ctx.data().d()));
          auto target = *nx.find(sk.info[a].key);
          auto base_map = conjugate_elements(nx.group(), nx.cat.objects[target].elements, pushout(h, nx.level));
          std::vector<PModVector> shifts;
          for (const auto& gen : fixed.generators())
            for (Residue k : {1, 2, 3}) shifts.push_back(gen.scaled(k));
          for (const auto& cvec : shifts) {
            Lifting h2 = h;
            h2.mbar = h.mbar + ctx.T()->act(cvec, f.w);
            h2.munder = g.m - h2.mbar.reduced(sk.level.r);
            const auto& dom = ctx.subgroup(sk.info[a].key.subgroup).dom;
            ASSERT_EQ(lambda_w(dom, ctx.T(), h2.mbar, f.w), lambda_w(dom, ctx.T(), h.mbar, f.w));
            EXPECT_EQ(conjugate_elements(nx.group(), nx.cat.objects[target].elements, pushout(h2, nx.level)), base_map)
                << name;
            ++checked;
          }
        }
    EXPECT_GT(checked, 0u);
  }
}

TEST(FunctorF, EquivalenceAcrossLevels) {
  for (const auto& name : {"dihedral2", "semidihedral2", "quaternion2"}) {
    auto c = chain(name, 5);
    for (std::size_t i = 0; i + 1 < c.levels.size(); ++i) {
      auto fb = functor_F(c.ctx, c.levels[i], c.levels[i + 1], c.x0);
      auto fr = check_functor(fb.F, c.levels[i].cat, c.levels[i + 1].cat);
      EXPECT_TRUE(fr.ok()) << name << ": " << fr.failure;
      EXPECT_TRUE(fb.residuals_zero);
      auto e = check_equivalence(fb.F, c.levels[i].cat, c.levels[i + 1].cat);
      EXPECT_TRUE(e.essentially_surjective && e.full && e.faithful) << name << " x=" << c.levels[i].x;
      EXPECT_EQ(c.levels[i].cat.hom_sizes(), c.levels[i + 1].cat.hom_sizes());
    }
  }
}

TEST(FunctorF, CyclicDataPastX0) {
  FamilyContext ctx(cyclic3(), 2);
  const int x0 = compute_x0(ctx).x0;
  ASSERT_EQ(x0, 1);
  auto s1 = skeleton_Gx(ctx, 1), s2 = skeleton_Gx(ctx, 2);
  auto fb = functor_F(ctx, s1, s2, x0);
  EXPECT_TRUE(check_functor(fb.F, s1.cat, s2.cat).ok());
  EXPECT_TRUE(check_equivalence(fb.F, s1.cat, s2.cat).equivalence());
  EXPECT_TRUE(fb.residuals_zero);
}

TEST(FunctorF, RequiresAdjacentLevels) {
  auto c = chain("dihedral2", 3);
  EXPECT_THROW(functor_F(c.ctx, c.levels[0], c.levels[2], c.x0), InvalidData);
}
