#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/qcat.hpp"

using namespace qcat;

// Randomized identities over every corpus family, every elementary abelian
// subgroup and degrees 0..2. Seeds are fixed so failures reproduce.

namespace {

constexpr int kPrecision = 6;
constexpr int kTrials = 1000;

struct Setup {
  ProPData data;
  ModulePtr mod;
  std::vector<DomainPtr> doms;
};

Setup setup(const std::string& name, int precision = kPrecision) {
  Setup s{builtin_family(name), nullptr, {}};
  s.mod = std::make_shared<const Module>(s.data.action, Ring(s.data.P.prime(), precision));
  for (const auto& L : elementary_abelian_subgroups(s.data.P)) s.doms.push_back(std::make_shared<const Domain>(s.data.P, L));
  return s;
}

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"dihedral2", "semidihedral2", "quaternion2", "cyclic3"};
  return names;
}

// Picks a domain and degree uniformly, so every pair is exercised.
struct Draw {
  DomainPtr dom;
  int n;
};

Draw draw(const Setup& s, std::mt19937& rng) {
  return {s.doms[rng() % s.doms.size()], static_cast<int>(rng() % 3)};
}

}  // namespace

TEST(Property, CoboundarySquaresToZero) {
  std::mt19937 rng(101);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    for (int k = 0; k < kTrials; ++k) {
      auto [dom, n] = draw(s, rng);
      Cochain c = oracle::random_cochain(dom, s.mod, n, rng);
      ASSERT_TRUE(coboundary(coboundary(c)).is_zero()) << name << " n=" << n << " trial " << k;
    }
  }
}

TEST(Property, CoboundaryMatchesPointwiseFormula) {
  std::mt19937 rng(102);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    for (int k = 0; k < kTrials / 4; ++k) {
      auto [dom, n] = draw(s, rng);
      Cochain c = oracle::random_cochain(dom, s.mod, n, rng);
      Cochain d = coboundary(c);
      const std::size_t cnt = dom->tuple_count(n + 1);
      if (cnt == 0) continue;
      auto args = dom->normalized_tuple(rng() % cnt, n + 1);
      ASSERT_EQ(d.at(args), oracle::coboundary_at(c, args)) << name << " n=" << n;
    }
  }
}

TEST(Property, ActionCommutesWithCoboundary) {
  std::mt19937 rng(103);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    const FiniteGroup& P = s.data.P;
    for (int k = 0; k < kTrials / 2; ++k) {
      auto [dom, n] = draw(s, rng);
      const std::size_t g = rng() % P.size();
      // P is abelian in the corpus, so every subgroup is normalized.
      Cochain c = oracle::random_cochain(dom, s.mod, n, rng);
      ASSERT_EQ(act(coboundary(c), g), coboundary(act(c, g))) << name;
      ASSERT_EQ(act(act(c, g), P.inv(g)), c);
    }
  }
}

TEST(Property, ReductionCommutesWithCoboundary) {
  std::mt19937 rng(104);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    for (int k = 0; k < kTrials / 2; ++k) {
      auto [dom, n] = draw(s, rng);
      const int r = 1 + static_cast<int>(rng() % kPrecision);
      Cochain c = oracle::random_cochain(dom, s.mod, n, rng);
      ASSERT_EQ(project(coboundary(c), r), coboundary(project(c, r))) << name << " r=" << r;
    }
  }
}

TEST(Property, MultiplicationCommutesWithCoboundary) {
  std::mt19937 rng(105);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    for (int k = 0; k < kTrials / 2; ++k) {
      auto [dom, n] = draw(s, rng);
      Cochain c = oracle::random_cochain(dom, s.mod, n, rng);
      Cochain up = mul(c);
      ASSERT_EQ(mul(coboundary(c)), coboundary(up)) << name;
      ASSERT_EQ(divide_down(up, 1), c);
    }
  }
}

TEST(Property, RestrictionCommutesWithCoboundary) {
  std::mt19937 rng(106);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    const DomainPtr& whole = s.doms.back();
    for (int k = 0; k < kTrials / 4; ++k) {
      const DomainPtr& sub = s.doms[rng() % s.doms.size()];
      const int n = static_cast<int>(rng() % 3);
      Cochain c = oracle::random_cochain(whole, s.mod, n, rng);
      ASSERT_EQ(restrict_to(coboundary(c), sub), coboundary(restrict_to(c, sub))) << name;
    }
  }
}

TEST(Property, DegreeZeroCoboundaryIsMinusLambda) {
  std::mt19937 rng(107);
  for (const auto& name : corpus()) {
    auto s = setup(name);
    for (int k = 0; k < kTrials / 4; ++k) {
      const DomainPtr& dom = s.doms[rng() % s.doms.size()];
      Cochain c = oracle::random_cochain(dom, s.mod, 0, rng);
      Cochain l = lambda(dom, s.mod, c.at(std::vector<std::size_t>{}));
      ASSERT_EQ(coboundary(c) + l, Cochain(dom, s.mod, 1)) << name;
    }
  }
}

TEST(Property, DecomposeRoundTrip) {
  std::mt19937 rng(108);
  for (const auto& name : corpus()) {
    auto s = setup(name, 24);
    const int m = s.data.m();
    for (const auto& dom : s.doms)
      for (int n : {1, 2}) {
        Splitting sp(dom, s.mod, n);
        for (int k = 0; k < 20; ++k) {
          const int r = 2 * m + static_cast<int>(rng() % 5);
          auto lvl = sp.level(r);
          // A random cocycle: a random coboundary plus a random torsion class.
          Cochain gamma = coboundary(oracle::random_cochain(dom, lvl, n - 1, rng));
          std::vector<Residue> coords(sp.K_generators(r).size());
          for (auto& c : coords) c = rng() % (Residue{1} << 20);
          if (!coords.empty()) gamma = gamma + sp.K_element(r, coords);
          auto parts = sp.decompose(gamma);
          ASSERT_EQ(project(parts.lattice_part, r) + parts.torsion_part, gamma) << name << " n=" << n << " r=" << r;
          ASSERT_TRUE(coboundary(parts.lattice_part).is_zero());
          ASSERT_TRUE(sp.K(r).contains(parts.torsion_part.coords()));
        }
      }
  }
}
