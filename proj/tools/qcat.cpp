// qcat: skeletons, oracle comparison, equivalence checks, cohomology and x_0
// for coclass families. Exit codes: 0 ok, 1 mathematical mismatch, 2 usage or
// data error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcat/qcat.hpp"

namespace {

using namespace qcat;

struct Options {
  std::string family = "dihedral2";
  std::string data;
  int x = 0;
  int y = -1;
  int n = 1;
  int r = -1;
  int slack = 8;
  std::string format = "table";
  std::size_t cap = 1u << 12;
  bool pro_p = false;
  bool trivial_rows = false;
};

ProPData load(const Options& o) { return o.data.empty() ? builtin_family(o.family) : load_propdata(o.data); }

void emit(const Category& c, const Options& o, const std::string& name, json extra = json::object()) {
  if (o.format == "json") {
    json j = category_to_json(c);
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << category_to_dot(c, name);
  } else {
    std::cout << category_table(c, o.trivial_rows);
  }
}

int cmd_skeleton(const Options& o) {
  FamilyContext ctx(load(o), o.x, o.slack);
  if (o.pro_p) {
    auto S = skeleton_S(ctx);
    emit(S.cat, o, ctx.data().name + "_S", {{"family", ctx.data().name}, {"side", "S"}});
    return 0;
  }
  auto sk = skeleton_Gx(ctx, o.x, std::max<std::size_t>(o.cap, 1u << 16));
  emit(sk.cat, o, ctx.data().name + "_x" + std::to_string(o.x),
       {{"family", ctx.data().name}, {"x", o.x}, {"group_order", sk.group().size()}});
  return 0;
}

int cmd_x0(const Options& o) {
  FamilyContext ctx(load(o), o.x, o.slack);
  auto rep = compute_x0(ctx);
  if (o.format == "json") {
    json entries = json::array();
    for (auto& e : rep.entries)
      entries.push_back({{"L", ctx.subgroup(e.L).L.elements}, {"H", ctx.subgroup(e.H).L.elements},
                         {"w", ctx.P().label(e.w)}, {"cocycle", e.cocycle}, {"level", e.level}});
    std::cout << json{{"x0", rep.x0}, {"x_max", rep.x_max}, {"m", ctx.m()}, {"entries", entries}}.dump(2) << "\n";
  } else {
    std::size_t defects = 0;
    for (auto& e : rep.entries) defects += e.cocycle ? 0 : 1;
    std::cout << "triples " << rep.entries.size() << ", with cocycle defect " << defects << "\n";
    std::cout << "x_max " << rep.x_max << "\nm " << ctx.m() << "\nx0 " << rep.x0 << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& o) {
  FamilyContext ctx(load(o), o.x, o.slack);
  auto sk = skeleton_Gx(ctx, o.x, std::max<std::size_t>(o.cap, 1u << 16));
  auto brute = bruteforce_Gx(ctx, sk, o.cap);
  auto rep = compare_with_bruteforce(sk.cat, brute);
  if (o.format == "json") {
    std::cout << json{{"family", ctx.data().name},
                      {"x", o.x},
                      {"group_order", sk.group().size()},
                      {"skeleton_objects", rep.skeleton_objects},
                      {"brute_objects", rep.brute_objects},
                      {"classes", rep.brute_classes},
                      {"skeleton_homs", sk.cat.hom_sizes()},
                      {"agree", rep.ok()},
                      {"first_mismatch", rep.first_mismatch}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "G_x order " << sk.group().size() << "\n";
    std::cout << "elementary abelian subgroups " << rep.brute_objects << " in " << rep.brute_classes << " classes\n";
    std::cout << "skeleton objects " << rep.skeleton_objects << "\n";
    std::cout << "Hom cardinalities (skeleton = brute force on embedded objects):\n";
    auto hs = sk.cat.hom_sizes();
    for (std::size_t a = 0; a < hs.size(); ++a) {
      std::cout << "  " << sk.cat.objects[a].label << " ->";
      for (auto v : hs[a]) std::cout << ' ' << v;
      std::cout << "\n";
    }
    std::cout << "matching:";
    for (std::size_t i = 0; i < rep.embedding.size(); ++i)
      std::cout << ' ' << sk.cat.objects[i].label << "=" << brute.objects[rep.embedding[i]].label;
    std::cout << "\n" << (rep.ok() ? "agree" : "MISMATCH: " + rep.first_mismatch) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_equivalence(const Options& o) {
  const int y = o.y < 0 ? o.x + 1 : o.y;
  if (y < o.x) throw InvalidData("--y must not be below --x");
  FamilyContext ctx(load(o), y, o.slack);
  const int x0 = compute_x0(ctx).x0;
  std::cout << "x0 " << x0 << "\n";
  if (o.x < x0) throw BelowX0("x = " + std::to_string(o.x) + " is below x_0 = " + std::to_string(x0));
  bool all = true;
  SkeletonGx cur = skeleton_Gx(ctx, o.x, o.cap);
  {
    auto S = skeleton_S(ctx);
    auto fs = functor_FS(ctx, cur, S, x0);
    auto f = check_functor(fs.F, cur.cat, S.cat);
    auto e = check_equivalence(fs.F, cur.cat, S.cat);
    std::cout << "F_S at x=" << o.x << ": functor " << f.ok() << ", dense " << e.essentially_surjective
              << ", full " << e.full << ", full on inhabited Hom sets " << e.full_on_inhabited << ", faithful "
              << e.faithful << "\n";
    all = all && f.ok() && fs.residuals_zero;
  }
  for (int x = o.x; x < y; ++x) {
    SkeletonGx next = skeleton_Gx(ctx, x + 1, o.cap);
    auto fb = functor_F(ctx, cur, next, x0);
    auto f = check_functor(fb.F, cur.cat, next.cat);
    auto e = check_equivalence(fb.F, cur.cat, next.cat);
    std::cout << "F: x=" << x << " -> " << x + 1 << ": functor " << f.ok() << ", dense "
              << e.essentially_surjective << ", full " << e.full << ", faithful " << e.faithful
              << (e.equivalence() && f.ok() ? "  equivalent" : "  NOT equivalent") << "\n";
    for (const auto& w : e.witnesses) std::cout << "  " << w << "\n";
    all = all && f.ok() && e.equivalence() && fb.residuals_zero;
    cur = std::move(next);
  }
  return all ? 0 : 1;
}

int cmd_cohomology(const Options& o) {
  ProPData data = load(o);
  const int m = data.P.log_order();
  const int r = o.r < 0 ? 2 * m : o.r;
  if (o.n < 1 || o.n > 2) throw InvalidData("--n must be 1 or 2");
  Ring ring(data.P.prime(), r + 4 * m + o.slack);
  data.action->validate(data.P, ring);
  auto T = std::make_shared<const Module>(data.action, ring);
  bool all = true;
  std::cout << "n " << o.n << ", r " << r << "\n";
  for (const auto& L : elementary_abelian_subgroups(data.P)) {
    auto dom = std::make_shared<const Domain>(data.P, L);
    Splitting s(dom, T, o.n);
    auto c = verify_splitting(s, r);
    auto h = lattice_cohomology_checked(dom, T, o.n);
    std::string name = "<";
    for (std::size_t i = 0; i < L.elements.size(); ++i) name += (i ? "," : "") + data.P.label(L.elements[i]);
    name += ">";
    std::cout << name << "  H^" << o.n << "(L,T) invariants [";
    for (std::size_t i = 0; i < h.invariants.size(); ++i) std::cout << (i ? "," : "") << h.invariants[i];
    std::cout << "]  log|H^n(L,T/p^rT)| " << c.log_H_finite << " = " << c.log_H << " + " << c.log_H_next
              << "  log|Z| " << c.log_Z << " = " << c.log_I << " + " << c.log_K
              << "  I∩K=0 " << c.intersection << "  mul(K)=K' " << c.mul_coherent << "\n";
    all = all && c.ok();
  }
  std::cout << (all ? "splitting verified" : "splitting FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quillen categories along coclass families"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sc) {
    auto fam = sc->add_option("--family", o.family, "built-in family")
                   ->check(CLI::IsMember(qcat::builtin_family_names()));
    sc->add_option("--data", o.data, "pro-p data file (JSON)")->check(CLI::ExistingFile)->excludes(fam);
    sc->add_option("--precision-slack", o.slack, "extra p-adic digits")->check(CLI::NonNegativeNumber);
    sc->add_option("--format", o.format, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
  };
  auto* sk = app.add_subcommand("skeleton", "semi-skeleton of A_p(G_x), or of A_p(S) with --pro-p");
  add_common(sk);
  sk->add_option("--x", o.x, "family index")->check(CLI::NonNegativeNumber);
  sk->add_flag("--pro-p", o.pro_p, "the pro-p group S instead of G_x");
  sk->add_flag("--all-rows", o.trivial_rows, "include rows whose source is trivial");
  sk->add_option("--cap", o.cap, "group order cap");
  auto* eq = app.add_subcommand("equivalence", "F from x to y, step by step");
  add_common(eq);
  eq->add_option("--x", o.x, "first index")->required()->check(CLI::NonNegativeNumber);
  eq->add_option("--y", o.y, "last index (default x+1)")->check(CLI::NonNegativeNumber);
  eq->add_option("--cap", o.cap, "group order cap");
  auto* orc = app.add_subcommand("oracle", "compare the skeleton with brute force");
  add_common(orc);
  orc->add_option("--x", o.x, "family index")->check(CLI::NonNegativeNumber);
  orc->add_option("--cap", o.cap, "brute-force group order cap");
  auto* co = app.add_subcommand("cohomology", "H^n tables and splitting verification");
  add_common(co);
  co->add_option("--n", o.n, "degree (1 or 2)");
  co->add_option("--r", o.r, "truncation level (default 2m)");
  auto* x0 = app.add_subcommand("x0", "the bound x_0");
  add_common(x0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (sk->parsed()) return cmd_skeleton(o);
    if (eq->parsed()) return cmd_equivalence(o);
    if (orc->parsed()) return cmd_oracle(o);
    if (co->parsed()) return cmd_cohomology(o);
    if (x0->parsed()) return cmd_x0(o);
  } catch (const qcat::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
