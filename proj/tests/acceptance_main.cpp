// Acceptance suite: one pass/fail line per criterion. The checks pin every
// tolerance in code; a failing line prints the concrete counterexamples.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "gforge/cli.hpp"
#include "gforge/json_io.hpp"
#include "gforge/openexpr.hpp"
#include "gforge/oracle.hpp"
#include "gforge/parser.hpp"
#include "test_util.hpp"

using namespace gforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

Theory linear() { return test::load_theory("linear_order.gt"); }

const CheckResult& find_check(const VerifyReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

std::string describe(const CheckResult& c) {
  std::ostringstream os;
  os << c.name << ": " << c.checked << " checked, "
     << (c.counterexamples.size() + c.suppressed) << " counterexamples";
  for (const std::string& ex : c.counterexamples) os << "\n      " << ex;
  return os.str();
}

Outcome expect_checks(const VerifyReport& r, const std::vector<std::string>& names) {
  Outcome out;
  std::ostringstream os;
  for (const std::string& name : names) {
    const CheckResult& c = find_check(r, name);
    if (!c.ok()) out.pass = false;
    os << (c.ok() ? "  ok " : "  FAIL ") << describe(c) << "\n";
  }
  out.detail = os.str();
  return out;
}

std::string run_adjoint(const std::string& expr, int k) {
  std::ostringstream out, err;
  std::vector<std::string> args = {"adjoint", test::theory_path("linear_order.gt"),
                                   "--k", std::to_string(k), expr};
  int status = cli::run(args, out, err);
  if (status != 0) throw std::runtime_error("adjoint failed: " + err.str());
  return out.str();
}

// ---- criterion 1: the worked examples of the source map's left adjoint ----

Outcome criterion1() {
  const int k = 5;
  auto started = std::chrono::steady_clock::now();

  std::vector<std::pair<std::string, Open>> cases;
  cases.emplace_back("leq1(1,2)", Open::atom(Generator::rel("leq", {1, 2})));

  std::vector<BasicOpen> projected;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) projected.push_back(BasicOpen{{Generator::rel("leq", {a, b})}});
  cases.emplace_back("leq2(1,2)", normalize(projected));

  std::vector<BasicOpen> iso;
  for (int y = 0; y < k; ++y) iso.push_back(BasicOpen{{Generator::per("X", 1, y)}});
  cases.emplace_back("alpha.X(1)=2", normalize(iso));

  std::vector<BasicOpen> independent;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        independent.push_back(
            BasicOpen::meet_of({Generator::rel("leq", {a, b}), Generator::per("X", 1, c)}));
  cases.emplace_back("leq2(1,2) & alpha.X(1)=4", normalize(independent));

  std::vector<BasicOpen> lockstep;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      lockstep.push_back(
          BasicOpen::meet_of({Generator::rel("leq", {a, b}), Generator::per("X", 1, a)}));
  cases.emplace_back("leq2(1,2) & alpha.X(1)=1", normalize(lockstep));

  Outcome out;
  std::ostringstream os;
  for (const auto& [expr, expected] : cases) {
    std::string got = run_adjoint(expr, k);
    std::string want = expected.text() + "\n";
    bool ok = got == want;
    if (!ok) out.pass = false;
    os << (ok ? "  ok " : "  FAIL ") << expr << " -> "
       << (ok ? std::to_string(expected.parts.size()) + " basic opens"
              : "got " + got.substr(0, 60) + "...") << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  os << "  runtime " << secs << " s (budget 1 s)\n";
  if (secs >= 1.0) out.pass = false;
  out.detail = os.str();
  return out;
}

// ---- criterion 2: retraction and unit of the adjunction at k=3 ----

Outcome criterion2() {
  auto started = std::chrono::steady_clock::now();
  Theory t = linear();
  GroupoidPresentation g = build_groupoid(t, IndexSet(3));
  PointGroupoid pg = build_point_groupoid(t, IndexSet(3));
  VerifyReport r = verify_adjunction(g, pg, 2, 1, 0);
  Outcome out = expect_checks(r, {"retraction-syntactic", "unit-semantic"});

  const CheckResult& unit = find_check(r, "unit-semantic");
  if (unit.checked != 45 + (45 * 44) / 2) {
    out.pass = false;
    out.detail += "  FAIL expected all 1035 singleton and pair basics, saw " +
                  std::to_string(unit.checked) + "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out.detail += "  runtime " + std::to_string(secs) + " s (budget 60 s)\n";
  if (secs >= 60.0) out.pass = false;
  return out;
}

// ---- criterion 3: Frobenius reciprocity ----

Outcome criterion3() {
  Theory t = linear();
  GroupoidPresentation g2 = build_groupoid(t, IndexSet(2));
  PointGroupoid pg2 = build_point_groupoid(t, IndexSet(2));
  VerifyReport syn = verify_frobenius(g2, pg2, 20240, 0);
  Outcome a = expect_checks(syn, {"frobenius-syntactic"});

  GroupoidPresentation g3 = build_groupoid(t, IndexSet(3));
  PointGroupoid pg3 = build_point_groupoid(t, IndexSet(3));
  VerifyReport sem = verify_frobenius(g3, pg3, 20240, 1000);
  Outcome b = expect_checks(sem, {"frobenius-semantic"});

  const CheckResult& syntactic = find_check(syn, "frobenius-syntactic");
  Outcome out;
  out.pass = a.pass && b.pass && syntactic.checked == 8 * 20;
  out.detail = a.detail + b.detail;
  if (syntactic.checked != 8 * 20)
    out.detail += "  FAIL expected 160 generator pairs at k=2, saw " +
                  std::to_string(syntactic.checked) + "\n";
  return out;
}

// ---- criterion 4: pointwise adjunction equality ----

Outcome criterion4() {
  auto started = std::chrono::steady_clock::now();
  Theory t = linear();
  Outcome out;
  for (int k = 1; k <= 3; ++k) {
    GroupoidPresentation g = build_groupoid(t, IndexSet(k));
    PointGroupoid pg = build_point_groupoid(t, IndexSet(k));
    VerifyReport r = verify_adjunction(g, pg, 2, 1, 0);
    const CheckResult& c = find_check(r, "adjunction-points-image");
    if (!c.ok()) out.pass = false;
    out.detail += "  k=" + std::to_string(k) + ": " + describe(c) + "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out.detail += "  runtime " + std::to_string(secs) + " s (budget 60 s)\n";
  if (secs >= 60.0) out.pass = false;
  return out;
}

// ---- criterion 5: the seven groupoid equation families, pointwise ----

Outcome criterion5() {
  Theory t = linear();
  PointGroupoid pg = build_point_groupoid(t, IndexSet(3));
  Outcome out;
  if (pg.models.size() != 25) {
    out.pass = false;
    out.detail += "  FAIL expected 25 models, saw " + std::to_string(pg.models.size()) + "\n";
  }
  VerifyReport r = verify_groupoid_laws(pg);
  for (const CheckResult& c : r.checks) {
    if (!c.ok()) out.pass = false;
    out.detail += std::string(c.ok() ? "  ok " : "  FAIL ") + describe(c) + "\n";
  }
  return out;
}

// ---- criterion 6: model counts against the ordered-Bell closed form ----

Outcome criterion6() {
  Theory t = linear();
  Outcome out;
  for (int k = 2; k <= 3; ++k) {
    auto models = enumerate_models(t, IndexSet(k));
    long long expected = test::expected_total_order_models(k);
    long long pinned = k == 2 ? 5 : 25;
    bool ok = static_cast<long long>(models.size()) == expected && expected == pinned;
    if (!ok) out.pass = false;
    out.detail += "  k=" + std::to_string(k) + ": enumerated " + std::to_string(models.size()) +
                  ", closed form " + std::to_string(expected) + ", pinned " +
                  std::to_string(pinned) + "\n";
  }
  return out;
}

// ---- criterion 7: closure versus orbit saturation ----

Outcome criterion7() {
  Theory t = linear();
  GroupoidPresentation g = build_groupoid(t, IndexSet(3));
  PointGroupoid pg = build_point_groupoid(t, IndexSet(3));
  VerifyReport r = verify_closure(g, pg);
  return expect_checks(r, {"closure-orbit-agreement", "closure-inflationary",
                           "closure-idempotent"});
}

// ---- criterion 8: propositional degeneration ----

Outcome criterion8() {
  Theory t = test::load_theory("propositional_demo.gt");
  GroupoidPresentation g = build_groupoid(t, IndexSet(2));
  Outcome out;
  auto fail = [&](const std::string& why) {
    out.pass = false;
    out.detail += "  FAIL " + why + "\n";
  };

  auto strip = [](Generator v) {
    v.tag = static_cast<std::uint8_t>(CopyTag::None);
    return v;
  };

  // Generator bijection: arrows are exactly two tagged copies of objects.
  std::set<Generator> objects(g.objects.generators.begin(), g.objects.generators.end());
  std::set<Generator> stripped;
  for (const Generator& v : g.arrows.generators) {
    if (v.kind == Generator::Kind::Alpha || v.kind == Generator::Kind::Per)
      fail("unexpected non-propositional arrow generator " + v.text());
    stripped.insert(strip(v));
  }
  if (stripped != objects) fail("arrow generators do not collapse onto object generators");
  if (g.arrows.generators.size() != 2 * g.objects.generators.size())
    fail("arrow generator count is not twice the object count");

  // Inequality bijection after collapsing tags and dropping x <= x.
  auto strip_open = [&](const Open& o) {
    std::vector<BasicOpen> parts;
    for (const BasicOpen& b : o.parts) {
      std::vector<Generator> gens;
      for (const Generator& v : b.gens) gens.push_back(strip(v));
      parts.push_back(BasicOpen::meet_of(std::move(gens)));
    }
    return normalize(std::move(parts));
  };
  std::set<std::pair<Open, Open>> object_ineqs, collapsed;
  for (const FrameInequality& ineq : g.objects.inequalities)
    object_ineqs.emplace(ineq.lhs, ineq.rhs);
  for (const FrameInequality& ineq : g.arrows.inequalities) {
    Open lhs = strip_open(ineq.lhs), rhs = strip_open(ineq.rhs);
    if (lhs == rhs) continue;  // transport axioms collapse to R <= R
    collapsed.emplace(std::move(lhs), std::move(rhs));
  }
  if (collapsed != object_ineqs) fail("collapsed arrow inequalities differ from object ones");

  // Structure maps act as the evident identities.
  for (const Generator& u : g.objects.generators) {
    Open atom = Open::atom(u);
    for (const GeneratorMap* m : {&g.s_star, &g.t_star}) {
      Open image = apply_map(*m, atom);
      if (image.parts.size() != 1 || image.parts[0].gens.size() != 1 ||
          strip(image.parts[0].gens[0]) != u)
        fail("source/target image of " + u.text() + " is not the evident identity");
    }
    if (apply_map(g.e_star, apply_map(g.s_star, atom)) != atom ||
        apply_map(g.e_star, apply_map(g.t_star, atom)) != atom)
      fail("identity map does not retract the copies on " + u.text());
  }
  for (const Generator& v : g.arrows.generators) {
    Open atom = Open::atom(v);
    if (apply_map(g.e_star, atom) != Open::atom(strip(v)))
      fail("e* is not tag-collapse on " + v.text());
    for (const GeneratorMap* m : {&g.i_star, &g.m_star, &g.pi1_star, &g.pi2_star}) {
      Open image = apply_map(*m, atom);
      if (image.parts.size() != 1 || image.parts[0].gens.size() != 1 ||
          image.parts[0].gens[0].symbol != v.symbol ||
          image.parts[0].gens[0].indices != v.indices)
        fail("structure map moves " + v.text() + " off its base symbol");
    }
    if (source_lower(g, BasicOpen{{v}}) != Open::atom(strip(v)))
      fail("s_! is not the evident identity on " + v.text());
  }

  if (out.pass)
    out.detail = "  ok categorically discrete groupoid: " +
                 std::to_string(g.objects.generators.size()) + " object generators, " +
                 std::to_string(g.objects.inequalities.size()) + " inequalities preserved\n";
  return out;
}

// ---- criterion 9: the composition map formula regression ----

Outcome criterion9() {
  Theory t = linear();
  IndexSet k2(2);
  GroupoidPresentation g = build_groupoid(t, k2);
  PointGroupoid pg = build_point_groupoid(t, k2);

  Outcome out;
  VerifyReport good = verify_structure_maps(g, pg, 5, 20);
  const CheckResult& good_check = find_check(good, "composition-map-agreement");
  if (!good_check.ok()) {
    out.pass = false;
    out.detail += "  FAIL relational composite form: " + describe(good_check) + "\n";
  } else {
    out.detail += "  ok relational composite passes (" + std::to_string(good_check.checked) +
                  " checks)\n";
  }

  GroupoidPresentation corrupted = g;
  for (auto& [gen, image] : corrupted.m_star.images) {
    if (gen.kind != Generator::Kind::Alpha) continue;
    std::vector<BasicOpen> parts;
    for (int m = 0; m < k2.k; ++m)
      parts.push_back(BasicOpen::meet_of(
          {Generator::alpha(IsoTag::Beta, gen.symbol, gen.indices[0], gen.indices[1]),
           Generator::alpha(IsoTag::Gamma, gen.symbol, m, gen.indices[1])}));
    image = normalize(std::move(parts));
  }
  VerifyReport bad = verify_structure_maps(corrupted, pg, 5, 20);
  const CheckResult& bad_check = find_check(bad, "composition-map-agreement");
  if (bad_check.ok()) {
    out.pass = false;
    out.detail += "  FAIL middle-index-dropping variant unexpectedly passes\n";
  } else {
    out.detail += "  ok middle-index-dropping variant fails with counterexample:\n      " +
                  (bad_check.counterexamples.empty() ? std::string("<none recorded>")
                                                     : bad_check.counterexamples.front()) +
                  "\n";
  }
  return out;
}

// ---- criterion 10: parser round trip ----

Outcome criterion10() {
  Outcome out;
  for (const char* file :
       {"linear_order.gt", "dedekind_grid.gt", "partial_surjection.gt", "propositional_demo.gt"}) {
    Theory t = test::load_theory(file);
    if (!(parse_theory(render_theory(t)) == t)) {
      out.pass = false;
      out.detail += std::string("  FAIL corpus round trip: ") + file + "\n";
    }
  }
  test::TheoryGen gen(2024);
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    Theory t = gen.next();
    try {
      if (!(parse_theory(render_theory(t)) == t)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  if (failures) {
    out.pass = false;
    out.detail += "  FAIL " + std::to_string(failures) + " of 500 random theories\n";
  } else {
    out.detail += "  ok corpus plus 500 seeded random theories (seed 2024)\n";
  }
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"C1", "left adjoint worked examples at k=5 via the adjoint command", criterion1},
      {"C2", "adjunction retraction (syntactic) and unit (semantic) at k=3", criterion2},
      {"C3", "Frobenius reciprocity, syntactic at k=2 and sampled at k=3", criterion3},
      {"C4", "pointwise adjunction equality on basics of meet-arity <= 2, k <= 3", criterion4},
      {"C5", "groupoid equations pointwise on the enumerated groupoid at k=3", criterion5},
      {"C6", "model counts 5 (k=2) and 25 (k=3) against the closed form", criterion6},
      {"C7", "closure versus orbit saturation on two-generator opens at k=3", criterion7},
      {"C8", "propositional theories yield the categorically discrete groupoid", criterion8},
      {"C9", "composition map regression: relational composite versus middle-index-dropping variant",
       criterion9},
      {"C10", "parser round trip on the corpus and 500 random theories", criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("  exception: ") + e.what() + "\n";
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << "\n"
              << outcome.detail;
  }
  std::cout << (failures ? "ACCEPTANCE: " + std::to_string(failures) + " of 10 criteria failed\n"
                         : "ACCEPTANCE: all 10 criteria passed\n");
  return failures;
}
