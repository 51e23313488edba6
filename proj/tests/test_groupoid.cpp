#include <doctest.h>

#include <random>

#include "gforge/groupoid.hpp"
#include "test_util.hpp"

using namespace gforge;

namespace {

GroupoidPresentation linear_groupoid(int k) {
  static std::map<int, GroupoidPresentation> cache;
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, build_groupoid(test::load_theory("linear_order.gt"), IndexSet(k))).first;
  return it->second;
}

Open random_open(std::mt19937& eng, const FramePresentation& p) {
  std::vector<BasicOpen> parts;
  std::size_t nb = 1 + eng() % 3;
  for (std::size_t i = 0; i < nb; ++i) {
    std::vector<Generator> gens;
    std::size_t ng = 1 + eng() % 2;
    for (std::size_t j = 0; j < ng; ++j)
      gens.push_back(p.generators[eng() % p.generators.size()]);
    parts.push_back(BasicOpen::meet_of(std::move(gens)));
  }
  return normalize(std::move(parts));
}

}  // namespace

TEST_CASE("structure map images on generators") {
  GroupoidPresentation g = linear_groupoid(2);

  CHECK(apply_map(g.s_star, Open::atom(Generator::rel("leq", {0, 1}))) ==
        Open::atom(Generator::rel("leq", {0, 1}, CopyTag::One)));
  CHECK(apply_map(g.t_star, Open::atom(Generator::per("X", 0, 1))) ==
        Open::atom(Generator::per("X", 0, 1, CopyTag::Two)));
  CHECK(apply_map(g.e_star, Open::atom(Generator::alpha(IsoTag::Alpha, "X", 0, 1))) ==
        Open::atom(Generator::per("X", 0, 1)));
  CHECK(apply_map(g.e_star, Open::atom(Generator::rel("leq", {1, 0}, CopyTag::Two))) ==
        Open::atom(Generator::rel("leq", {1, 0})));
  CHECK(apply_map(g.i_star, Open::atom(Generator::alpha(IsoTag::Alpha, "X", 0, 1))) ==
        Open::atom(Generator::alpha(IsoTag::Alpha, "X", 1, 0)));
  CHECK(apply_map(g.pi1_star, Open::atom(Generator::alpha(IsoTag::Alpha, "X", 0, 1))) ==
        Open::atom(Generator::alpha(IsoTag::Beta, "X", 0, 1)));
  CHECK(apply_map(g.pi2_star, Open::atom(Generator::per("X", 0, 0, CopyTag::One))) ==
        Open::atom(Generator::per("X", 0, 0, CopyTag::Two)));
}

TEST_CASE("m_star sends alpha to the relational composite of beta and gamma") {
  GroupoidPresentation g = linear_groupoid(2);
  Open image = apply_map(g.m_star, Open::atom(Generator::alpha(IsoTag::Alpha, "X", 0, 1)));
  Open expected = normalize({BasicOpen::meet_of({Generator::alpha(IsoTag::Beta, "X", 0, 0),
                                                 Generator::alpha(IsoTag::Gamma, "X", 0, 1)}),
                             BasicOpen::meet_of({Generator::alpha(IsoTag::Beta, "X", 0, 1),
                                                 Generator::alpha(IsoTag::Gamma, "X", 1, 1)})});
  CHECK(image == expected);
  CHECK(apply_map(g.m_star, Open::atom(Generator::rel("leq", {0, 1}, CopyTag::Two))) ==
        Open::atom(Generator::rel("leq", {0, 1}, CopyTag::Three)));
}

TEST_CASE("arrow presentation size and apply_map totality") {
  GroupoidPresentation g = linear_groupoid(2);
  CHECK(g.arrows.generators.size() == 20);
  CHECK(g.comp_domain.generators.size() == 8 * 3 + 4 + 4);
  CHECK_THROWS_AS(apply_map(g.s_star, Open::atom(Generator::rel("nope", {0}))),
                  std::invalid_argument);
}

TEST_CASE("empty theory gives empty groupoid presentation") {
  GroupoidPresentation g = build_groupoid(Theory{}, IndexSet(2));
  CHECK(g.objects.generators.empty());
  CHECK(g.arrows.generators.empty());
  CHECK(g.comp_domain.generators.empty());
  CHECK(g.s_star.images.empty());
  CHECK(g.m_star.images.empty());
}

TEST_CASE("section laws and involution hold generator-wise") {
  for (int k : {2, 3}) {
    GroupoidPresentation g = linear_groupoid(k);
    for (const Generator& u : g.objects.generators) {
      Open atom = Open::atom(u);
      CHECK(apply_map(g.e_star, apply_map(g.s_star, atom)) == atom);
      CHECK(apply_map(g.e_star, apply_map(g.t_star, atom)) == atom);
    }
    for (const Generator& v : g.arrows.generators) {
      Open atom = Open::atom(v);
      CHECK(apply_map(g.i_star, apply_map(g.i_star, atom)) == atom);
    }
  }
}

TEST_CASE("involution on random arrow opens") {
  GroupoidPresentation g = linear_groupoid(3);
  std::mt19937 eng(5);
  for (int i = 0; i < 100; ++i) {
    Open u = random_open(eng, g.arrows);
    CHECK(apply_map(g.i_star, apply_map(g.i_star, u)) == u);
  }
}

TEST_CASE("source_lower reproduces the worked examples at k=3") {
  GroupoidPresentation g = linear_groupoid(3);
  const int k = 3;

  SUBCASE("domain-copy atoms are left alone") {
    CHECK(source_lower(g, BasicOpen{{Generator::rel("leq", {1, 2}, CopyTag::One)}}) ==
          Open::atom(Generator::rel("leq", {1, 2})));
  }
  SUBCASE("codomain-copy atoms are projected out") {
    std::vector<BasicOpen> expected;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) expected.push_back(BasicOpen{{Generator::rel("leq", {a, b})}});
    CHECK(source_lower(g, BasicOpen{{Generator::rel("leq", {1, 2}, CopyTag::Two)}}) ==
          normalize(std::move(expected)));
  }
  SUBCASE("isomorphism atoms project their codomain value") {
    std::vector<BasicOpen> expected;
    for (int y = 0; y < k; ++y) expected.push_back(BasicOpen{{Generator::per("X", 1, y)}});
    CHECK(source_lower(g, BasicOpen{{Generator::alpha(IsoTag::Alpha, "X", 1, 2)}}) ==
          normalize(std::move(expected)));
  }
  SUBCASE("distinct variables are quantified independently") {
    BasicOpen b = BasicOpen::meet_of({Generator::rel("leq", {1, 2}, CopyTag::Two),
                                      Generator::alpha(IsoTag::Alpha, "X", 1, 0)});
    std::vector<BasicOpen> expected;
    for (int y1 = 0; y1 < k; ++y1)
      for (int y2 = 0; y2 < k; ++y2)
        for (int y0 = 0; y0 < k; ++y0)
          expected.push_back(
              BasicOpen::meet_of({Generator::rel("leq", {y1, y2}), Generator::per("X", 1, y0)}));
    CHECK(source_lower(g, b) == normalize(std::move(expected)));
  }
  SUBCASE("shared variables vary in lockstep") {
    BasicOpen b = BasicOpen::meet_of({Generator::rel("leq", {1, 2}, CopyTag::Two),
                                      Generator::alpha(IsoTag::Alpha, "X", 1, 1)});
    std::vector<BasicOpen> expected;
    for (int y1 = 0; y1 < k; ++y1)
      for (int y2 = 0; y2 < k; ++y2)
        expected.push_back(
            BasicOpen::meet_of({Generator::rel("leq", {y1, y2}), Generator::per("X", 1, y1)}));
    CHECK(source_lower(g, b) == normalize(std::move(expected)));
  }
}

TEST_CASE("source_lower rejects non-arrow input") {
  GroupoidPresentation g = linear_groupoid(2);
  CHECK_THROWS_AS(source_lower(g, BasicOpen{{Generator::per("X", 0, 0)}}), std::invalid_argument);
  CHECK_THROWS_AS(source_lower(g, BasicOpen{{Generator::alpha(IsoTag::Beta, "X", 0, 0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(source_lower(g, BasicOpen{{Generator::rel("leq", {0, 5}, CopyTag::One)}}),
                  std::invalid_argument);
}

TEST_CASE("target_lower mirrors source_lower through the inversion") {
  GroupoidPresentation g = linear_groupoid(3);
  const int k = 3;

  CHECK(target_lower(g, BasicOpen{{Generator::rel("leq", {1, 2}, CopyTag::Two)}}) ==
        Open::atom(Generator::rel("leq", {1, 2})));

  std::vector<BasicOpen> projected;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) projected.push_back(BasicOpen{{Generator::rel("leq", {a, b})}});
  CHECK(target_lower(g, BasicOpen{{Generator::rel("leq", {1, 2}, CopyTag::One)}}) ==
        normalize(std::move(projected)));

  std::vector<BasicOpen> iso_expected;
  for (int y = 0; y < k; ++y) iso_expected.push_back(BasicOpen{{Generator::per("X", 2, y)}});
  CHECK(target_lower(g, BasicOpen{{Generator::alpha(IsoTag::Alpha, "X", 1, 2)}}) ==
        normalize(std::move(iso_expected)));
}

TEST_CASE("closure rejoins every index, respecting sharing") {
  GroupoidPresentation g = linear_groupoid(3);
  const int k = 3;

  std::vector<BasicOpen> leq_expected;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) leq_expected.push_back(BasicOpen{{Generator::rel("leq", {a, b})}});
  CHECK(closure(g, Open::atom(Generator::rel("leq", {0, 1}))) ==
        normalize(std::move(leq_expected)));

  CHECK(closure(g, Open::top()) == Open::top());
  CHECK(closure(g, Open::bottom()) == Open::bottom());

  std::vector<BasicOpen> per_expected;
  for (int y = 0; y < k; ++y) per_expected.push_back(BasicOpen{{Generator::per("X", y, y)}});
  CHECK(closure(g, Open::atom(Generator::per("X", 0, 0))) == normalize(std::move(per_expected)));
}

TEST_CASE("closure is syntactically idempotent on generator closures") {
  GroupoidPresentation g = linear_groupoid(2);
  for (const Generator& u : g.objects.generators) {
    Open once = closure(g, Open::atom(u));
    CHECK(closure(g, once) == once);
  }
}

TEST_CASE("retraction: lowering the source image is the identity") {
  GroupoidPresentation g = linear_groupoid(3);
  for (const Generator& u : g.objects.generators) {
    Open atom = Open::atom(u);
    CHECK(source_lower(g, apply_map(g.s_star, atom)) == atom);
  }
  std::mt19937 eng(17);
  for (int i = 0; i < 100; ++i) {
    Open u = random_open(eng, g.objects);
    CHECK(source_lower(g, apply_map(g.s_star, u)) == u);
  }
}

TEST_CASE("frobenius holds syntactically on generator pairs at k=2") {
  GroupoidPresentation g = linear_groupoid(2);
  for (const Generator& u : g.objects.generators) {
    Open uo = Open::atom(u);
    Open su = apply_map(g.s_star, uo);
    for (const Generator& v : g.arrows.generators) {
      Open vo = Open::atom(v);
      CHECK(source_lower(g, meet(su, vo)) == meet(uo, source_lower(g, vo)));
    }
  }
}
