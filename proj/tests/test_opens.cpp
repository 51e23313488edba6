#include <doctest.h>

#include <random>

#include "gforge/opens.hpp"

using namespace gforge;

namespace {
const Generator g1 = Generator::rel("a", {});
const Generator g2 = Generator::rel("b", {});
const Generator g3 = Generator::rel("c", {});
}  // namespace

TEST_CASE("normalize prunes subsumed meets") {
  Open o = normalize({BasicOpen{{g1}}, BasicOpen{{g1, g2}}});
  CHECK(o == Open::atom(g1));
}

TEST_CASE("normalize of nothing is bottom, of the empty meet is top") {
  CHECK(normalize({}) == Open::bottom());
  CHECK(normalize({BasicOpen{}}) == Open::top());
  CHECK(Open::bottom().is_bottom());
  CHECK(Open::top().is_top());
}

TEST_CASE("normalize is idempotent and dedupes") {
  Open o = normalize({BasicOpen{{g2, g1}}, BasicOpen{{g1, g2}}, BasicOpen{{g3}}});
  CHECK(o.parts.size() == 2);
  CHECK(normalize(o.parts) == o);
}

TEST_CASE("meet distributes over joins") {
  Open lhs = meet(Open::atom(g1), join(Open::atom(g2), Open::atom(g3)));
  Open expected = normalize({BasicOpen{{g1, g2}}, BasicOpen{{g1, g3}}});
  CHECK(lhs == expected);
}

TEST_CASE("lattice unit laws") {
  Open x = join(Open::atom(g1), meet(Open::atom(g2), Open::atom(g3)));
  CHECK(join(x, Open::bottom()) == x);
  CHECK(meet(x, Open::top()) == x);
  CHECK(meet(x, Open::bottom()) == Open::bottom());
  CHECK(join(x, Open::top()) == Open::top());
}

TEST_CASE("meet and join are commutative, associative, idempotent on random opens") {
  std::mt19937 eng(11);
  std::vector<Generator> universe = {g1, g2, g3, Generator::rel("d", {}), Generator::rel("e", {})};
  auto random_open = [&]() {
    std::vector<BasicOpen> parts;
    std::size_t nb = 1 + eng() % 3;
    for (std::size_t i = 0; i < nb; ++i) {
      std::vector<Generator> gens;
      std::size_t ng = 1 + eng() % 3;
      for (std::size_t j = 0; j < ng; ++j) gens.push_back(universe[eng() % universe.size()]);
      parts.push_back(BasicOpen::meet_of(std::move(gens)));
    }
    return normalize(std::move(parts));
  };
  for (int i = 0; i < 200; ++i) {
    Open a = random_open(), b = random_open(), c = random_open();
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
    CHECK(join(a, join(b, c)) == join(join(a, b), c));
    CHECK(meet(a, a) == a);
    CHECK(join(a, a) == a);
    CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
  }
}

TEST_CASE("mixing object and tagged generators is rejected") {
  Generator obj = Generator::per("X", 0, 0);
  Generator tagged = Generator::per("X", 0, 0, CopyTag::One);
  Generator arrow_only = Generator::alpha(IsoTag::Alpha, "X", 0, 0);
  Generator comp_only = Generator::alpha(IsoTag::Gamma, "X", 0, 0);

  CHECK_THROWS_AS(meet(Open::atom(obj), Open::atom(tagged)), std::invalid_argument);
  CHECK_THROWS_AS(join(Open::atom(obj), Open::atom(arrow_only)), std::invalid_argument);
  CHECK_THROWS_AS(meet(Open::atom(arrow_only), Open::atom(comp_only)), std::invalid_argument);
  CHECK_NOTHROW(meet(Open::atom(tagged), Open::atom(arrow_only)));
  CHECK_NOTHROW(meet(Open::atom(tagged), Open::atom(comp_only)));
}

TEST_CASE("generator text forms") {
  CHECK(Generator::per("X", 0, 1).text() == "per.X(0,1)");
  CHECK(Generator::per("X", 0, 1, CopyTag::Two).text() == "per2.X(0,1)");
  CHECK(Generator::rel("leq", {1, 2}, CopyTag::Two).text() == "leq2(1,2)");
  CHECK(Generator::rel("leq", {1, 2}).text() == "leq(1,2)");
  CHECK(Generator::rel("p", {}).text() == "p()");
  CHECK(Generator::alpha(IsoTag::Alpha, "X", 1, 2).text() == "alpha.X(1)=2");
  CHECK(Generator::alpha(IsoTag::Gamma, "X", 0, 2).text() == "gamma.X(0)=2");
}

TEST_CASE("canonical generator order is kind, name, tag, indices") {
  Generator per = Generator::per("X", 1, 1);
  Generator rel_a = Generator::rel("a", {5});
  Generator rel_b0 = Generator::rel("b", {0}, CopyTag::None);
  Generator rel_b1 = Generator::rel("b", {0}, CopyTag::One);
  Generator al = Generator::alpha(IsoTag::Alpha, "A", 0, 0);
  CHECK(per < rel_a);
  CHECK(rel_a < rel_b0);
  CHECK(rel_b0 < rel_b1);
  CHECK(rel_b1 < al);
  CHECK(Generator::rel("b", {0, 1}) < Generator::rel("b", {0, 2}));
}

TEST_CASE("open text") {
  CHECK(Open::bottom().text() == "false");
  CHECK(Open::top().text() == "true");
  CHECK(join(Open::atom(g1), meet(Open::atom(g2), Open::atom(g3))).text() == "a() | b() & c()");
}
