#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gforge/theory.hpp"

namespace gforge {

// A basic proposition of a presented frame. PerGen is [n ~^X m], RelGen is
// [(n1,..,nk) in R], AlphaGen is [alpha^X(n) = m] (or beta/gamma). `tag`
// holds the CopyTag for Per/Rel generators and the IsoTag for Alpha ones;
// `symbol` is always the base sort or relation name.
struct Generator {
  enum class Kind : std::uint8_t { Per = 0, Rel = 1, Alpha = 2 };

  Kind kind = Kind::Per;
  std::uint8_t tag = 0;
  std::string symbol;
  std::vector<int> indices;

  CopyTag copy() const { return static_cast<CopyTag>(tag); }
  IsoTag iso() const { return static_cast<IsoTag>(tag); }

  static Generator per(std::string sort, int n, int m, CopyTag copy = CopyTag::None);
  static Generator rel(std::string relation, std::vector<int> args,
                       CopyTag copy = CopyTag::None);
  static Generator alpha(IsoTag iso, std::string sort, int n, int m);

  // Canonical order: kind, then name, then tag, then indices.
  std::strong_ordering operator<=>(const Generator& o) const;
  bool operator==(const Generator& o) const { return (*this <=> o) == 0; }

  // Literal form, e.g. "leq2(1,2)", "per.X(0,1)", "alpha.X(1)=2".
  std::string text() const;
};

// Finite meet of generators; the empty meet is top. Generators are kept
// sorted and duplicate-free.
struct BasicOpen {
  std::vector<Generator> gens;

  static BasicOpen top() { return {}; }
  static BasicOpen meet_of(std::vector<Generator> gens);

  bool is_top() const { return gens.empty(); }
  // True when this basic open's generator set is a subset of other's, i.e.
  // this >= other in the frame order.
  bool subset_of(const BasicOpen& other) const;

  auto operator<=>(const BasicOpen&) const = default;
};

// Join of basic opens in disjunctive normal form; the empty join is bottom.
// Invariant: sorted antichain under generator-set inclusion (a basic open
// whose generator set contains another's is redundant and gets pruned).
struct Open {
  std::vector<BasicOpen> parts;

  static Open bottom() { return {}; }
  static Open top() { return Open{{BasicOpen::top()}}; }
  static Open atom(Generator g);
  static Open basic(BasicOpen b) { return normalized({std::move(b)}); }
  static Open normalized(std::vector<BasicOpen> parts);

  bool is_bottom() const { return parts.empty(); }
  bool is_top() const { return parts.size() == 1 && parts[0].is_top(); }

  auto operator<=>(const Open&) const = default;

  std::string text() const;
};

// Canonicalizes a raw join of meets: dedup, sort, subsumption-prune. Throws
// std::invalid_argument if the generators cannot all belong to one
// presentation (e.g. untagged object generators mixed with arrow ones).
Open normalize(std::vector<BasicOpen> parts);

Open meet(const Open& a, const Open& b);
Open join(const Open& a, const Open& b);

}  // namespace gforge
