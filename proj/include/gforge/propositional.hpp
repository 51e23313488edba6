#pragma once

#include <map>
#include <string>
#include <vector>

#include "gforge/opens.hpp"
#include "gforge/theory.hpp"

namespace gforge {

// Finite stand-in {0,..,k-1} for the countable index set of the
// construction. All symbolic and point-set computations are made at the same
// truncation, so comparisons between them are exact even though the k -> oo
// object is never built.
struct IndexSet {
  int k = 1;

  explicit IndexSet(int size) : k(size) {
    if (k < 1) throw std::invalid_argument("index set size must be >= 1");
  }
  bool contains(int n) const { return n >= 0 && n < k; }
};

struct FrameInequality {
  Open lhs;  // lhs <= rhs
  Open rhs;
  auto operator<=>(const FrameInequality&) const = default;
};

enum class Provenance : std::uint8_t { Objects, Arrows, CompositionDomain };

std::string_view provenance_name(Provenance p);

struct FramePresentation {
  Provenance provenance = Provenance::Objects;
  std::string theory_name;
  int k = 1;
  std::vector<Generator> generators;  // canonically sorted
  std::vector<FrameInequality> inequalities;

  bool owns(const Generator& g) const;
  bool owns(const Open& o) const;
};

// The propositionalization T |-> P_k[T]: one per-generator [n ~^X m] per
// sort and index pair, one [(n1,..,nk) in R] per relation and index tuple,
// with symmetry/transitivity, compatibility/self-relatedness, and one
// instantiated inequality per theory axiom and context tuple.
FramePresentation propositionalize(const Theory& t, IndexSet idx);

// Structural translation of a formula under a variable -> index
// substitution: relation atoms become Rel generators, equalities become Per
// generators, exists becomes a join over the index set, true/false become
// the empty meet/join. `force_copy` stamps a copy tag onto generators whose
// symbols are untagged (tagged theories carry their tags already).
Open instantiate_formula(const Theory& t, const Formula& f,
                         const std::map<std::string, int>& substitution, IndexSet idx,
                         CopyTag force_copy = CopyTag::None);

// T |-> T_iso: two tagged copies of every sort, relation and axiom, plus for
// each sort the graph of an isomorphism between the copies (combined
// well-definedness/injectivity, totality, surjectivity) and for each
// relation the transport axioms. Biconditionals are emitted as two sequents.
Theory iso_expansion(const Theory& t);

// Three tagged copies with iso graphs beta (copies 1,2) and gamma (copies
// 2,3); presents the domain of the composition map.
Theory double_iso_expansion(const Theory& t);

}  // namespace gforge
