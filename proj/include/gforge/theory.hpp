#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gforge {

// Copy tags distinguish the duplicated symbols of the iso-expanded theories.
// Plain theories use CopyTag::None throughout.
enum class CopyTag : std::uint8_t { None = 0, One = 1, Two = 2, Three = 3 };

// Which isomorphism-graph relation a symbol encodes: the arrow locale uses
// Alpha; the composition domain uses Beta (copies 1->2) and Gamma (2->3).
enum class IsoTag : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

std::string_view iso_tag_name(IsoTag tag);

struct Sort {
  std::string name;
  // Provenance of tagged copies. For sorts written by the user, base == name
  // and copy == None. The DSL never produces tagged sorts.
  std::string base;
  CopyTag copy = CopyTag::None;

  bool operator==(const Sort&) const = default;
};

Sort plain_sort(std::string name);

struct RelationSymbol {
  std::string name;
  std::vector<std::string> signature;  // sort names; empty = basic proposition
  std::string base;
  CopyTag copy = CopyTag::None;
  // Set when this relation is the graph of an isomorphism between two sort
  // copies; base then holds the underlying sort name.
  std::optional<IsoTag> iso;

  std::size_t arity() const { return signature.size(); }
  bool operator==(const RelationSymbol&) const = default;
};

RelationSymbol plain_relation(std::string name, std::vector<std::string> signature);

// Geometric formula. A single node type keeps structural equality and
// traversal simple; `kind` decides which fields are meaningful.
//   Top          -- true
//   Disjunction  -- children (empty list = false)
//   Conjunction  -- children
//   RelAtom      -- symbol = relation name, vars = argument variables
//   Equality     -- symbol = sort name, vars = {lhs, rhs}
//   Exists       -- symbol = sort name, vars = {bound variable}, children = {body}
struct Formula {
  enum class Kind : std::uint8_t { Top, Disjunction, Conjunction, RelAtom, Equality, Exists };

  Kind kind = Kind::Top;
  std::vector<Formula> children;
  std::string symbol;
  std::vector<std::string> vars;

  bool operator==(const Formula&) const = default;

  static Formula top();
  static Formula bottom();  // empty disjunction
  static Formula disjunction(std::vector<Formula> parts);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula rel(std::string relation, std::vector<std::string> args);
  static Formula equality(std::string sort, std::string lhs, std::string rhs);
  static Formula exists(std::string var, std::string sort, Formula body);
};

struct Sequent {
  std::string label;
  std::vector<std::pair<std::string, std::string>> context;  // (variable, sort)
  Formula premise;
  Formula conclusion;

  bool operator==(const Sequent&) const = default;
};

struct Theory {
  std::string name;
  std::vector<Sort> sorts;
  std::vector<RelationSymbol> relations;
  std::vector<Sequent> axioms;

  const Sort* sort(std::string_view name) const;
  const RelationSymbol* relation(std::string_view name) const;
  bool propositional() const { return sorts.empty(); }

  bool operator==(const Theory&) const = default;
};

struct Diagnostic {
  std::string axiom;    // axiom label, or "" for theory-level problems
  std::string path;     // subformula path, e.g. "premise.0.body"
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
  bool operator==(const ValidationReport&) const = default;
};

struct validation_error : std::runtime_error {
  ValidationReport report;
  validation_error(const std::string& message, ValidationReport r)
      : std::runtime_error(message), report(std::move(r)) {}
};

// Checks every structural invariant of the theory. Diagnostics are data, not
// failures; an empty report means the theory is well-formed.
ValidationReport validate_theory(const Theory& t);

// Free variables of a well-sorted formula, with their sorts, in first
// occurrence order. Exists-bound variables are excluded. The theory is
// needed to resolve relation signatures.
std::vector<std::pair<std::string, std::string>> free_variables(const Theory& t,
                                                                const Formula& f);

}  // namespace gforge
