#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gforge/groupoid.hpp"

namespace gforge {

struct BitMatrix {
  int k = 0;
  std::vector<std::uint8_t> bits;  // row-major k*k

  BitMatrix() = default;
  explicit BitMatrix(int size) : k(size), bits(static_cast<std::size_t>(size) * size, 0) {}

  bool at(int n, int m) const { return bits[static_cast<std::size_t>(n) * k + m] != 0; }
  void set(int n, int m, bool v) { bits[static_cast<std::size_t>(n) * k + m] = v ? 1 : 0; }
  BitMatrix transposed() const;

  auto operator<=>(const BitMatrix&) const = default;
};

// A point of the object locale at truncation k: one partial equivalence
// relation per sort plus saturated relation interpretations satisfying the
// theory's axioms.
struct IndexedModel {
  int k = 0;
  std::map<std::string, BitMatrix> pers;
  std::map<std::string, std::set<std::vector<int>>> rels;

  bool self_related(const std::string& sort, int n) const;
  auto operator<=>(const IndexedModel&) const = default;
};

// A point of the arrow locale: a class bijection between two models, stored
// as its graph on self-related indices (saturated on both sides).
struct ModelIso {
  IndexedModel source;
  IndexedModel target;
  std::map<std::string, BitMatrix> alpha;

  auto operator<=>(const ModelIso&) const = default;
};

struct SizeGuard {
  double max_structures = 1e7;
  bool disabled = false;
};

struct size_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 2^(sum of generator counts); the brute-force candidate space.
double estimate_structures(const Theory& t, IndexSet idx);

// All indexed models, in lexicographic order over PER matrices (row-major)
// then relation interpretations. Axiom satisfaction is model-theoretic:
// context variables and existentials range over the self-related indices.
std::vector<IndexedModel> enumerate_models(const Theory& t, IndexSet idx,
                                           const SizeGuard& guard = {});

bool eval_formula(const Theory& t, const IndexedModel& m, const Formula& f,
                  const std::map<std::string, int>& env);

bool satisfies_object(const IndexedModel& m, const Open& o);
bool satisfies_arrow(const ModelIso& f, const Open& o);
// Composition-domain satisfaction at a composable pair: copy 1 in f.source,
// copy 2 in f.target (= g.source), copy 3 in g.target, beta = f, gamma = g.
bool satisfies_pair(const ModelIso& f, const ModelIso& g, const Open& o);

std::vector<ModelIso> enumerate_isos(const Theory& t, const IndexedModel& a,
                                     const IndexedModel& b);

ModelIso identity_iso(const IndexedModel& m);
ModelIso invert_iso(const ModelIso& f);
ModelIso compose_isos(const ModelIso& f, const ModelIso& g);  // target(f) = source(g)

// The full enumerated groupoid of points with its composition structure.
struct PointGroupoid {
  Theory theory;
  IndexSet idx{1};
  std::vector<IndexedModel> models;
  std::vector<ModelIso> isos;
  std::vector<std::size_t> source_of;                          // iso -> model
  std::vector<std::size_t> target_of;                          // iso -> model
  std::vector<std::size_t> identity_of;                        // model -> iso
  std::vector<std::size_t> inverse_of;                         // iso -> iso
  std::vector<std::pair<std::size_t, std::size_t>> composable; // target(i) = source(j)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composite;

  std::size_t model_index(const IndexedModel& m) const;
  std::size_t iso_index(const ModelIso& f) const;
};

PointGroupoid build_point_groupoid(const Theory& t, IndexSet idx, const SizeGuard& guard = {});

std::set<std::size_t> points_of(const PointGroupoid& pg, const Open& o);
std::set<std::size_t> image_under_source(const PointGroupoid& pg, const Open& o);
std::set<std::size_t> orbit_saturate(const PointGroupoid& pg, std::set<std::size_t> models);

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  std::size_t suppressed = 0;  // counterexamples beyond the reporting cap
  bool ok() const { return counterexamples.empty() && suppressed == 0; }
};

struct VerifyReport {
  // deque: add() hands out references that must survive later additions
  std::deque<CheckResult> checks;
  bool ok() const;
  CheckResult& add(std::string name);
};

// The seven equation families of an internal groupoid, pointwise.
VerifyReport verify_groupoid_laws(const PointGroupoid& pg);

// Section/involution identities of the generator maps, functoriality of
// satisfaction along s*/t*, and agreement of m*, pi1*, pi2* with pointwise
// composition and projections.
VerifyReport verify_structure_maps(const GroupoidPresentation& g, const PointGroupoid& pg,
                                   unsigned seed, std::size_t samples);

// points(s_!(b)) = s-image(points(b)) on budgeted basic opens, plus the
// retraction, unit and coverage obligations of the adjunction.
VerifyReport verify_adjunction(const GroupoidPresentation& g, const PointGroupoid& pg,
                               int max_meet_arity, unsigned seed, std::size_t samples);

VerifyReport verify_frobenius(const GroupoidPresentation& g, const PointGroupoid& pg,
                              unsigned seed, std::size_t samples);

// Closure vs orbit saturation on all opens built from at most two object
// generators, plus inflationarity and idempotence.
VerifyReport verify_closure(const GroupoidPresentation& g, const PointGroupoid& pg);

// Semantic fixed-point test for the closure operator at this truncation.
bool is_closure_fixed(const GroupoidPresentation& g, const PointGroupoid& pg, const Open& u);

}  // namespace gforge
