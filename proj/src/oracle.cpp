#include "gforge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gforge {

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(k);
  for (int n = 0; n < k; ++n)
    for (int m = 0; m < k; ++m) out.set(m, n, at(n, m));
  return out;
}

bool IndexedModel::self_related(const std::string& sort, int n) const {
  auto it = pers.find(sort);
  return it != pers.end() && it->second.at(n, n);
}

double estimate_structures(const Theory& t, IndexSet idx) {
  double log2sum = 0;
  for (const Sort& s : t.sorts) {
    (void)s;
    log2sum += static_cast<double>(idx.k) * idx.k;
  }
  for (const RelationSymbol& r : t.relations)
    log2sum += std::pow(static_cast<double>(idx.k), static_cast<double>(r.arity()));
  return std::exp2(log2sum);
}

namespace {

constexpr std::size_t kMaxExamples = 5;

void record(CheckResult& c, bool ok, const std::string& example) {
  ++c.checked;
  if (ok) return;
  if (c.counterexamples.size() < kMaxExamples)
    c.counterexamples.push_back(example);
  else
    ++c.suppressed;
}

bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& limits) {
  std::size_t i = digits.size();
  while (i > 0) {
    if (++digits[i - 1] < limits[i - 1]) return true;
    digits[i - 1] = 0;
    --i;
  }
  return false;
}

std::vector<std::vector<int>> all_tuples(int k, std::size_t arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(arity, 0);
  while (true) {
    out.push_back(tuple);
    std::size_t i = arity;
    while (i > 0) {
      if (++tuple[i - 1] < k) break;
      tuple[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
  }
}

// All partial equivalence relations on {0..k-1}, in lexicographic order of
// the row-major bit string.
std::vector<BitMatrix> all_pers(int k) {
  std::vector<BitMatrix> out;
  const int bits = k * k;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    BitMatrix m(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        m.set(i, j, (mask >> (bits - 1 - (i * k + j))) & 1ull);
    bool ok = true;
    for (int i = 0; ok && i < k; ++i)
      for (int j = 0; ok && j < k; ++j) {
        if (m.at(i, j) != m.at(j, i)) ok = false;
        for (int l = 0; ok && l < k; ++l)
          if (m.at(i, j) && m.at(j, l) && !m.at(i, l)) ok = false;
      }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

// Interpretations of one relation compatible with the given PERs: tuples of
// self-related indices, saturated under componentwise equivalence.
std::vector<std::set<std::vector<int>>> relation_candidates(
    const RelationSymbol& r, const std::map<std::string, BitMatrix>& pers, int k) {
  const auto tuples = all_tuples(k, r.arity());
  const std::size_t n = tuples.size();

  auto tuple_ok = [&](const std::vector<int>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (!pers.at(r.signature[i]).at(tuple[i], tuple[i])) return false;
    return true;
  };
  auto related = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!pers.at(r.signature[i]).at(a[i], b[i])) return false;
    return true;
  };

  std::vector<std::set<std::vector<int>>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::set<std::vector<int>> interp;
    bool ok = true;
    for (std::size_t tpos = 0; ok && tpos < n; ++tpos) {
      if (!((mask >> (n - 1 - tpos)) & 1ull)) continue;
      if (!tuple_ok(tuples[tpos])) {
        ok = false;
        break;
      }
      interp.insert(tuples[tpos]);
    }
    if (!ok) continue;
    for (const auto& a : interp) {
      for (std::size_t tpos = 0; ok && tpos < n; ++tpos)
        if (related(a, tuples[tpos]) && !interp.count(tuples[tpos])) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(interp));
  }
  return out;
}

bool axiom_holds(const Theory& t, const IndexedModel& m, const Sequent& ax) {
  std::vector<std::vector<int>> domains;
  for (const auto& [var, sort] : ax.context) {
    std::vector<int> dom;
    for (int n = 0; n < m.k; ++n)
      if (m.self_related(sort, n)) dom.push_back(n);
    if (dom.empty()) return true;  // no assignments, vacuously satisfied
    domains.push_back(std::move(dom));
  }

  std::vector<std::size_t> digits(domains.size(), 0);
  std::vector<std::size_t> limits;
  for (const auto& d : domains) limits.push_back(d.size());
  while (true) {
    std::map<std::string, int> env;
    for (std::size_t i = 0; i < domains.size(); ++i)
      env[ax.context[i].first] = domains[i][digits[i]];
    if (eval_formula(t, m, ax.premise, env) && !eval_formula(t, m, ax.conclusion, env))
      return false;
    if (digits.empty() || !advance(digits, limits)) return true;
  }
}

}  // namespace

bool eval_formula(const Theory& t, const IndexedModel& m, const Formula& f,
                  const std::map<std::string, int>& env) {
  switch (f.kind) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Disjunction: {
      for (const Formula& c : f.children)
        if (eval_formula(t, m, c, env)) return true;
      return false;
    }
    case Formula::Kind::Conjunction: {
      for (const Formula& c : f.children)
        if (!eval_formula(t, m, c, env)) return false;
      return true;
    }
    case Formula::Kind::RelAtom: {
      std::vector<int> tuple;
      for (const std::string& v : f.vars) tuple.push_back(env.at(v));
      return m.rels.at(f.symbol).count(tuple) != 0;
    }
    case Formula::Kind::Equality:
      return m.pers.at(f.symbol).at(env.at(f.vars[0]), env.at(f.vars[1]));
    case Formula::Kind::Exists: {
      std::map<std::string, int> inner = env;
      for (int n = 0; n < m.k; ++n) {
        if (!m.self_related(f.symbol, n)) continue;
        inner[f.vars[0]] = n;
        if (eval_formula(t, m, f.children[0], inner)) return true;
      }
      return false;
    }
  }
  return false;
}

std::vector<IndexedModel> enumerate_models(const Theory& t, IndexSet idx,
                                           const SizeGuard& guard) {
  ValidationReport report = validate_theory(t);
  if (!report.ok())
    throw validation_error("enumerate_models: theory does not validate: " +
                               report.diagnostics.front().message,
                           report);
  const double estimate = estimate_structures(t, idx);
  if (!guard.disabled && estimate > guard.max_structures) {
    std::ostringstream os;
    os << "enumerate_models: estimated " << estimate << " candidate structures exceeds the guard ("
       << guard.max_structures << "); raise GFORGE_MAX_STRUCTURES or pass --unsafe-no-guard";
    throw size_guard_error(os.str());
  }

  std::vector<std::string> sort_names;
  for (const Sort& s : t.sorts) sort_names.push_back(s.name);
  std::sort(sort_names.begin(), sort_names.end());
  std::vector<const RelationSymbol*> rels;
  for (const RelationSymbol& r : t.relations) rels.push_back(&r);
  std::sort(rels.begin(), rels.end(),
            [](const RelationSymbol* a, const RelationSymbol* b) { return a->name < b->name; });

  const std::vector<BitMatrix> pers_list = all_pers(idx.k);
  std::vector<IndexedModel> out;

  std::vector<std::size_t> per_digits(sort_names.size(), 0);
  const std::vector<std::size_t> per_limits(sort_names.size(), pers_list.size());
  while (true) {
    IndexedModel base;
    base.k = idx.k;
    for (std::size_t i = 0; i < sort_names.size(); ++i)
      base.pers[sort_names[i]] = pers_list[per_digits[i]];

    std::vector<std::vector<std::set<std::vector<int>>>> candidates;
    std::vector<std::size_t> rel_limits;
    bool feasible = true;
    for (const RelationSymbol* r : rels) {
      candidates.push_back(relation_candidates(*r, base.pers, idx.k));
      rel_limits.push_back(candidates.back().size());
      if (candidates.back().empty()) feasible = false;
    }

    if (feasible) {
      std::vector<std::size_t> rel_digits(rels.size(), 0);
      while (true) {
        IndexedModel m = base;
        for (std::size_t i = 0; i < rels.size(); ++i)
          m.rels[rels[i]->name] = candidates[i][rel_digits[i]];
        bool ok = true;
        for (const Sequent& ax : t.axioms)
          if (!axiom_holds(t, m, ax)) {
            ok = false;
            break;
          }
        if (ok) out.push_back(std::move(m));
        if (rel_digits.empty() || !advance(rel_digits, rel_limits)) break;
      }
    }

    if (per_digits.empty() || !advance(per_digits, per_limits)) break;
  }
  return out;
}

namespace {

bool generator_in_model(const IndexedModel& m, const Generator& g) {
  for (int n : g.indices)
    if (n < 0 || n >= m.k)
      throw std::invalid_argument("satisfaction: index out of range in " + g.text());
  if (g.kind == Generator::Kind::Per) {
    auto it = m.pers.find(g.symbol);
    if (it == m.pers.end())
      throw std::invalid_argument("satisfaction: unknown sort " + g.symbol);
    return it->second.at(g.indices[0], g.indices[1]);
  }
  auto it = m.rels.find(g.symbol);
  if (it == m.rels.end())
    throw std::invalid_argument("satisfaction: unknown relation " + g.symbol);
  return it->second.count(g.indices) != 0;
}

template <typename GenEval>
bool satisfies(const Open& o, GenEval&& holds) {
  for (const BasicOpen& b : o.parts) {
    bool all = true;
    for (const Generator& g : b.gens)
      if (!holds(g)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool satisfies_object(const IndexedModel& m, const Open& o) {
  return satisfies(o, [&](const Generator& g) {
    if (g.kind == Generator::Kind::Alpha || g.copy() != CopyTag::None)
      throw std::invalid_argument("satisfies_object: " + g.text() + " is not an object generator");
    return generator_in_model(m, g);
  });
}

bool satisfies_arrow(const ModelIso& f, const Open& o) {
  return satisfies(o, [&](const Generator& g) {
    if (g.kind == Generator::Kind::Alpha) {
      if (g.iso() != IsoTag::Alpha)
        throw std::invalid_argument("satisfies_arrow: " + g.text() + " is not an arrow generator");
      auto it = f.alpha.find(g.symbol);
      if (it == f.alpha.end())
        throw std::invalid_argument("satisfies_arrow: unknown sort " + g.symbol);
      return it->second.at(g.indices[0], g.indices[1]);
    }
    Generator stripped = g;
    stripped.tag = static_cast<std::uint8_t>(CopyTag::None);
    switch (g.copy()) {
      case CopyTag::One: return generator_in_model(f.source, stripped);
      case CopyTag::Two: return generator_in_model(f.target, stripped);
      default:
        throw std::invalid_argument("satisfies_arrow: " + g.text() + " is not an arrow generator");
    }
  });
}

bool satisfies_pair(const ModelIso& f, const ModelIso& g, const Open& o) {
  return satisfies(o, [&](const Generator& gen) {
    if (gen.kind == Generator::Kind::Alpha) {
      const std::map<std::string, BitMatrix>* graph = nullptr;
      if (gen.iso() == IsoTag::Beta) graph = &f.alpha;
      else if (gen.iso() == IsoTag::Gamma) graph = &g.alpha;
      else
        throw std::invalid_argument("satisfies_pair: " + gen.text() +
                                    " is not a composition-domain generator");
      auto it = graph->find(gen.symbol);
      if (it == graph->end())
        throw std::invalid_argument("satisfies_pair: unknown sort " + gen.symbol);
      return it->second.at(gen.indices[0], gen.indices[1]);
    }
    Generator stripped = gen;
    stripped.tag = static_cast<std::uint8_t>(CopyTag::None);
    switch (gen.copy()) {
      case CopyTag::One: return generator_in_model(f.source, stripped);
      case CopyTag::Two: return generator_in_model(f.target, stripped);
      case CopyTag::Three: return generator_in_model(g.target, stripped);
      default:
        throw std::invalid_argument("satisfies_pair: " + gen.text() +
                                    " is not a composition-domain generator");
    }
  });
}

namespace {

// Equivalence classes of the self-related indices, ordered by least element.
std::vector<std::vector<int>> per_classes(const BitMatrix& per) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(per.k, false);
  for (int n = 0; n < per.k; ++n) {
    if (seen[n] || !per.at(n, n)) continue;
    std::vector<int> cls;
    for (int m = 0; m < per.k; ++m)
      if (per.at(n, m)) {
        cls.push_back(m);
        seen[m] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool preserves_relations(const Theory& t, const IndexedModel& a, const IndexedModel& b,
                         const std::map<std::string, BitMatrix>& alpha) {
  for (const RelationSymbol& r : t.relations) {
    const auto tuples = all_tuples(a.k, r.arity());
    for (const auto& x : tuples) {
      bool x_ok = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!a.self_related(r.signature[i], x[i])) {
          x_ok = false;
          break;
        }
      if (!x_ok) continue;
      const bool in_a = a.rels.at(r.name).count(x) != 0;
      for (const auto& y : tuples) {
        bool related = true;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (!alpha.at(r.signature[i]).at(x[i], y[i])) {
            related = false;
            break;
          }
        if (!related) continue;
        if (in_a != (b.rels.at(r.name).count(y) != 0)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ModelIso> enumerate_isos(const Theory& t, const IndexedModel& a,
                                     const IndexedModel& b) {
  std::vector<std::string> sorts;
  for (const auto& [name, per] : a.pers) sorts.push_back(name);

  std::vector<std::vector<std::vector<int>>> ca, cb;
  for (const std::string& s : sorts) {
    ca.push_back(per_classes(a.pers.at(s)));
    cb.push_back(per_classes(b.pers.at(s)));
    if (ca.back().size() != cb.back().size()) return {};
  }

  // All per-sort bijections of classes, as permutations in lexicographic
  // order; the product over sorts is walked odometer-style.
  std::vector<std::vector<std::vector<int>>> perms(sorts.size());
  for (std::size_t i = 0; i < sorts.size(); ++i) {
    std::vector<int> p(ca[i].size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<int>(j);
    do {
      perms[i].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<ModelIso> out;
  std::vector<std::size_t> digits(sorts.size(), 0);
  std::vector<std::size_t> limits;
  for (const auto& ps : perms) limits.push_back(ps.size());
  while (true) {
    std::map<std::string, BitMatrix> alpha;
    for (std::size_t i = 0; i < sorts.size(); ++i) {
      BitMatrix m(a.k);
      const auto& p = perms[i][digits[i]];
      for (std::size_t c = 0; c < ca[i].size(); ++c)
        for (int n : ca[i][c])
          for (int v : cb[i][p[c]]) m.set(n, v, true);
      alpha[sorts[i]] = std::move(m);
    }
    if (preserves_relations(t, a, b, alpha)) out.push_back({a, b, alpha});
    if (digits.empty() || !advance(digits, limits)) break;
  }
  return out;
}

ModelIso identity_iso(const IndexedModel& m) { return {m, m, m.pers}; }

ModelIso invert_iso(const ModelIso& f) {
  std::map<std::string, BitMatrix> alpha;
  for (const auto& [sort, graph] : f.alpha) alpha[sort] = graph.transposed();
  return {f.target, f.source, std::move(alpha)};
}

ModelIso compose_isos(const ModelIso& f, const ModelIso& g) {
  if (!(f.target == g.source))
    throw std::invalid_argument("compose_isos: isomorphisms are not composable");
  std::map<std::string, BitMatrix> alpha;
  for (const auto& [sort, fg] : f.alpha) {
    const BitMatrix& gg = g.alpha.at(sort);
    BitMatrix c(fg.k);
    for (int n = 0; n < fg.k; ++n)
      for (int p = 0; p < fg.k; ++p)
        for (int m = 0; m < fg.k; ++m)
          if (fg.at(n, m) && gg.at(m, p)) {
            c.set(n, p, true);
            break;
          }
    alpha[sort] = std::move(c);
  }
  return {f.source, g.target, std::move(alpha)};
}

std::size_t PointGroupoid::model_index(const IndexedModel& m) const {
  for (std::size_t i = 0; i < models.size(); ++i)
    if (models[i] == m) return i;
  throw std::invalid_argument("model is not part of the enumerated groupoid");
}

std::size_t PointGroupoid::iso_index(const ModelIso& f) const {
  for (std::size_t i = 0; i < isos.size(); ++i)
    if (isos[i] == f) return i;
  throw std::invalid_argument("isomorphism is not part of the enumerated groupoid");
}

PointGroupoid build_point_groupoid(const Theory& t, IndexSet idx, const SizeGuard& guard) {
  PointGroupoid pg;
  pg.theory = t;
  pg.idx = idx;
  pg.models = enumerate_models(t, idx, guard);

  for (std::size_t i = 0; i < pg.models.size(); ++i)
    for (std::size_t j = 0; j < pg.models.size(); ++j) {
      auto isos = enumerate_isos(t, pg.models[i], pg.models[j]);
      for (ModelIso& f : isos) {
        pg.source_of.push_back(i);
        pg.target_of.push_back(j);
        pg.isos.push_back(std::move(f));
      }
    }

  pg.identity_of.resize(pg.models.size());
  for (std::size_t i = 0; i < pg.models.size(); ++i)
    pg.identity_of[i] = pg.iso_index(identity_iso(pg.models[i]));
  pg.inverse_of.resize(pg.isos.size());
  for (std::size_t i = 0; i < pg.isos.size(); ++i)
    pg.inverse_of[i] = pg.iso_index(invert_iso(pg.isos[i]));

  for (std::size_t i = 0; i < pg.isos.size(); ++i)
    for (std::size_t j = 0; j < pg.isos.size(); ++j) {
      if (pg.target_of[i] != pg.source_of[j]) continue;
      pg.composable.emplace_back(i, j);
      ModelIso c = compose_isos(pg.isos[i], pg.isos[j]);
      for (std::size_t l = 0; l < pg.isos.size(); ++l)
        if (pg.isos[l] == c) {
          pg.composite[{i, j}] = l;
          break;
        }
    }
  return pg;
}

std::set<std::size_t> points_of(const PointGroupoid& pg, const Open& o) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < pg.models.size(); ++i)
    if (satisfies_object(pg.models[i], o)) out.insert(i);
  return out;
}

std::set<std::size_t> image_under_source(const PointGroupoid& pg, const Open& o) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < pg.isos.size(); ++i)
    if (satisfies_arrow(pg.isos[i], o)) out.insert(pg.source_of[i]);
  return out;
}

std::set<std::size_t> orbit_saturate(const PointGroupoid& pg, std::set<std::size_t> models) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pg.isos.size(); ++i)
      if (models.count(pg.source_of[i]) && !models.count(pg.target_of[i])) {
        models.insert(pg.target_of[i]);
        changed = true;
      }
  }
  return models;
}

bool VerifyReport::ok() const {
  for (const CheckResult& c : checks)
    if (!c.ok()) return false;
  return true;
}

CheckResult& VerifyReport::add(std::string name) {
  checks.push_back(CheckResult{std::move(name), 0, {}, 0});
  return checks.back();
}

VerifyReport verify_groupoid_laws(const PointGroupoid& pg) {
  VerifyReport report;

  auto comp = [&](std::size_t i, std::size_t j) -> std::size_t {
    auto it = pg.composite.find({i, j});
    return it == pg.composite.end() ? static_cast<std::size_t>(-1) : it->second;
  };

  CheckResult& identity = report.add("identity-section");
  for (std::size_t m = 0; m < pg.models.size(); ++m) {
    std::size_t e = pg.identity_of[m];
    record(identity, pg.source_of[e] == m && pg.target_of[e] == m,
           "identity of model " + std::to_string(m));
  }

  CheckResult& closure = report.add("composition-closed");
  CheckResult& st = report.add("composite-source-target");
  for (const auto& [i, j] : pg.composable) {
    std::size_t c = comp(i, j);
    record(closure, c != static_cast<std::size_t>(-1),
           "composite of " + std::to_string(i) + "," + std::to_string(j));
    if (c == static_cast<std::size_t>(-1)) continue;
    record(st, pg.source_of[c] == pg.source_of[i] && pg.target_of[c] == pg.target_of[j],
           "source/target of composite " + std::to_string(i) + ";" + std::to_string(j));
  }

  CheckResult& assoc = report.add("associativity");
  for (const auto& [i, j] : pg.composable) {
    std::size_t ij = comp(i, j);
    if (ij == static_cast<std::size_t>(-1)) continue;
    for (std::size_t h = 0; h < pg.isos.size(); ++h) {
      if (pg.target_of[j] != pg.source_of[h]) continue;
      record(assoc, comp(ij, h) == comp(i, comp(j, h)),
             "associativity at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(h) + ")");
    }
  }

  CheckResult& unit = report.add("unit-laws");
  for (std::size_t f = 0; f < pg.isos.size(); ++f) {
    std::size_t right = comp(f, pg.identity_of[pg.target_of[f]]);
    std::size_t left = comp(pg.identity_of[pg.source_of[f]], f);
    record(unit, right == f && left == f, "units at iso " + std::to_string(f));
  }

  CheckResult& inv_st = report.add("inversion-source-target");
  CheckResult& inv_law = report.add("inverse-laws");
  CheckResult& invol = report.add("inversion-involution");
  for (std::size_t f = 0; f < pg.isos.size(); ++f) {
    std::size_t g = pg.inverse_of[f];
    record(inv_st, pg.source_of[g] == pg.target_of[f] && pg.target_of[g] == pg.source_of[f],
           "inverse endpoints of iso " + std::to_string(f));
    record(inv_law,
           comp(f, g) == pg.identity_of[pg.source_of[f]] &&
               comp(g, f) == pg.identity_of[pg.target_of[f]],
           "inverse laws at iso " + std::to_string(f));
    record(invol, pg.inverse_of[g] == f, "double inverse of iso " + std::to_string(f));
  }

  return report;
}

namespace {

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : eng() % n; }
};

BasicOpen random_basic(Rng& rng, const FramePresentation& p, std::size_t max_gens) {
  if (p.generators.empty()) return BasicOpen::top();
  std::vector<Generator> gens;
  const std::size_t count = 1 + rng.below(max_gens);
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(p.generators[rng.below(p.generators.size())]);
  return BasicOpen::meet_of(std::move(gens));
}

Open random_open(Rng& rng, const FramePresentation& p, std::size_t max_basics,
                 std::size_t max_gens) {
  std::vector<BasicOpen> parts;
  const std::size_t count = 1 + rng.below(max_basics);
  for (std::size_t i = 0; i < count; ++i) parts.push_back(random_basic(rng, p, max_gens));
  return normalize(std::move(parts));
}

}  // namespace

VerifyReport verify_structure_maps(const GroupoidPresentation& g, const PointGroupoid& pg,
                                   unsigned seed, std::size_t samples) {
  VerifyReport report;
  Rng rng(seed);

  CheckResult& section_s = report.add("section-law-s");
  CheckResult& section_t = report.add("section-law-t");
  for (const Generator& u : g.objects.generators) {
    const Open atom = Open::atom(u);
    record(section_s, apply_map(g.e_star, apply_map(g.s_star, atom)) == atom, u.text());
    record(section_t, apply_map(g.e_star, apply_map(g.t_star, atom)) == atom, u.text());
  }

  CheckResult& invol = report.add("inversion-involution-symbolic");
  for (const Generator& v : g.arrows.generators) {
    const Open atom = Open::atom(v);
    record(invol, apply_map(g.i_star, apply_map(g.i_star, atom)) == atom, v.text());
  }

  CheckResult& funct = report.add("functoriality-satisfaction");
  for (const Generator& u : g.objects.generators) {
    const Open su = apply_map(g.s_star, Open::atom(u));
    const Open tu = apply_map(g.t_star, Open::atom(u));
    for (std::size_t f = 0; f < pg.isos.size(); ++f) {
      bool ok = satisfies_arrow(pg.isos[f], su) ==
                    satisfies_object(pg.models[pg.source_of[f]], Open::atom(u)) &&
                satisfies_arrow(pg.isos[f], tu) ==
                    satisfies_object(pg.models[pg.target_of[f]], Open::atom(u));
      record(funct, ok, u.text() + " at iso " + std::to_string(f));
    }
  }

  CheckResult& ident = report.add("identity-map-agreement");
  for (const Generator& v : g.arrows.generators) {
    const Open ev = apply_map(g.e_star, Open::atom(v));
    for (std::size_t m = 0; m < pg.models.size(); ++m) {
      bool ok = satisfies_object(pg.models[m], ev) ==
                satisfies_arrow(pg.isos[pg.identity_of[m]], Open::atom(v));
      record(ident, ok, v.text() + " at model " + std::to_string(m));
    }
  }

  std::vector<Open> probes;
  for (const Generator& v : g.arrows.generators) probes.push_back(Open::atom(v));
  for (std::size_t i = 0; i < samples; ++i) probes.push_back(random_open(rng, g.arrows, 2, 2));

  CheckResult& compat = report.add("composition-map-agreement");
  CheckResult& proj = report.add("projection-map-agreement");
  for (const auto& [i, j] : pg.composable) {
    const ModelIso& f = pg.isos[i];
    const ModelIso& h = pg.isos[j];
    auto it = pg.composite.find({i, j});
    if (it == pg.composite.end()) continue;
    const ModelIso& fh = pg.isos[it->second];
    for (const Open& v : probes) {
      record(compat, satisfies_pair(f, h, apply_map(g.m_star, v)) == satisfies_arrow(fh, v),
             v.text() + " at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      bool proj_ok =
          satisfies_pair(f, h, apply_map(g.pi1_star, v)) == satisfies_arrow(f, v) &&
          satisfies_pair(f, h, apply_map(g.pi2_star, v)) == satisfies_arrow(h, v);
      record(proj, proj_ok,
             v.text() + " at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  return report;
}

namespace {

std::vector<BasicOpen> budgeted_arrow_basics(const GroupoidPresentation& g, int max_meet_arity,
                                             Rng& rng, std::size_t samples) {
  std::vector<BasicOpen> basics;
  const auto& gens = g.arrows.generators;
  for (const Generator& v : gens) basics.push_back(BasicOpen{{v}});
  if (max_meet_arity >= 2)
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        basics.push_back(BasicOpen::meet_of({gens[i], gens[j]}));
  if (max_meet_arity >= 3)
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Generator> pick;
      for (int c = 0; c < max_meet_arity; ++c)
        pick.push_back(gens[rng.below(gens.size())]);
      basics.push_back(BasicOpen::meet_of(std::move(pick)));
    }
  return basics;
}

std::string set_text(const std::set<std::size_t>& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

VerifyReport verify_adjunction(const GroupoidPresentation& g, const PointGroupoid& pg,
                               int max_meet_arity, unsigned seed, std::size_t samples) {
  VerifyReport report;
  Rng rng(seed);

  CheckResult& retraction = report.add("retraction-syntactic");
  for (const Generator& u : g.objects.generators) {
    const Open atom = Open::atom(u);
    record(retraction, source_lower(g, apply_map(g.s_star, atom)) == atom, u.text());
  }
  CheckResult& retraction_open = report.add("retraction-random-opens");
  for (std::size_t i = 0; i < samples; ++i) {
    Open u = random_open(rng, g.objects, 3, 2);
    record(retraction_open, source_lower(g, apply_map(g.s_star, u)) == u, u.text());
  }

  const auto basics = budgeted_arrow_basics(g, max_meet_arity, rng, samples);

  CheckResult& points_image = report.add("adjunction-points-image");
  CheckResult& unit = report.add("unit-semantic");
  for (const BasicOpen& b : basics) {
    const Open lowered = source_lower(g, b);
    const auto lhs = points_of(pg, lowered);
    const auto rhs = image_under_source(pg, Open::basic(b));
    record(points_image, lhs == rhs,
           Open::basic(b).text() + ": points(s_!)=" + set_text(lhs) + " image=" + set_text(rhs));

    const Open back = apply_map(g.s_star, lowered);
    bool unit_ok = true;
    for (std::size_t f = 0; f < pg.isos.size(); ++f)
      if (satisfies_arrow(pg.isos[f], Open::basic(b)) && !satisfies_arrow(pg.isos[f], back)) {
        unit_ok = false;
        break;
      }
    record(unit, unit_ok, Open::basic(b).text());
  }

  CheckResult& coverage = report.add("coverage-obligation");
  if (!g.arrows.inequalities.empty())
    for (std::size_t s = 0; s < samples; ++s) {
      const FrameInequality& ineq =
          g.arrows.inequalities[rng.below(g.arrows.inequalities.size())];
      const BasicOpen gb = random_basic(rng, g.arrows, 2);
      const Open lhs = source_lower(g, meet(Open::basic(gb), ineq.lhs));
      const Open rhs = source_lower(g, meet(Open::basic(gb), ineq.rhs));
      const auto pl = points_of(pg, lhs);
      const auto pr = points_of(pg, rhs);
      record(coverage, std::includes(pr.begin(), pr.end(), pl.begin(), pl.end()),
             Open::basic(gb).text() + " with " + ineq.lhs.text() + " <= " + ineq.rhs.text());
    }

  return report;
}

VerifyReport verify_frobenius(const GroupoidPresentation& g, const PointGroupoid& pg,
                              unsigned seed, std::size_t samples) {
  VerifyReport report;
  Rng rng(seed);

  CheckResult& syntactic = report.add("frobenius-syntactic");
  for (const Generator& u : g.objects.generators) {
    const Open uo = Open::atom(u);
    const Open su = apply_map(g.s_star, uo);
    for (const Generator& v : g.arrows.generators) {
      const Open vo = Open::atom(v);
      const Open lhs = source_lower(g, meet(su, vo));
      const Open rhs = meet(uo, source_lower(g, vo));
      record(syntactic, lhs == rhs, u.text() + " with " + v.text());
    }
  }

  CheckResult& semantic = report.add("frobenius-semantic");
  for (std::size_t i = 0; i < samples; ++i) {
    const Open u = random_open(rng, g.objects, 2, 2);
    const Open v = random_open(rng, g.arrows, 2, 2);
    const Open lhs = source_lower(g, meet(apply_map(g.s_star, u), v));
    const Open rhs = meet(u, source_lower(g, v));
    record(semantic, points_of(pg, lhs) == points_of(pg, rhs), u.text() + " with " + v.text());
  }

  return report;
}

VerifyReport verify_closure(const GroupoidPresentation& g, const PointGroupoid& pg) {
  VerifyReport report;

  std::vector<Open> opens;
  const auto& gens = g.objects.generators;
  for (const Generator& u : gens) opens.push_back(Open::atom(u));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      opens.push_back(Open::basic(BasicOpen::meet_of({gens[i], gens[j]})));
      opens.push_back(join(Open::atom(gens[i]), Open::atom(gens[j])));
    }

  CheckResult& orbit = report.add("closure-orbit-agreement");
  CheckResult& inflationary = report.add("closure-inflationary");
  CheckResult& idempotent = report.add("closure-idempotent");
  for (const Open& u : opens) {
    const Open cu = closure(g, u);
    const auto pu = points_of(pg, u);
    const auto pcu = points_of(pg, cu);
    record(orbit, pcu == orbit_saturate(pg, pu),
           u.text() + ": closure points " + set_text(pcu));
    record(inflationary, std::includes(pcu.begin(), pcu.end(), pu.begin(), pu.end()), u.text());
    record(idempotent, points_of(pg, closure(g, cu)) == pcu, u.text());
  }

  CheckResult& monotone = report.add("closure-monotone");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Open below = Open::basic(BasicOpen::meet_of({gens[i], gens[j]}));
      const Open above = Open::atom(gens[i]);
      const auto pb = points_of(pg, closure(g, below));
      const auto pa = points_of(pg, closure(g, above));
      record(monotone, std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()),
             below.text() + " <= " + above.text());
    }

  return report;
}

bool is_closure_fixed(const GroupoidPresentation& g, const PointGroupoid& pg, const Open& u) {
  return points_of(pg, closure(g, u)) == points_of(pg, u);
}

}  // namespace gforge
