#include "gforge/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace gforge {

const Open& GeneratorMap::image(const Generator& g) const {
  auto it = images.find(g);
  if (it == images.end())
    throw std::invalid_argument("generator map is not defined on " + g.text());
  return it->second;
}

Open apply_map(const GeneratorMap& m, const Open& o) {
  Open acc = Open::bottom();
  for (const BasicOpen& b : o.parts) {
    Open part = Open::top();
    for (const Generator& g : b.gens) part = meet(part, m.image(g));
    acc = join(acc, part);
  }
  return acc;
}

namespace {

Generator with_copy(const Generator& g, CopyTag copy) {
  Generator out = g;
  out.tag = static_cast<std::uint8_t>(copy);
  return out;
}

Generator with_iso(const Generator& g, IsoTag iso) {
  Generator out = g;
  out.tag = static_cast<std::uint8_t>(iso);
  return out;
}

}  // namespace

GroupoidPresentation build_groupoid(const Theory& t, IndexSet idx) {
  GroupoidPresentation g;
  g.theory = t;
  g.arrows_theory = iso_expansion(t);
  g.comp_theory = double_iso_expansion(t);
  g.idx = idx;
  g.objects = propositionalize(t, idx);
  g.arrows = propositionalize(g.arrows_theory, idx);
  g.comp_domain = propositionalize(g.comp_theory, idx);

  g.s_star = {Provenance::Objects, Provenance::Arrows, {}};
  g.t_star = {Provenance::Objects, Provenance::Arrows, {}};
  for (const Generator& gen : g.objects.generators) {
    g.s_star.images[gen] = Open::atom(with_copy(gen, CopyTag::One));
    g.t_star.images[gen] = Open::atom(with_copy(gen, CopyTag::Two));
  }

  g.e_star = {Provenance::Arrows, Provenance::Objects, {}};
  g.i_star = {Provenance::Arrows, Provenance::Arrows, {}};
  g.m_star = {Provenance::Arrows, Provenance::CompositionDomain, {}};
  g.pi1_star = {Provenance::Arrows, Provenance::CompositionDomain, {}};
  g.pi2_star = {Provenance::Arrows, Provenance::CompositionDomain, {}};
  for (const Generator& gen : g.arrows.generators) {
    if (gen.kind == Generator::Kind::Alpha) {
      const int n = gen.indices[0], m = gen.indices[1];
      g.e_star.images[gen] = Open::atom(Generator::per(gen.symbol, n, m));
      g.i_star.images[gen] = Open::atom(Generator::alpha(IsoTag::Alpha, gen.symbol, m, n));
      g.pi1_star.images[gen] = Open::atom(with_iso(gen, IsoTag::Beta));
      g.pi2_star.images[gen] = Open::atom(with_iso(gen, IsoTag::Gamma));
      // [alpha^X(n) = p] maps to the relational composite of beta and gamma.
      std::vector<BasicOpen> comp;
      for (int mid = 0; mid < idx.k; ++mid)
        comp.push_back(BasicOpen::meet_of({Generator::alpha(IsoTag::Beta, gen.symbol, n, mid),
                                           Generator::alpha(IsoTag::Gamma, gen.symbol, mid, m)}));
      g.m_star.images[gen] = normalize(std::move(comp));
      continue;
    }
    const bool first = gen.copy() == CopyTag::One;
    g.e_star.images[gen] = Open::atom(with_copy(gen, CopyTag::None));
    g.i_star.images[gen] = Open::atom(with_copy(gen, first ? CopyTag::Two : CopyTag::One));
    g.m_star.images[gen] = Open::atom(with_copy(gen, first ? CopyTag::One : CopyTag::Three));
    g.pi1_star.images[gen] = Open::atom(gen);
    g.pi2_star.images[gen] = Open::atom(with_copy(gen, first ? CopyTag::Two : CopyTag::Three));
  }

  return g;
}

namespace {

struct LoweredBasic {
  std::vector<Generator> kept;  // copy-1 atoms, tags stripped
  // codomain atoms, each listing the V-slot of every index position
  struct CodomainRel {
    std::string relation;
    std::vector<std::size_t> slots;
  };
  struct CodomainPer {
    std::string sort;
    std::size_t slot_n, slot_m;
  };
  struct AlphaAtom {
    std::string sort;
    int domain_index;
    std::size_t slot;
  };
  std::vector<CodomainRel> rels;
  std::vector<CodomainPer> pers;
  std::vector<AlphaAtom> alphas;
  std::vector<std::pair<int, std::string>> variables;  // V, first-occurrence order
};

}  // namespace

Open source_lower(const GroupoidPresentation& g, const BasicOpen& b) {
  LoweredBasic low;
  auto slot_for = [&](int index, const std::string& sort) {
    for (std::size_t i = 0; i < low.variables.size(); ++i)
      if (low.variables[i].first == index && low.variables[i].second == sort) return i;
    low.variables.emplace_back(index, sort);
    return low.variables.size() - 1;
  };

  for (const Generator& gen : b.gens) {
    if (!g.arrows.owns(gen))
      throw std::invalid_argument("source_lower: " + gen.text() +
                                  " is not an arrow-presentation generator");
    if (gen.kind == Generator::Kind::Alpha) {
      low.alphas.push_back({gen.symbol, gen.indices[0], slot_for(gen.indices[1], gen.symbol)});
      continue;
    }
    if (gen.copy() == CopyTag::One) {
      low.kept.push_back(with_copy(gen, CopyTag::None));
      continue;
    }
    // copy-2 atom: every index becomes a fresh variable
    if (gen.kind == Generator::Kind::Per) {
      low.pers.push_back({gen.symbol, slot_for(gen.indices[0], gen.symbol),
                          slot_for(gen.indices[1], gen.symbol)});
    } else {
      const RelationSymbol* rel = g.theory.relation(gen.symbol);
      if (!rel)
        throw std::invalid_argument("source_lower: unknown base relation " + gen.symbol);
      LoweredBasic::CodomainRel cr;
      cr.relation = gen.symbol;
      for (std::size_t i = 0; i < gen.indices.size(); ++i)
        cr.slots.push_back(slot_for(gen.indices[i], rel->signature[i]));
      low.rels.push_back(std::move(cr));
    }
  }

  // Join over all assignments of the fresh variables.
  std::vector<BasicOpen> parts;
  std::vector<int> y(low.variables.size(), 0);
  while (true) {
    std::vector<Generator> gens = low.kept;
    for (const auto& cr : low.rels) {
      std::vector<int> tuple;
      tuple.reserve(cr.slots.size());
      for (std::size_t s : cr.slots) tuple.push_back(y[s]);
      gens.push_back(Generator::rel(cr.relation, std::move(tuple)));
    }
    for (const auto& cp : low.pers)
      gens.push_back(Generator::per(cp.sort, y[cp.slot_n], y[cp.slot_m]));
    for (const auto& aa : low.alphas)
      gens.push_back(Generator::per(aa.sort, aa.domain_index, y[aa.slot]));
    parts.push_back(BasicOpen::meet_of(std::move(gens)));

    std::size_t i = y.size();
    while (i > 0) {
      if (++y[i - 1] < g.idx.k) break;
      y[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return normalize(std::move(parts));
}

Open source_lower(const GroupoidPresentation& g, const Open& o) {
  Open acc = Open::bottom();
  for (const BasicOpen& b : o.parts) acc = join(acc, source_lower(g, b));
  return acc;
}

Open target_lower(const GroupoidPresentation& g, const BasicOpen& b) {
  return source_lower(g, apply_map(g.i_star, Open::basic(b)));
}

Open target_lower(const GroupoidPresentation& g, const Open& o) {
  Open acc = Open::bottom();
  for (const BasicOpen& b : o.parts) acc = join(acc, target_lower(g, b));
  return acc;
}

Open closure(const GroupoidPresentation& g, const Open& o) {
  return source_lower(g, apply_map(g.t_star, o));
}

}  // namespace gforge
