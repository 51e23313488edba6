#include "gforge/propositional.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gforge {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Objects: return "objects";
    case Provenance::Arrows: return "arrows";
    case Provenance::CompositionDomain: return "composition-domain";
  }
  return "objects";
}

bool FramePresentation::owns(const Generator& g) const {
  return std::binary_search(generators.begin(), generators.end(), g);
}

bool FramePresentation::owns(const Open& o) const {
  for (const BasicOpen& b : o.parts)
    for (const Generator& g : b.gens)
      if (!owns(g)) return false;
  return true;
}

namespace {

void for_each_tuple(int k, std::size_t arity, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(arity, 0);
  while (true) {
    fn(tuple);
    std::size_t i = arity;
    while (i > 0) {
      if (++tuple[i - 1] < k) break;
      tuple[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

Generator relation_generator(const RelationSymbol& rel, const std::vector<int>& tuple,
                             CopyTag force_copy) {
  if (rel.iso) return Generator::alpha(*rel.iso, rel.base, tuple.at(0), tuple.at(1));
  CopyTag copy = rel.copy == CopyTag::None ? force_copy : rel.copy;
  return Generator::rel(rel.base, tuple, copy);
}

Generator sort_generator(const Sort& sort, int n, int m, CopyTag force_copy) {
  CopyTag copy = sort.copy == CopyTag::None ? force_copy : sort.copy;
  return Generator::per(sort.base, n, m, copy);
}

}  // namespace

Open instantiate_formula(const Theory& t, const Formula& f,
                         const std::map<std::string, int>& substitution, IndexSet idx,
                         CopyTag force_copy) {
  auto lookup = [&](const std::string& var) {
    auto it = substitution.find(var);
    if (it == substitution.end())
      throw std::invalid_argument("instantiate_formula: unbound variable '" + var + "'");
    if (!idx.contains(it->second))
      throw std::invalid_argument("instantiate_formula: index out of range for '" + var + "'");
    return it->second;
  };

  switch (f.kind) {
    case Formula::Kind::Top:
      return Open::top();
    case Formula::Kind::Disjunction: {
      Open acc = Open::bottom();
      for (const Formula& c : f.children)
        acc = join(acc, instantiate_formula(t, c, substitution, idx, force_copy));
      return acc;
    }
    case Formula::Kind::Conjunction: {
      Open acc = Open::top();
      for (const Formula& c : f.children)
        acc = meet(acc, instantiate_formula(t, c, substitution, idx, force_copy));
      return acc;
    }
    case Formula::Kind::RelAtom: {
      const RelationSymbol* rel = t.relation(f.symbol);
      if (!rel) throw std::invalid_argument("instantiate_formula: unknown relation " + f.symbol);
      std::vector<int> tuple;
      tuple.reserve(f.vars.size());
      for (const std::string& v : f.vars) tuple.push_back(lookup(v));
      return Open::atom(relation_generator(*rel, tuple, force_copy));
    }
    case Formula::Kind::Equality: {
      const Sort* sort = t.sort(f.symbol);
      if (!sort) throw std::invalid_argument("instantiate_formula: unknown sort " + f.symbol);
      return Open::atom(sort_generator(*sort, lookup(f.vars[0]), lookup(f.vars[1]), force_copy));
    }
    case Formula::Kind::Exists: {
      Open acc = Open::bottom();
      std::map<std::string, int> inner = substitution;
      for (int n = 0; n < idx.k; ++n) {
        inner[f.vars[0]] = n;
        acc = join(acc, instantiate_formula(t, f.children[0], inner, idx, force_copy));
      }
      return acc;
    }
  }
  return Open::bottom();
}

FramePresentation propositionalize(const Theory& t, IndexSet idx) {
  ValidationReport report = validate_theory(t);
  if (!report.ok())
    throw validation_error("propositionalize: theory does not validate: " +
                               report.diagnostics.front().message,
                           report);

  FramePresentation p;
  p.theory_name = t.name;
  p.k = idx.k;
  p.provenance = Provenance::Objects;
  for (const RelationSymbol& r : t.relations) {
    if (r.iso && *r.iso != IsoTag::Alpha) p.provenance = Provenance::CompositionDomain;
    else if (r.iso && p.provenance == Provenance::Objects) p.provenance = Provenance::Arrows;
  }
  for (const Sort& s : t.sorts)
    if (s.copy != CopyTag::None && p.provenance == Provenance::Objects)
      p.provenance = Provenance::Arrows;

  // Generators.
  for (const Sort& s : t.sorts)
    for (int n = 0; n < idx.k; ++n)
      for (int m = 0; m < idx.k; ++m) p.generators.push_back(sort_generator(s, n, m, CopyTag::None));
  for (const RelationSymbol& r : t.relations)
    for_each_tuple(idx.k, r.arity(), [&](const std::vector<int>& tuple) {
      p.generators.push_back(relation_generator(r, tuple, CopyTag::None));
    });
  std::sort(p.generators.begin(), p.generators.end());

  std::set<FrameInequality> seen;
  auto add = [&](Open lhs, Open rhs) {
    FrameInequality ineq{std::move(lhs), std::move(rhs)};
    if (seen.insert(ineq).second) p.inequalities.push_back(std::move(ineq));
  };

  // Symmetry and transitivity of each partial equivalence relation.
  for (const Sort& s : t.sorts) {
    auto per = [&](int n, int m) { return sort_generator(s, n, m, CopyTag::None); };
    for (int n = 0; n < idx.k; ++n)
      for (int m = 0; m < idx.k; ++m) {
        add(Open::atom(per(n, m)), Open::atom(per(m, n)));
        for (int l = 0; l < idx.k; ++l)
          add(Open::basic(BasicOpen::meet_of({per(n, m), per(m, l)})), Open::atom(per(n, l)));
      }
  }

  // Compatibility of each relation with the equivalences, and
  // self-relatedness of related tuples. Degenerate for arity 0.
  for (const RelationSymbol& r : t.relations) {
    if (r.arity() == 0) continue;
    std::vector<const Sort*> sig;
    for (const std::string& s : r.signature) sig.push_back(t.sort(s));
    for_each_tuple(idx.k, r.arity(), [&](const std::vector<int>& n) {
      Generator head = relation_generator(r, n, CopyTag::None);
      for_each_tuple(idx.k, r.arity(), [&](const std::vector<int>& m) {
        std::vector<Generator> lhs{head};
        for (std::size_t i = 0; i < n.size(); ++i)
          lhs.push_back(sort_generator(*sig[i], n[i], m[i], CopyTag::None));
        add(Open::basic(BasicOpen::meet_of(std::move(lhs))),
            Open::atom(relation_generator(r, m, CopyTag::None)));
      });
      std::vector<Generator> self;
      for (std::size_t i = 0; i < n.size(); ++i)
        self.push_back(sort_generator(*sig[i], n[i], n[i], CopyTag::None));
      add(Open::atom(head), Open::basic(BasicOpen::meet_of(std::move(self))));
    });
  }

  // One instance of every theory axiom per context tuple, guarded by
  // self-relatedness of the instantiating indices.
  for (const Sequent& ax : t.axioms) {
    std::vector<const Sort*> ctx_sorts;
    for (const auto& [var, sort] : ax.context) ctx_sorts.push_back(t.sort(sort));
    for_each_tuple(idx.k, ax.context.size(), [&](const std::vector<int>& n) {
      std::map<std::string, int> subst;
      std::vector<Generator> guard;
      for (std::size_t i = 0; i < n.size(); ++i) {
        subst[ax.context[i].first] = n[i];
        guard.push_back(sort_generator(*ctx_sorts[i], n[i], n[i], CopyTag::None));
      }
      Open lhs = meet(Open::basic(BasicOpen::meet_of(std::move(guard))),
                      instantiate_formula(t, ax.premise, subst, idx));
      Open rhs = instantiate_formula(t, ax.conclusion, subst, idx);
      add(std::move(lhs), std::move(rhs));
    });
  }

  return p;
}

namespace {

std::string tagged(const std::string& base, int copy) {
  return base + "$" + std::to_string(copy);
}

Formula retag_formula(const Formula& f, int copy) {
  Formula out = f;
  switch (f.kind) {
    case Formula::Kind::Top:
      break;
    case Formula::Kind::Disjunction:
    case Formula::Kind::Conjunction:
      for (std::size_t i = 0; i < f.children.size(); ++i)
        out.children[i] = retag_formula(f.children[i], copy);
      break;
    case Formula::Kind::RelAtom:
    case Formula::Kind::Equality:
      out.symbol = tagged(f.symbol, copy);
      break;
    case Formula::Kind::Exists:
      out.symbol = tagged(f.symbol, copy);
      out.children[0] = retag_formula(f.children[0], copy);
      break;
  }
  return out;
}

Formula conj_of(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::top();
  if (parts.size() == 1) return std::move(parts.front());
  return Formula::conjunction(std::move(parts));
}

struct IsoSpec {
  IsoTag tag;
  int from;
  int to;
};

Theory expand_copies(const Theory& t, int copies, const std::vector<IsoSpec>& isos) {
  Theory out;
  out.name = t.name + (copies == 2 ? "_iso" : "_iso_iso");

  for (int c = 1; c <= copies; ++c)
    for (const Sort& s : t.sorts) {
      Sort copy;
      copy.name = tagged(s.name, c);
      copy.base = s.name;
      copy.copy = static_cast<CopyTag>(c);
      out.sorts.push_back(std::move(copy));
    }

  for (int c = 1; c <= copies; ++c)
    for (const RelationSymbol& r : t.relations) {
      RelationSymbol copy;
      copy.name = tagged(r.name, c);
      copy.base = r.name;
      copy.copy = static_cast<CopyTag>(c);
      for (const std::string& s : r.signature) copy.signature.push_back(tagged(s, c));
      out.relations.push_back(std::move(copy));
    }

  for (const IsoSpec& iso : isos)
    for (const Sort& s : t.sorts) {
      RelationSymbol graph;
      graph.name = std::string(iso_tag_name(iso.tag)) + "$" + s.name;
      graph.base = s.name;
      graph.iso = iso.tag;
      graph.signature = {tagged(s.name, iso.from), tagged(s.name, iso.to)};
      out.relations.push_back(std::move(graph));
    }

  for (int c = 1; c <= copies; ++c)
    for (const Sequent& ax : t.axioms) {
      Sequent copy;
      copy.label = tagged(ax.label, c);
      for (const auto& [var, sort] : ax.context) copy.context.emplace_back(var, tagged(sort, c));
      copy.premise = retag_formula(ax.premise, c);
      copy.conclusion = retag_formula(ax.conclusion, c);
      out.axioms.push_back(std::move(copy));
    }

  for (const IsoSpec& iso : isos) {
    const std::string tag(iso_tag_name(iso.tag));
    for (const Sort& s : t.sorts) {
      const std::string graph = tag + "$" + s.name;
      const std::string dom = tagged(s.name, iso.from);
      const std::string cod = tagged(s.name, iso.to);

      // Combined well-definedness and injectivity, both directions.
      std::vector<std::pair<std::string, std::string>> ctx = {
          {"x", dom}, {"y", cod}, {"xp", dom}, {"yp", cod}};
      Formula both = conj_of({Formula::rel(graph, {"x", "y"}), Formula::rel(graph, {"xp", "yp"})});
      Formula lhs = conj_of({both, Formula::equality(dom, "x", "xp")});
      Formula rhs = conj_of({both, Formula::equality(cod, "y", "yp")});
      out.axioms.push_back({tag + "_wd_fwd$" + s.name, ctx, lhs, rhs});
      out.axioms.push_back({tag + "_wd_bwd$" + s.name, ctx, rhs, lhs});

      out.axioms.push_back({tag + "_total$" + s.name,
                            {{"x", dom}},
                            Formula::top(),
                            Formula::exists("y", cod, Formula::rel(graph, {"x", "y"}))});
      out.axioms.push_back({tag + "_surj$" + s.name,
                            {{"y", cod}},
                            Formula::top(),
                            Formula::exists("x", dom, Formula::rel(graph, {"x", "y"}))});
    }

    // Transport of each relation along the isomorphism, both directions.
    for (const RelationSymbol& r : t.relations) {
      std::vector<std::pair<std::string, std::string>> ctx;
      std::vector<Formula> alphas;
      std::vector<std::string> xs, ys;
      for (std::size_t i = 0; i < r.arity(); ++i) {
        xs.push_back("x" + std::to_string(i + 1));
        ctx.emplace_back(xs.back(), tagged(r.signature[i], iso.from));
      }
      for (std::size_t i = 0; i < r.arity(); ++i) {
        ys.push_back("y" + std::to_string(i + 1));
        ctx.emplace_back(ys.back(), tagged(r.signature[i], iso.to));
      }
      for (std::size_t i = 0; i < r.arity(); ++i)
        alphas.push_back(Formula::rel(tag + "$" + r.signature[i], {xs[i], ys[i]}));

      std::vector<Formula> lhs_parts = alphas;
      lhs_parts.push_back(Formula::rel(tagged(r.name, iso.from), xs));
      std::vector<Formula> rhs_parts = alphas;
      rhs_parts.push_back(Formula::rel(tagged(r.name, iso.to), ys));
      Formula lhs = conj_of(std::move(lhs_parts));
      Formula rhs = conj_of(std::move(rhs_parts));
      out.axioms.push_back({tag + "_pres_fwd$" + r.name, ctx, lhs, rhs});
      out.axioms.push_back({tag + "_pres_bwd$" + r.name, ctx, rhs, lhs});
    }
  }

  return out;
}

void require_valid(const Theory& t, const char* who) {
  ValidationReport report = validate_theory(t);
  if (!report.ok())
    throw validation_error(std::string(who) + ": theory does not validate: " +
                               report.diagnostics.front().message,
                           report);
}

}  // namespace

Theory iso_expansion(const Theory& t) {
  require_valid(t, "iso_expansion");
  return expand_copies(t, 2, {{IsoTag::Alpha, 1, 2}});
}

Theory double_iso_expansion(const Theory& t) {
  require_valid(t, "double_iso_expansion");
  return expand_copies(t, 3, {{IsoTag::Beta, 1, 2}, {IsoTag::Gamma, 2, 3}});
}

}  // namespace gforge
