#include "gforge/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gforge {

std::string_view iso_tag_name(IsoTag tag) {
  switch (tag) {
    case IsoTag::Alpha: return "alpha";
    case IsoTag::Beta: return "beta";
    case IsoTag::Gamma: return "gamma";
  }
  return "alpha";
}

Sort plain_sort(std::string name) {
  Sort s;
  s.base = name;
  s.name = std::move(name);
  return s;
}

RelationSymbol plain_relation(std::string name, std::vector<std::string> signature) {
  RelationSymbol r;
  r.base = name;
  r.name = std::move(name);
  r.signature = std::move(signature);
  return r;
}

Formula Formula::top() { return Formula{}; }

Formula Formula::bottom() {
  Formula f;
  f.kind = Kind::Disjunction;
  return f;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::Disjunction;
  f.children = std::move(parts);
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::Conjunction;
  f.children = std::move(parts);
  return f;
}

Formula Formula::rel(std::string relation, std::vector<std::string> args) {
  Formula f;
  f.kind = Kind::RelAtom;
  f.symbol = std::move(relation);
  f.vars = std::move(args);
  return f;
}

Formula Formula::equality(std::string sort, std::string lhs, std::string rhs) {
  Formula f;
  f.kind = Kind::Equality;
  f.symbol = std::move(sort);
  f.vars = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::exists(std::string var, std::string sort, Formula body) {
  Formula f;
  f.kind = Kind::Exists;
  f.symbol = std::move(sort);
  f.vars = {std::move(var)};
  f.children.push_back(std::move(body));
  return f;
}

const Sort* Theory::sort(std::string_view n) const {
  for (const Sort& s : sorts)
    if (s.name == n) return &s;
  return nullptr;
}

const RelationSymbol* Theory::relation(std::string_view n) const {
  for (const RelationSymbol& r : relations)
    if (r.name == n) return &r;
  return nullptr;
}

namespace {

using Scope = std::map<std::string, std::string>;  // variable -> sort

void check_formula(const Theory& t, const Formula& f, Scope scope, const std::string& axiom,
                   const std::string& path, std::vector<Diagnostic>& out) {
  auto emit = [&](std::string message) { out.push_back({axiom, path, std::move(message)}); };

  switch (f.kind) {
    case Formula::Kind::Top:
      break;
    case Formula::Kind::Disjunction:
    case Formula::Kind::Conjunction:
      for (std::size_t i = 0; i < f.children.size(); ++i)
        check_formula(t, f.children[i], scope, axiom, path + "." + std::to_string(i), out);
      break;
    case Formula::Kind::RelAtom: {
      const RelationSymbol* rel = t.relation(f.symbol);
      if (!rel) {
        emit("unknown relation '" + f.symbol + "'");
        break;
      }
      if (rel->arity() != f.vars.size()) {
        emit("arity mismatch: relation '" + f.symbol + "' expects " +
             std::to_string(rel->arity()) + " arguments, got " + std::to_string(f.vars.size()));
        break;
      }
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        auto it = scope.find(f.vars[i]);
        if (it == scope.end())
          emit("unbound variable '" + f.vars[i] + "'");
        else if (it->second != rel->signature[i])
          emit("argument " + std::to_string(i + 1) + " of '" + f.symbol + "' has sort " +
               rel->signature[i] + " but variable '" + f.vars[i] + "' has sort " + it->second);
      }
      break;
    }
    case Formula::Kind::Equality: {
      if (f.symbol.empty()) {
        emit("equality with unresolved sort");
        break;
      }
      if (!t.sort(f.symbol)) emit("unknown sort '" + f.symbol + "' in equality");
      for (const std::string& v : f.vars) {
        auto it = scope.find(v);
        if (it == scope.end())
          emit("unbound variable '" + v + "'");
        else if (it->second != f.symbol)
          emit("equality at sort " + f.symbol + " applied to variable '" + v + "' of sort " +
               it->second);
      }
      break;
    }
    case Formula::Kind::Exists: {
      if (!t.sort(f.symbol)) emit("unknown sort '" + f.symbol + "' in exists");
      const std::string& v = f.vars.at(0);
      if (scope.count(v)) {
        emit("variable '" + v + "' shadows an enclosing binding");
        break;
      }
      scope[v] = f.symbol;
      check_formula(t, f.children.at(0), scope, axiom, path + ".body", out);
      break;
    }
  }
}

}  // namespace

ValidationReport validate_theory(const Theory& t) {
  ValidationReport report;
  auto& diags = report.diagnostics;

  std::set<std::string> sort_names;
  for (std::size_t i = 0; i < t.sorts.size(); ++i) {
    const Sort& s = t.sorts[i];
    const std::string where = "sorts." + std::to_string(i);
    if (s.name.empty()) diags.push_back({"", where, "empty sort name"});
    if (!sort_names.insert(s.name).second)
      diags.push_back({"", where, "duplicate sort '" + s.name + "'"});
  }

  std::set<std::string> rel_names;
  for (std::size_t i = 0; i < t.relations.size(); ++i) {
    const RelationSymbol& r = t.relations[i];
    const std::string where = "relations." + std::to_string(i);
    if (r.name.empty()) diags.push_back({"", where, "empty relation name"});
    if (!rel_names.insert(r.name).second)
      diags.push_back({"", where, "duplicate relation '" + r.name + "'"});
    for (const std::string& s : r.signature)
      if (!sort_names.count(s))
        diags.push_back({"", where, "relation '" + r.name + "' uses undeclared sort '" + s + "'"});
  }

  std::set<std::string> labels;
  for (const Sequent& ax : t.axioms) {
    if (ax.label.empty()) diags.push_back({ax.label, "", "empty axiom label"});
    if (!labels.insert(ax.label).second)
      diags.push_back({ax.label, "", "duplicate axiom label '" + ax.label + "'"});

    Scope scope;
    bool ctx_ok = true;
    for (const auto& [var, sort] : ax.context) {
      if (var.empty()) diags.push_back({ax.label, "context", "empty context variable"});
      if (!sort_names.count(sort)) {
        diags.push_back({ax.label, "context", "undeclared sort '" + sort + "' in context"});
        ctx_ok = false;
      }
      if (!scope.emplace(var, sort).second) {
        diags.push_back({ax.label, "context", "duplicate context variable '" + var + "'"});
        ctx_ok = false;
      }
    }
    if (!ctx_ok) continue;
    check_formula(t, ax.premise, scope, ax.label, "premise", diags);
    check_formula(t, ax.conclusion, scope, ax.label, "conclusion", diags);
  }

  return report;
}

namespace {

void collect_free(const Theory& t, const Formula& f, std::set<std::string>& bound,
                  std::vector<std::pair<std::string, std::string>>& out) {
  auto add = [&](const std::string& var, const std::string& sort) {
    if (bound.count(var)) return;
    for (const auto& [v, s] : out)
      if (v == var) return;
    out.emplace_back(var, sort);
  };

  switch (f.kind) {
    case Formula::Kind::Top:
      break;
    case Formula::Kind::Disjunction:
    case Formula::Kind::Conjunction:
      for (const Formula& c : f.children) collect_free(t, c, bound, out);
      break;
    case Formula::Kind::RelAtom: {
      const RelationSymbol* rel = t.relation(f.symbol);
      if (!rel || rel->arity() != f.vars.size())
        throw std::invalid_argument("free_variables: ill-sorted relation atom '" + f.symbol + "'");
      for (std::size_t i = 0; i < f.vars.size(); ++i) add(f.vars[i], rel->signature[i]);
      break;
    }
    case Formula::Kind::Equality:
      add(f.vars.at(0), f.symbol);
      add(f.vars.at(1), f.symbol);
      break;
    case Formula::Kind::Exists: {
      const bool inserted = bound.insert(f.vars.at(0)).second;
      collect_free(t, f.children.at(0), bound, out);
      if (inserted) bound.erase(f.vars.at(0));
      break;
    }
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> free_variables(const Theory& t,
                                                                const Formula& f) {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> bound;
  collect_free(t, f, bound, out);
  return out;
}

}  // namespace gforge
