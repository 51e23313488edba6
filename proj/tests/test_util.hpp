#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gforge/parser.hpp"

namespace gforge::test {

inline std::string theory_path(const std::string& file) {
  return std::string(GFORGE_THEORY_DIR) + "/" + file;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Theory load_theory(const std::string& file) {
  return parse_theory(slurp(theory_path(file)));
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Ordered Bell numbers: a(0)=1, a(n) = sum_{i=1..n} C(n,i) a(n-i).
inline std::vector<long long> fubini_numbers(int upto) {
  std::vector<long long> a(upto + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= upto; ++n)
    for (int i = 1; i <= n; ++i) a[n] += binomial(n, i) * a[n - i];
  return a;
}

// Count of inhabited total orders on subquotients of {0..k-1}:
// sum over nonempty domains of ordered set partitions.
inline long long expected_total_order_models(int k) {
  auto fub = fubini_numbers(k);
  long long total = 0;
  for (int s = 1; s <= k; ++s) total += binomial(k, s) * fub[s];
  return total;
}

// Seeded generator of random valid theories whose rendered form reparses to
// the identical AST (n-ary connectives with >= 2 children, no shadowing).
struct TheoryGen {
  std::mt19937 eng;
  int fresh = 0;

  explicit TheoryGen(unsigned seed) : eng(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : eng() % n; }

  Formula formula(const Theory& t, std::vector<std::pair<std::string, std::string>> scope,
                  int depth) {
    std::vector<int> options = {0, 1};  // true, false
    std::vector<const RelationSymbol*> usable;
    for (const RelationSymbol& r : t.relations) {
      bool ok = true;
      for (const std::string& s : r.signature) {
        bool found = false;
        for (const auto& [v, vs] : scope) found = found || vs == s;
        if (!found) ok = false;
      }
      if (ok) usable.push_back(&r);
    }
    if (!usable.empty()) options.insert(options.end(), {2, 2, 2});
    if (!scope.empty()) options.push_back(3);                    // equality
    if (depth > 0) options.insert(options.end(), {4, 5});        // conj, disj
    if (depth > 0 && !t.sorts.empty()) options.push_back(6);     // exists

    switch (options[below(options.size())]) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      case 2: {
        const RelationSymbol* r = usable[below(usable.size())];
        std::vector<std::string> args;
        for (const std::string& s : r->signature) {
          std::vector<std::string> candidates;
          for (const auto& [v, vs] : scope)
            if (vs == s) candidates.push_back(v);
          args.push_back(candidates[below(candidates.size())]);
        }
        return Formula::rel(r->name, std::move(args));
      }
      case 3: {
        const auto& [v, s] = scope[below(scope.size())];
        std::vector<std::string> same;
        for (const auto& [v2, s2] : scope)
          if (s2 == s) same.push_back(v2);
        return Formula::equality(s, v, same[below(same.size())]);
      }
      case 4: {
        std::vector<Formula> parts;
        std::size_t n = 2 + below(2);
        for (std::size_t i = 0; i < n; ++i) parts.push_back(formula(t, scope, depth - 1));
        return Formula::conjunction(std::move(parts));
      }
      case 5: {
        std::vector<Formula> parts;
        std::size_t n = 2 + below(2);
        for (std::size_t i = 0; i < n; ++i) parts.push_back(formula(t, scope, depth - 1));
        return Formula::disjunction(std::move(parts));
      }
      default: {
        std::string var = "q" + std::to_string(fresh++);
        const Sort& s = t.sorts[below(t.sorts.size())];
        auto inner = scope;
        inner.emplace_back(var, s.name);
        return Formula::exists(var, s.name, formula(t, inner, depth - 1));
      }
    }
  }

  Theory next() {
    Theory t;
    t.name = "rand" + std::to_string(below(10000));
    std::size_t nsorts = below(4);
    for (std::size_t i = 0; i < nsorts; ++i) t.sorts.push_back(plain_sort("S" + std::to_string(i)));
    std::size_t nrels = below(5);
    for (std::size_t i = 0; i < nrels; ++i) {
      std::vector<std::string> sig;
      if (!t.sorts.empty()) {
        std::size_t arity = below(3);
        for (std::size_t j = 0; j < arity; ++j)
          sig.push_back(t.sorts[below(t.sorts.size())].name);
      }
      t.relations.push_back(plain_relation("r" + std::to_string(i), std::move(sig)));
    }
    std::size_t naxioms = below(5);
    for (std::size_t i = 0; i < naxioms; ++i) {
      Sequent ax;
      ax.label = "ax" + std::to_string(i);
      std::size_t nvars = t.sorts.empty() ? 0 : below(4);
      for (std::size_t j = 0; j < nvars; ++j)
        ax.context.emplace_back("v" + std::to_string(j), t.sorts[below(t.sorts.size())].name);
      ax.premise = formula(t, ax.context, 2);
      ax.conclusion = formula(t, ax.context, 2);
      t.axioms.push_back(std::move(ax));
    }
    return t;
  }
};

}  // namespace gforge::test
