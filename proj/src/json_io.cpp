#include "gforge/json_io.hpp"

namespace gforge {

using nlohmann::json;

json generator_to_json(const Generator& g) {
  json out;
  switch (g.kind) {
    case Generator::Kind::Per:
      out["kind"] = "per";
      out["sort"] = g.symbol;
      out["copy"] = static_cast<int>(g.copy());
      out["n"] = g.indices[0];
      out["m"] = g.indices[1];
      break;
    case Generator::Kind::Rel:
      out["kind"] = "rel";
      out["relation"] = g.symbol;
      out["copy"] = static_cast<int>(g.copy());
      out["args"] = g.indices;
      break;
    case Generator::Kind::Alpha:
      out["kind"] = "iso";
      out["iso"] = std::string(iso_tag_name(g.iso()));
      out["sort"] = g.symbol;
      out["n"] = g.indices[0];
      out["m"] = g.indices[1];
      break;
  }
  out["text"] = g.text();
  return out;
}

json open_to_json(const Open& o) {
  json out = json::array();
  for (const BasicOpen& b : o.parts) {
    json basic = json::array();
    for (const Generator& g : b.gens) basic.push_back(g.text());
    out.push_back(std::move(basic));
  }
  return out;
}

json presentation_to_json(const FramePresentation& p) {
  json out;
  out["provenance"] = std::string(provenance_name(p.provenance));
  out["theory"] = p.theory_name;
  out["k"] = p.k;
  json gens = json::array();
  for (const Generator& g : p.generators) gens.push_back(generator_to_json(g));
  out["generators"] = std::move(gens);
  json ineqs = json::array();
  for (const FrameInequality& ineq : p.inequalities)
    ineqs.push_back({{"lhs", open_to_json(ineq.lhs)}, {"rhs", open_to_json(ineq.rhs)}});
  out["inequalities"] = std::move(ineqs);
  return out;
}

namespace {

json map_to_json(const GeneratorMap& m) {
  json images = json::object();
  for (const auto& [gen, open] : m.images) images[gen.text()] = open_to_json(open);
  return {{"domain", std::string(provenance_name(m.domain))},
          {"codomain", std::string(provenance_name(m.codomain))},
          {"images", std::move(images)}};
}

}  // namespace

json groupoid_to_json(const GroupoidPresentation& g) {
  json out;
  out["k"] = g.idx.k;
  out["theory"] = g.theory.name;
  out["objects"] = presentation_to_json(g.objects);
  out["arrows"] = presentation_to_json(g.arrows);
  out["composition_domain"] = presentation_to_json(g.comp_domain);
  out["maps"] = {{"s_star", map_to_json(g.s_star)},     {"t_star", map_to_json(g.t_star)},
                 {"e_star", map_to_json(g.e_star)},     {"i_star", map_to_json(g.i_star)},
                 {"m_star", map_to_json(g.m_star)},     {"pi1_star", map_to_json(g.pi1_star)},
                 {"pi2_star", map_to_json(g.pi2_star)}};
  return out;
}

json model_to_json(const IndexedModel& m) {
  json pers = json::object();
  for (const auto& [sort, per] : m.pers) {
    json pairs = json::array();
    for (int n = 0; n < per.k; ++n)
      for (int v = 0; v < per.k; ++v)
        if (per.at(n, v)) pairs.push_back({n, v});
    pers[sort] = std::move(pairs);
  }
  json rels = json::object();
  for (const auto& [rel, tuples] : m.rels) {
    json arr = json::array();
    for (const auto& tuple : tuples) arr.push_back(tuple);
    rels[rel] = std::move(arr);
  }
  return {{"pers", std::move(pers)}, {"rels", std::move(rels)}};
}

json report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json entry;
    entry["name"] = c.name;
    entry["checked"] = c.checked;
    entry["violations"] = c.counterexamples.size() + c.suppressed;
    entry["counterexamples"] = c.counterexamples;
    entry["ok"] = c.ok();
    checks.push_back(std::move(entry));
  }
  return {{"checks", std::move(checks)}, {"ok", r.ok()}};
}

}  // namespace gforge
