#include "gforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gforge/json_io.hpp"
#include "gforge/openexpr.hpp"
#include "gforge/oracle.hpp"
#include "gforge/parser.hpp"

namespace gforge::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SizeGuard make_guard(const RunConfig& cfg) {
  SizeGuard guard;
  guard.disabled = cfg.unsafe_no_guard;
  if (const char* env = std::getenv("GFORGE_MAX_STRUCTURES")) {
    try {
      guard.max_structures = std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GFORGE_MAX_STRUCTURES is not a number: " + std::string(env));
    }
  }
  return guard;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  Theory t = parse_theory(read_file(cfg.input));
  out << "ok: theory " << (t.name.empty() ? "<unnamed>" : t.name) << " (" << t.sorts.size()
      << " sorts, " << t.relations.size() << " relations, " << t.axioms.size() << " axioms)\n";
  return 0;
}

int cmd_emit(const RunConfig& cfg, std::ostream& out) {
  Theory t = parse_theory(read_file(cfg.input));
  GroupoidPresentation g = build_groupoid(t, IndexSet(cfg.k));
  nlohmann::json doc;
  if (cfg.which == "objects")
    doc["presentation"] = presentation_to_json(g.objects);
  else if (cfg.which == "arrows")
    doc["presentation"] = presentation_to_json(g.arrows);
  else if (cfg.which == "comp")
    doc["presentation"] = presentation_to_json(g.comp_domain);
  else
    doc["groupoid"] = groupoid_to_json(g);
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_adjoint(const RunConfig& cfg, std::ostream& out) {
  Theory t = parse_theory(read_file(cfg.input));
  GroupoidPresentation g = build_groupoid(t, IndexSet(cfg.k));
  Open open = parse_open(cfg.expr, t, g.arrows);
  Open lowered = source_lower(g, open);
  if (cfg.format == "json") {
    nlohmann::json doc{{"command", "adjoint"},
                       {"k", cfg.k},
                       {"expr", cfg.expr},
                       {"result", open_to_json(lowered)}};
    out << doc.dump(2) << "\n";
  } else {
    out << lowered.text() << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Theory t = parse_theory(read_file(cfg.input));
  GroupoidPresentation g = build_groupoid(t, IndexSet(cfg.k));
  PointGroupoid pg = build_point_groupoid(t, IndexSet(cfg.k), make_guard(cfg));

  VerifyReport report;
  auto append = [&](const VerifyReport& part) {
    for (const CheckResult& c : part.checks) report.checks.push_back(c);
  };
  if (cfg.suite == "laws" || cfg.suite == "all") {
    append(verify_groupoid_laws(pg));
    append(verify_structure_maps(g, pg, cfg.seed, std::min<std::size_t>(cfg.samples, 50)));
  }
  if (cfg.suite == "adjunction" || cfg.suite == "all")
    append(verify_adjunction(g, pg, cfg.max_meet, cfg.seed, cfg.samples));
  if (cfg.suite == "frobenius" || cfg.suite == "all")
    append(verify_frobenius(g, pg, cfg.seed, cfg.samples));
  if (cfg.suite == "closure" || cfg.suite == "all") append(verify_closure(g, pg));

  if (cfg.format == "json") {
    nlohmann::json doc = report_to_json(report);
    doc["command"] = "verify";
    doc["theory"] = t.name;
    doc["k"] = cfg.k;
    doc["seed"] = cfg.seed;
    doc["suite"] = cfg.suite;
    out << doc.dump(2) << "\n";
  } else {
    out << "verify " << cfg.suite << " (k=" << cfg.k << ", seed=" << cfg.seed << ")\n";
    for (const CheckResult& c : report.checks) {
      out << (c.ok() ? "  [pass] " : "  [FAIL] ") << c.name << " (" << c.checked << " checked)\n";
      for (const std::string& ex : c.counterexamples) out << "         counterexample: " << ex << "\n";
    }
    out << (report.ok() ? "all checks passed\n" : "checks FAILED\n");
  }
  return report.ok() ? 0 : 1;
}

int cmd_models(const RunConfig& cfg, std::ostream& out) {
  Theory t = parse_theory(read_file(cfg.input));
  auto models = enumerate_models(t, IndexSet(cfg.k), make_guard(cfg));
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const IndexedModel& m : models) arr.push_back(model_to_json(m));
    nlohmann::json doc{{"command", "models"}, {"k", cfg.k}, {"count", models.size()},
                       {"models", std::move(arr)}};
    out << doc.dump(2) << "\n";
  } else {
    out << models.size() << " models\n";
    if (cfg.list_models)
      for (std::size_t i = 0; i < models.size(); ++i)
        out << "  model " << i << ": " << model_to_json(models[i]).dump() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"gforge: compile a geometric theory into the frame presentations and structure\n"
               "maps of its localic groupoid at a finite index truncation, and check the\n"
               "symbolic kernel against brute-force enumeration of indexed models."};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_k) {
    sub->add_option("file", cfg.input, "theory file (.gt)")->required();
    if (needs_k) sub->add_option("--k", cfg.k, "index truncation (default 2)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "parse and validate a theory file");
  add_common(check, false);

  CLI::App* emit = app.add_subcommand("emit", "emit presentations as JSON");
  add_common(emit, true);
  emit->add_option("--which", cfg.which, "objects | arrows | comp | groupoid")
      ->check(CLI::IsMember({"objects", "arrows", "comp", "groupoid"}));

  CLI::App* adjoint =
      app.add_subcommand("adjoint", "apply the source map's left adjoint to an arrow open");
  add_common(adjoint, true);
  adjoint->add_option("expr", cfg.expr, "open expression, e.g. \"leq2(1,2) & alpha.X(1)=1\"")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "run oracle-backed verification suites");
  add_common(verify, true);
  verify->add_option("--suite", cfg.suite, "laws | adjunction | frobenius | closure | all")
      ->check(CLI::IsMember({"laws", "adjunction", "frobenius", "closure", "all"}));
  verify->add_option("--seed", cfg.seed, "seed for sampled checks (recorded in the report)");
  verify->add_option("--max-meet", cfg.max_meet, "largest meet arity of checked basic opens");
  verify->add_option("--samples", cfg.samples, "number of sampled checks per suite");
  verify->add_flag("--unsafe-no-guard", cfg.unsafe_no_guard, "disable the enumeration size guard");

  CLI::App* models = app.add_subcommand("models", "enumerate indexed models");
  add_common(models, true);
  models->add_flag("--list", cfg.list_models, "print each model");
  models->add_flag("--unsafe-no-guard", cfg.unsafe_no_guard, "disable the enumeration size guard");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "check") return cmd_check(cfg, out);
    if (cfg.command == "emit") return cmd_emit(cfg, out);
    if (cfg.command == "adjoint") return cmd_adjoint(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "models") return cmd_models(cfg, out);
    err << "gforge: unknown command " << cfg.command << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    err << "gforge: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "gforge: " << e.what() << " [bytes " << e.span.start << ".." << e.span.end << "]\n";
    return 1;
  } catch (const validation_error& e) {
    err << "gforge: " << e.what() << "\n";
    for (const Diagnostic& d : e.report.diagnostics)
      err << "  " << (d.axiom.empty() ? "<theory>" : d.axiom)
          << (d.path.empty() ? "" : " at " + d.path) << ": " << d.message << "\n";
    return 1;
  } catch (const size_guard_error& e) {
    err << "gforge: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "gforge: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gforge::cli
