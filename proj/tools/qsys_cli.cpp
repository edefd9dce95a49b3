// qsys: command-line front end for the qsys library.
//
// Exit status: 0 success / valid, 1 invalid input structure, failed axiom
// or invariance mismatch, 2 parse or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qsys/algebra.hpp"
#include "qsys/colouring.hpp"
#include "qsys/diagram.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/invariants.hpp"
#include "qsys/moves.hpp"
#include "qsys/system_io.hpp"
#include "qsys/systems.hpp"
#include "qsys/table_io.hpp"

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  int jobs = 1;
};

bool as_json(const Options& o) { return o.format == "json"; }

json report_json(const qsys::AxiomReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations())
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  json counts = json::object();
  for (const auto& name : r.failed_axioms())
    counts[name] = r.failure_count(name);
  return {{"valid", r.valid()},
          {"violations", violations},
          {"failure_counts", counts}};
}

int emit_report(const qsys::AxiomReport& r, const Options& o) {
  if (as_json(o))
    std::cout << report_json(r).dump(2) << '\n';
  else
    std::cout << r.to_text();
  return r.valid() ? kOk : kFailed;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

qsys::Diagram load_diagram(const std::string& ref) {
  return qsys::parse_diagram(qsys::read_diagram_source(ref));
}

// A system file, or an axet file converted to its system.
qsys::SystemData load_system(const std::string& ref) {
  auto parsed = qsys::parse_system_or_axet(qsys::read_system_source(ref));
  if (auto* sys = std::get_if<qsys::SystemData>(&parsed)) return *sys;
  qsys::AxetConversion c = qsys::axet_to_system(std::get<qsys::AxetData>(parsed));
  if (!c.system)
    throw qsys::PreconditionError("axet does not satisfy its axioms:\n" +
                                  c.report.to_text());
  return *c.system;
}

qsys::GroupTable load_group(const std::string& ref) {
  const std::string prefix = "groups:";
  if (ref.rfind(prefix, 0) == 0) {
    const std::string name = ref.substr(prefix.size());
    for (const auto& g : qsys::fingerprint_panel())
      if (g.name == name) return g.group;
    throw std::out_of_range("unknown group '" + name + "'");
  }
  return qsys::parse_group(qsys::read_file(ref));
}

qsys::Profile parse_profile(const std::string& s) {
  if (s == "quandle") return qsys::Profile::quandle;
  if (s == "rack") return qsys::Profile::rack;
  if (s == "kei") return qsys::Profile::kei;
  return qsys::Profile::group;
}

// The carrier table for involution search: a table file directly, or the
// associated quandle of a system or axet file.
qsys::OperationTable load_quandle_table(const std::string& ref) {
  const std::string text = qsys::read_system_source(ref);
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::getline(in, word);
      continue;
    }
    break;
  }
  if (word == "magma") return qsys::parse_table(text).table;
  return qsys::associated_quandle(load_system(ref)).quandle.table;
}

int cmd_check_table(const std::string& file, const std::string& profile,
                    const Options& o) {
  const qsys::TableFile t = qsys::parse_table(qsys::read_file(file));
  return emit_report(
      qsys::validate_axioms(t.table, parse_profile(profile),
                            t.identity.value_or(0)),
      o);
}

// The kinds checked when none is named: fw_system, plus whatever the
// system carries the data for.
std::vector<qsys::FamilySpec> default_kinds(const qsys::SystemData& sys) {
  std::vector<qsys::FamilySpec> kinds{qsys::FamilyKind::fw_system};
  if (sys.oplus && sys.has_rho())
    kinds.push_back(qsys::FamilyKind::trivalent_compatible);
  if (sys.oplus) kinds.push_back(qsys::FamilyKind::associative_composition);
  if (sys.has_rho() && !sys.gamma.empty()) {
    std::vector<int> arities;
    for (const auto& [arity, table] : sys.gamma) arities.push_back(arity);
    kinds.emplace_back(qsys::FamilyKind::n_compatible, arities);
  }
  return kinds;
}

qsys::AxiomReport check_kinds(const qsys::SystemData& sys,
                              const std::vector<qsys::FamilySpec>& kinds) {
  qsys::AxiomReport report;
  for (const auto& spec : kinds)
    report.merge(qsys::validate_family(sys, spec), qsys::to_string(spec) + ".");
  return report;
}

int cmd_check_system(const std::string& ref, const std::string& kind,
                     const Options& o) {
  auto parsed = qsys::parse_system_or_axet(qsys::read_system_source(ref));
  if (auto* sys = std::get_if<qsys::SystemData>(&parsed)) {
    if (!kind.empty())
      return emit_report(
          qsys::validate_family(*sys, qsys::parse_family_kind(kind)), o);
    return emit_report(check_kinds(*sys, default_kinds(*sys)), o);
  }
  const qsys::AxetConversion c =
      qsys::axet_to_system(std::get<qsys::AxetData>(parsed));
  qsys::AxiomReport report = c.report;
  if (!kind.empty() && c.system)
    report.merge(check_kinds(*c.system, {qsys::parse_family_kind(kind)}));
  return emit_report(report, o);
}

int cmd_associated(const std::string& ref, const std::string& out_path,
                   const Options& o) {
  const qsys::AssociatedResult r = qsys::associated_quandle(load_system(ref));
  write_output(out_path, qsys::serialize_table(r.quandle.table));
  if (out_path.empty() || out_path == "-")
    return r.report.valid() ? kOk : kFailed;
  return emit_report(r.report, o);
}

int cmd_involutions(const std::string& ref, const Options& o) {
  const qsys::OperationTable q = load_quandle_table(ref);
  const auto found = qsys::search_involutions(q);
  if (as_json(o)) {
    std::cout << json{{"count", found.size()}, {"involutions", found}}.dump(2)
              << '\n';
  } else {
    std::cout << "count " << found.size() << '\n';
    for (const auto& rho : found) {
      for (std::size_t i = 0; i < rho.size(); ++i)
        std::cout << (i ? " " : "") << rho[i];
      std::cout << '\n';
    }
  }
  return kOk;
}

qsys::CountMode parse_mode(const std::string& s) {
  return s == "generating" ? qsys::CountMode::generating : qsys::CountMode::all;
}

int cmd_color(const std::string& diagram, const std::string& system,
              const std::string& mode, const Options& o) {
  const qsys::Diagram d = load_diagram(diagram);
  const qsys::SystemData sys = load_system(system);
  const std::uint64_t n =
      qsys::count_colourings(d, sys, parse_mode(mode), o.jobs);
  if (as_json(o))
    std::cout << json{{"count", n}, {"mode", mode}}.dump(2) << '\n';
  else
    std::cout << n << '\n';
  return kOk;
}

struct FuzzArgs {
  std::string system;
  std::string scope = "links";
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> moves;
  std::vector<int> arities;
  int crossings_max = 3;
  int vertices_max = 2;
  bool unchecked = false;
};

int cmd_fuzz(const FuzzArgs& a, const Options& o) {
  const qsys::SystemData sys = load_system(a.system);
  qsys::FuzzOptions f;
  f.trials = a.trials;
  f.seed = a.seed;
  f.scope = qsys::parse_fuzz_scope(a.scope);
  for (const auto& m : a.moves) f.moves.push_back(qsys::parse_move_kind(m));
  f.arities = a.arities;
  f.crossings_max = a.crossings_max;
  f.vertices_max = a.vertices_max;
  f.jobs = o.jobs;
  f.check_preconditions = !a.unchecked;
  const qsys::FuzzReport r = qsys::fuzz_invariance(sys, f);
  if (as_json(o)) {
    json trials = json::array();
    for (const auto& t : r.trials) {
      json entry = {{"index", t.index},
                    {"seed", t.seed},
                    {"move", qsys::to_string(t.move.kind)},
                    {"site", t.move.site},
                    {"before", t.count_before},
                    {"after", t.count_after},
                    {"ok", t.ok()}};
      if (!t.ok()) entry["diagram"] = qsys::serialize_diagram(t.before);
      trials.push_back(entry);
    }
    std::cout << json{{"trials", trials}, {"mismatches", r.mismatches()}}.dump(2)
              << '\n';
  } else {
    std::cout << r.to_text();
    for (const auto& t : r.trials) {
      if (t.ok()) continue;
      std::cout << "# trial " << t.index << " diagram before the move\n";
      std::istringstream lines(qsys::serialize_diagram(t.before));
      for (std::string line; std::getline(lines, line);)
        std::cout << "#   " << line << '\n';
    }
    std::cout << "mismatches " << r.mismatches() << '\n';
  }
  return r.mismatches() == 0 ? kOk : kFailed;
}

int cmd_wirtinger(const std::string& diagram, const std::string& out_path) {
  write_output(out_path, qsys::serialize_presentation(
                             qsys::wirtinger_presentation(load_diagram(diagram))));
  return kOk;
}

int cmd_homs(const std::string& pres, const std::string& group,
             bool fingerprint, const Options& o) {
  const qsys::GroupPresentation p =
      qsys::parse_presentation(qsys::read_file(pres));
  if (fingerprint) {
    const auto panel = qsys::fingerprint_panel();
    const auto counts = qsys::hom_fingerprint(p, panel);
    json j = json::object();
    for (std::size_t i = 0; i < panel.size(); ++i) {
      j[panel[i].name] = counts[i];
      if (!as_json(o)) std::cout << panel[i].name << ' ' << counts[i] << '\n';
    }
    if (as_json(o)) std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (group.empty()) throw CLI::ValidationError("GROUP", "a group is required");
  const std::uint64_t n = qsys::group_hom_count(p, load_group(group));
  if (as_json(o))
    std::cout << json{{"count", n}}.dump(2) << '\n';
  else
    std::cout << n << '\n';
  return kOk;
}

int cmd_kauffman(const std::string& diagram, const std::string& invariant,
                 const Options& o) {
  const qsys::Diagram d = load_diagram(diagram);
  qsys::KauffmanSummary s;
  if (invariant == "linking") {
    s = qsys::kauffman_summary(d);
  } else if (invariant.rfind("colour:", 0) == 0 ||
             invariant.rfind("color:", 0) == 0) {
    const qsys::SystemData sys =
        load_system(invariant.substr(invariant.find(':') + 1));
    s = qsys::kauffman_summary(d, &sys);
  } else {
    throw CLI::ValidationError("--invariant",
                               "expected linking or colour:SYSTEM");
  }
  if (as_json(o))
    std::cout << json{{"constituents", s.size()}, {"summary", s}}.dump(2)
              << '\n';
  else
    std::cout << "constituents " << s.size() << '\n'
              << qsys::summary_to_text(s) << '\n';
  return kOk;
}

int cmd_fixtures(const std::string& action, const std::string& name) {
  if (action == "list") {
    std::cout << "diagrams\n";
    for (const auto& n : qsys::fixture_names()) std::cout << "  " << n << '\n';
    std::cout << "systems\n";
    for (const auto& n : qsys::system_names()) std::cout << "  " << n << '\n';
    return kOk;
  }
  if (name.empty())
    throw CLI::ValidationError("NAME", "fixtures show needs a name");
  for (const auto& n : qsys::fixture_names())
    if (n == name) {
      std::cout << qsys::fixture_text(name);
      return kOk;
    }
  std::cout << qsys::system_text(name);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle systems, coloured diagrams and their invariants"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string file, file2, profile = "quandle", kind, out_path, mode = "all",
                           invariant = "linking", action, name;
  bool fingerprint = false;
  FuzzArgs fuzz;

  auto* check_table = app.add_subcommand("check-table", "Validate a table file");
  check_table->add_option("FILE", file)->required();
  check_table->add_option("--profile", profile)
      ->check(CLI::IsMember({"quandle", "rack", "kei", "group"}));

  auto* check_system =
      app.add_subcommand("check-system", "Validate a system or axet file");
  check_system->add_option("FILE", file)->required();
  check_system->add_option("--kind", kind,
                           "g_family, gsf_family, q_family, fw_system, "
                           "trivalent_compatible, associative_composition, "
                           "n_compatible:<arities> (default: fw_system and "
                           "every kind the file carries data for)");

  auto* associated =
      app.add_subcommand("associated", "Write the associated quandle table");
  associated->add_option("FILE", file)->required();
  associated->add_option("-o,--output", out_path);

  auto* involutions =
      app.add_subcommand("involutions", "List the good involutions of a quandle");
  involutions->add_option("FILE", file)->required();

  auto* color = app.add_subcommand("color", "Count proper colourings");
  color->alias("colour");
  color->add_option("DIAGRAM", file)->required();
  color->add_option("SYSTEM", file2)->required();
  color->add_option("--mode", mode)->check(CLI::IsMember({"all", "generating"}));

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Fuzz colouring-count invariance");
  fuzz_cmd->add_option("SYSTEM", fuzz.system)->required();
  fuzz_cmd->add_option("--scope", fuzz.scope)
      ->check(CLI::IsMember({"links", "trivalent", "handlebody", "n_valent"}));
  fuzz_cmd->add_option("--trials", fuzz.trials)->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", fuzz.seed);
  fuzz_cmd->add_option("--moves", fuzz.moves, "Move kinds to draw from")
      ->delimiter(',');
  fuzz_cmd->add_option("--arities", fuzz.arities, "Gamma arities (n_valent)")
      ->delimiter(',');
  fuzz_cmd->add_option("--crossings-max", fuzz.crossings_max)
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--vertices-max", fuzz.vertices_max)
      ->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_flag("--unchecked", fuzz.unchecked,
                     "Run even if the system fails the scope's hypotheses");

  auto* wirtinger =
      app.add_subcommand("wirtinger", "Write the Wirtinger presentation");
  wirtinger->add_option("DIAGRAM", file)->required();
  wirtinger->add_option("-o,--output", out_path);

  auto* homs = app.add_subcommand("homs", "Count homomorphisms into a group");
  homs->add_option("PRES", file)->required();
  homs->add_option("GROUP", file2, "Group file or groups:Z2|Z3|S3|Z4|D4");
  homs->add_flag("--fingerprint", fingerprint,
                 "Counts into Z2, Z3, S3, Z4 and D4");

  auto* kauffman =
      app.add_subcommand("kauffman", "Summarise the constituent links");
  kauffman->add_option("DIAGRAM", file)->required();
  kauffman->add_option("--invariant", invariant, "linking or colour:SYSTEM");

  auto* fixtures = app.add_subcommand("fixtures", "Bundled diagrams and systems");
  fixtures->add_option("ACTION", action)
      ->required()
      ->check(CLI::IsMember({"list", "show"}));
  fixtures->add_option("NAME", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_table) return cmd_check_table(file, profile, opts);
    if (*check_system) return cmd_check_system(file, kind, opts);
    if (*associated) return cmd_associated(file, out_path, opts);
    if (*involutions) return cmd_involutions(file, opts);
    if (*color) return cmd_color(file, file2, mode, opts);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, opts);
    if (*wirtinger) return cmd_wirtinger(file, out_path);
    if (*homs) return cmd_homs(file, file2, fingerprint, opts);
    if (*kauffman) return cmd_kauffman(file, invariant, opts);
    if (*fixtures) return cmd_fixtures(action, name);
  } catch (const CLI::Error& e) {
    std::cerr << "qsys: " << e.what() << '\n';
    return kUsage;
  } catch (const qsys::PreconditionError& e) {
    std::cerr << "qsys: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "qsys: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
