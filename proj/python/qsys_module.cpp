// Python bindings: the main operations over the text file formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "qsys/algebra.hpp"
#include "qsys/colouring.hpp"
#include "qsys/diagram.hpp"
#include "qsys/fixtures.hpp"
#include "qsys/invariants.hpp"
#include "qsys/moves.hpp"
#include "qsys/system_io.hpp"
#include "qsys/systems.hpp"
#include "qsys/table_io.hpp"

namespace py = pybind11;

namespace {

bool has_prefix(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

// Accepts diagram text or a "fixtures:<name>" reference.
qsys::Diagram diagram_from(const std::string& source) {
  return qsys::parse_diagram(has_prefix(source, "fixtures:")
                                 ? qsys::read_diagram_source(source)
                                 : source);
}

// Accepts system or axet text, or a "systems:<name>" reference.
qsys::SystemData system_from(const std::string& source) {
  const std::string text = has_prefix(source, "systems:")
                               ? qsys::read_system_source(source)
                               : source;
  auto parsed = qsys::parse_system_or_axet(text);
  if (auto* sys = std::get_if<qsys::SystemData>(&parsed)) return *sys;
  auto c = qsys::axet_to_system(std::get<qsys::AxetData>(parsed));
  if (!c.system)
    throw qsys::PreconditionError("axet does not satisfy its axioms:\n" +
                                  c.report.to_text());
  return *c.system;
}

qsys::Profile profile_from(const std::string& s) {
  if (s == "quandle") return qsys::Profile::quandle;
  if (s == "rack") return qsys::Profile::rack;
  if (s == "kei") return qsys::Profile::kei;
  if (s == "group") return qsys::Profile::group;
  throw std::invalid_argument("unknown profile '" + s + "'");
}

py::dict report_dict(const qsys::AxiomReport& r) {
  py::list violations;
  for (const auto& v : r.violations())
    violations.append(py::make_tuple(v.axiom, v.witness));
  py::dict d;
  d["valid"] = r.valid();
  d["violations"] = violations;
  d["text"] = r.to_text();
  return d;
}

std::vector<std::vector<int>> rows(const qsys::OperationTable& t) {
  std::vector<std::vector<int>> out(t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) out[i].push_back(t(i, j));
  return out;
}

qsys::OperationTable table_from(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("table must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return qsys::OperationTable(n, entries);
}

}  // namespace

PYBIND11_MODULE(_qsys, m) {
  m.doc() = "Quandle systems, coloured diagrams and their invariants";

  py::register_exception<qsys::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qsys::PreconditionError>(m, "PreconditionError",
                                                  PyExc_ValueError);

  m.def("validate_table",
        [](const std::vector<std::vector<int>>& table,
           const std::string& profile, int identity) {
          return report_dict(
              qsys::validate_axioms(table_from(table), profile_from(profile),
                                    identity));
        },
        py::arg("table"), py::arg("profile") = "quandle", py::arg("identity") = 0,
        "Check a square operation table against the axioms of a profile.");

  m.def("dihedral_quandle",
        [](int n) { return rows(qsys::dihedral_quandle(n)); }, py::arg("n"));
  m.def("trivial_quandle",
        [](int n) { return rows(qsys::trivial_quandle(n)); }, py::arg("n"));

  m.def("validate_system",
        [](const std::string& system, const std::string& kind) {
          return report_dict(qsys::validate_family(
              system_from(system), qsys::parse_family_kind(kind)));
        },
        py::arg("system"), py::arg("kind") = "fw_system",
        "Validate a system (text or systems:<name>) as the given kind.");

  m.def("associated_quandle",
        [](const std::string& system) {
          auto r = qsys::associated_quandle(system_from(system));
          py::dict d = report_dict(r.report);
          d["table"] = rows(r.quandle.table);
          return d;
        },
        py::arg("system"));

  m.def("good_involutions",
        [](const std::vector<std::vector<int>>& table) {
          return qsys::search_involutions(table_from(table));
        },
        py::arg("table"));

  m.def("count_colourings",
        [](const std::string& diagram, const std::string& system,
           const std::string& mode, int jobs) {
          const auto cm = mode == "generating" ? qsys::CountMode::generating
                                               : qsys::CountMode::all;
          const qsys::Diagram d = diagram_from(diagram);
          const qsys::SystemData s = system_from(system);
          py::gil_scoped_release release;
          return qsys::count_colourings(d, s, cm, jobs);
        },
        py::arg("diagram"), py::arg("system"), py::arg("mode") = "all",
        py::arg("jobs") = 1,
        "Count proper colourings of a diagram (text or fixtures:<name>).");

  m.def("fuzz",
        [](const std::string& system, const std::string& scope, int trials,
           std::uint64_t seed, std::vector<std::string> moves,
           bool check_preconditions) {
          qsys::FuzzOptions o;
          o.scope = qsys::parse_fuzz_scope(scope);
          o.trials = trials;
          o.seed = seed;
          for (const auto& mv : moves) o.moves.push_back(qsys::parse_move_kind(mv));
          o.check_preconditions = check_preconditions;
          const qsys::SystemData s = system_from(system);
          qsys::FuzzReport r;
          {
            py::gil_scoped_release release;
            r = qsys::fuzz_invariance(s, o);
          }
          py::dict d;
          d["mismatches"] = r.mismatches();
          d["text"] = r.to_text();
          return d;
        },
        py::arg("system"), py::arg("scope") = "links", py::arg("trials") = 50,
        py::arg("seed") = 0, py::arg("moves") = std::vector<std::string>{},
        py::arg("check_preconditions") = true);

  m.def("wirtinger",
        [](const std::string& diagram) {
          return qsys::serialize_presentation(
              qsys::wirtinger_presentation(diagram_from(diagram)));
        },
        py::arg("diagram"), "Wirtinger presentation in presentation-file syntax.");

  m.def("hom_count",
        [](const std::string& presentation, const std::string& group) {
          const auto p = qsys::parse_presentation(presentation);
          for (const auto& g : qsys::fingerprint_panel())
            if (g.name == group) return qsys::group_hom_count(p, g.group);
          throw std::invalid_argument("unknown group '" + group + "'");
        },
        py::arg("presentation"), py::arg("group"),
        "Homomorphisms into one of Z2, Z3, S3, Z4, D4.");

  m.def("linking_matrix",
        [](const std::string& diagram) {
          return qsys::linking_matrix(diagram_from(diagram)).twice;
        },
        py::arg("diagram"),
        "Signed crossing counts between components (twice the linking numbers).");

  m.def("kauffman_summary",
        [](const std::string& diagram) {
          return qsys::kauffman_summary(diagram_from(diagram));
        },
        py::arg("diagram"));

  m.def("fixture_names", &qsys::fixture_names);
  m.def("system_names", &qsys::system_names);
  m.def("fixture_text",
        [](const std::string& name) { return qsys::fixture_text(name); },
        py::arg("name"));
  m.def("system_text",
        [](const std::string& name) { return qsys::system_text(name); },
        py::arg("name"));
}
