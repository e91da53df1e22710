// Python extension. Structured values cross the boundary as JSON text in the
// same schemas the CLI and service use; the package wrapper turns them into
// dicts.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ivpareto/error.hpp"
#include "ivpareto/generate.hpp"
#include "ivpareto/interval.hpp"
#include "ivpareto/json_io.hpp"
#include "ivpareto/pareto.hpp"
#include "ivpareto/session.hpp"
#include "ivpareto/utility.hpp"
#include "ivpareto/verify.hpp"

namespace py = pybind11;
using namespace ivpareto;

namespace {

Problem load(const std::string& text) { return parse_problem(text); }

Problem with_mode(Problem p, const std::optional<std::string>& mode) {
  if (!mode || p.kind() != StructureKind::Interval) return p;
  IntervalStructure s = p.intervals();
  s.mode = parse_dominance_mode(*mode);
  return Problem(p.alternatives(), p.criteria(), std::move(s));
}

std::string solve_json(const std::string& problem, const std::optional<std::string>& mode) {
  const Problem p = with_mode(load(problem), mode);
  return result_to_json(p, solve(p)).dump();
}

std::string incomparability_json(const std::string& problem) {
  const Problem p = load(problem);
  const auto report = incomparability_report(p);
  Json out = Json::object();
  for (AltIndex x = 0; x < p.alternatives().size(); ++x) {
    Json per = Json::object();
    for (std::size_t j = 0; j < p.criteria().size(); ++j) per[p.criteria()[j]] = alt_set_to_json(p, report.per_criterion[x][j]);
    Json agg = Json::object();
    for (const auto& [y, count] : report.aggregate[x]) agg[p.alternatives()[y]] = count;
    out[p.alternatives()[x]] = {{"per_criterion", per}, {"aggregate", agg}};
  }
  return out.dump();
}

class PySession {
 public:
  explicit PySession(Session s) : s_(std::move(s)) {}

  static PySession create(const std::string& problem, const std::optional<std::vector<std::string>>& baseline,
                          const std::string& id) {
    Problem p = load(problem);
    std::optional<AltSet> base;
    if (baseline) base = alt_set_from_json(p, Json(*baseline), "baseline");
    return PySession(Session::create(id, std::move(p), std::move(base)));
  }

  static PySession from_json(const std::string& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::SchemaError, e.what());
    }
    return PySession(session_from_json(j));
  }

  std::string apply(const std::string& event) {
    Json j;
    try {
      j = Json::parse(event);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::SchemaError, e.what());
    }
    return delta_to_json(s_.base(), s_.apply(event_from_json(s_.base(), j))).dump();
  }

  void undo() { s_.undo(); }
  std::string pareto() const { return result_to_json(s_.working_problem(), s_.current()).dump(); }
  std::string suggestions(std::size_t k) const { return suggestions_to_json(s_.base(), s_.suggestions(k)).dump(); }
  std::string history() const { return history_to_json(s_.base(), s_.pareto_history()).dump(); }
  std::string working() const { return serialize_problem(s_.working_problem(), -1); }
  std::string to_json() const { return session_to_json(s_).dump(); }
  std::uint64_t next_sequence() const { return s_.next_sequence(); }
  const std::string& id() const { return s_.id(); }
  void save(const std::string& path) const { save_session(s_, path); }
  static PySession load_file(const std::string& path) { return PySession(load_session(path)); }

 private:
  Session s_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pareto analysis over point, interval and relation structures";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "Error")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()), e.field());
      PyErr_SetObject(error_type.get_stored().ptr(), args.ptr());
    }
  });

  m.def("interval_dominates",
        [](std::pair<double, double> a, std::pair<double, double> b, const std::string& mode) {
          return interval_dominates(Interval(a.first, a.second), Interval(b.first, b.second),
                                    parse_dominance_mode(mode));
        },
        py::arg("a"), py::arg("b"), py::arg("mode") = "strict");
  m.def("contract",
        [](std::pair<double, double> current, std::pair<double, double> refined) {
          const Interval d = contract(Interval(current.first, current.second), Interval(refined.first, refined.second));
          return std::make_pair(d.lower(), d.upper());
        },
        py::arg("current"), py::arg("refined"));

  m.def("normalize_problem", [](const std::string& p) { return serialize_problem(load(p), -1); });
  m.def("solve", &solve_json, py::arg("problem"), py::arg("mode") = py::none());
  m.def("to_intervals", [](const std::string& p) { return serialize_problem(vpr_to_interval_structure(load(p)), -1); });
  m.def("incomparability", &incomparability_json);
  m.def("generate",
        [](std::size_t n, std::size_t m, const std::string& variant, std::uint64_t seed) {
          StructureKind kind;
          if (variant == "point") kind = StructureKind::Point;
          else if (variant == "interval") kind = StructureKind::Interval;
          else if (variant == "relation") kind = StructureKind::Relation;
          else throw Error(ErrorCode::SchemaError, "unknown variant " + variant);
          auto g = generate_instance(n, m, kind, seed);
          return std::make_pair(serialize_problem(g.problem, -1), serialize_problem(g.hidden_truth, -1));
        },
        py::arg("alternatives"), py::arg("criteria"), py::arg("variant"), py::arg("seed") = 0);
  m.def("verify",
        [](const std::string& suite, std::size_t instances, std::uint64_t seed) {
          const Suite s = parse_suite(suite);
          py::gil_scoped_release release;
          return report_to_json(run_suite(s, instances, seed)).dump();
        },
        py::arg("suite"), py::arg("instances") = 1000, py::arg("seed") = 1);

  py::class_<PySession>(m, "Session")
      .def_static("create", &PySession::create, py::arg("problem"), py::arg("baseline") = py::none(),
                  py::arg("id") = "session")
      .def_static("from_json", &PySession::from_json)
      .def_static("load", &PySession::load_file)
      .def("apply", &PySession::apply)
      .def("undo", &PySession::undo)
      .def("pareto", &PySession::pareto)
      .def("suggestions", &PySession::suggestions, py::arg("limit") = 5)
      .def("history", &PySession::history)
      .def("working", &PySession::working)
      .def("to_json", &PySession::to_json)
      .def("save", &PySession::save)
      .def_property_readonly("next_sequence", &PySession::next_sequence)
      .def_property_readonly("id", &PySession::id);
}
