// Python bindings. Instances, centers and results cross the boundary as JSON
// text; python/kcenter/__init__.py converts to and from Python objects.

#include "kcenter/error.hpp"
#include "kcenter/io.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;
using kcenter::io::Json;

namespace {

kcenter::Instance instance_of(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw kcenter::Error(kcenter::ErrorCode::ParseError, e.what());
  }
  return kcenter::io::instance_from_json(j);
}

std::string dumps(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_kcenter, m) {
  m.doc() = "k-center problems under Minkowski gauges";
  m.attr("__version__") = kcenter::io::kToolVersion;

  // Messages read "<Code>: <detail>"; the Python layer splits them.
  py::register_exception<kcenter::Error>(m, "KCenterError", PyExc_ValueError);

  m.def("validate", [](const std::string& instance) {
    const auto inst = instance_of(instance);
    const auto& k = inst.gauge().constants();
    return dumps(Json{{"m", inst.size()},
                      {"d", inst.dimension()},
                      {"gauge", std::string(inst.gauge().kind())},
                      {"set_norm", k.set_norm},
                      {"polar_norm", k.polar_norm}});
  });

  m.def("objective", [](const std::string& instance, const std::string& centers) {
    const auto inst = instance_of(instance);
    return kcenter::objective(inst, kcenter::io::centers_from_text(centers, inst.dimension()));
  });

  m.def(
      "solve",
      [](const std::string& instance, std::size_t k, const std::string& method, int restarts, std::uint64_t seed,
         double tol, double eps, bool force, int workers) {
        const auto inst = instance_of(instance);
        kcenter::SolveReport r;
        {
          py::gil_scoped_release release;
          if (method == "exact") {
            r = kcenter::exact_by_partition(inst, k, kcenter::ExactOptions{eps, force});
          } else if (method == "heuristic") {
            kcenter::MultiStartOptions ms;
            ms.restarts = restarts;
            ms.seed = seed;
            ms.heuristic.tol = tol;
            ms.heuristic.eps = eps;
            ms.workers = workers;
            r = kcenter::multi_start(inst, k, ms);
          } else {
            throw kcenter::Error(kcenter::ErrorCode::InvalidParameter, "method must be exact or heuristic");
          }
        }
        return dumps(kcenter::io::to_json(r));
      },
      py::arg("instance"), py::arg("k"), py::arg("method") = "exact", py::arg("restarts") = 20,
      py::arg("seed") = 0, py::arg("tol") = 1e-9, py::arg("eps") = kcenter::kDefaultOneCenterEps,
      py::arg("force") = false, py::arg("workers") = 1);

  m.def(
      "one_center",
      [](const std::string& instance, double eps) {
        const auto inst = instance_of(instance);
        return dumps(kcenter::io::to_json(kcenter::solve_one_center(inst.gauge(), inst.points(), eps)));
      },
      py::arg("instance"), py::arg("eps") = kcenter::kDefaultOneCenterEps);

  m.def(
      "certify",
      [](const std::string& instance, const std::string& centers, double tol) {
        const auto inst = instance_of(instance);
        const auto x = kcenter::io::centers_from_text(centers, inst.dimension());
        return dumps(kcenter::io::to_json(kcenter::certify_local(inst, x, tol)));
      },
      py::arg("instance"), py::arg("centers"), py::arg("tol") = kcenter::kDefaultOneCenterEps);

  m.def(
      "compactness",
      [](const std::string& instance, std::size_t k, double eps, bool force) {
        const auto inst = instance_of(instance);
        return dumps(kcenter::io::to_json(kcenter::compactness_diagnostic(inst, k, eps, force)));
      },
      py::arg("instance"), py::arg("k"), py::arg("eps") = kcenter::kDefaultOneCenterEps, py::arg("force") = false);

  m.def(
      "probe",
      [](const std::string& instance, const std::string& centers, double radius, long samples, std::uint64_t seed) {
        const auto inst = instance_of(instance);
        const auto x = kcenter::io::centers_from_text(centers, inst.dimension());
        return dumps(kcenter::io::to_json(kcenter::perturbation_probe(inst, x, radius, samples, seed)));
      },
      py::arg("instance"), py::arg("centers"), py::arg("radius") = 1e-3, py::arg("samples") = 10000,
      py::arg("seed") = 0);

  m.def(
      "bound2",
      [](const std::string& instance, double eps, std::uint64_t seed) {
        const auto inst = instance_of(instance);
        if (!inst.gauge().is_euclidean()) {
          throw kcenter::Error(kcenter::ErrorCode::WrongGaugeKind, "bound2 needs the euclidean gauge");
        }
        return dumps(kcenter::io::to_json(kcenter::two_center_split_bound(inst.points(), eps, seed)));
      },
      py::arg("instance"), py::arg("eps") = kcenter::kDefaultOneCenterEps, py::arg("seed") = 0);
}
