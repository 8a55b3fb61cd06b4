#include "gfc/characteristic.hpp"
#include "gfc/complex.hpp"
#include "gfc/errors.hpp"
#include "gfc/genfun.hpp"
#include "gfc/parallel.hpp"
#include "gfc/serialize.hpp"
#include "gfc/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gfc;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dims(const std::string& algebra, int weight, std::optional<int> max_degree, std::size_t budget_dim) {
    SliceOptions options;
    options.max_degree = max_degree;
    options.budget_dim = budget_dim;
    return slice_json(build_slice(parse_variant(algebra), weight, options), false).dump();
}

std::string cohomology(const std::string& algebra, int weight, std::size_t budget_dim) {
    SliceOptions options;
    options.budget_dim = budget_dim;
    return cohomology_json(build_slice(parse_variant(algebra), weight, options)).dump();
}

std::string coboundary(const std::string& algebra, int weight, int degree) {
    const auto slice = build_slice(parse_variant(algebra), weight);
    return matrix_json(coboundary_matrix(slice, degree)).dump();
}

std::string suite(const std::string& name) {
    Json out = Json::array();
    for (const auto& r : run_suite(name))
        out.push_back({{"name", r.name}, {"expected", r.expected}, {"source", r.source}, {"computed", r.computed}, {"pass", r.pass}});
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact relative Gelfand-Fuks cochains of formal Hamiltonian vector fields on the plane";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    m.def("dims", &dims, py::arg("algebra"), py::arg("weight"), py::arg("max_degree") = py::none(),
          py::arg("budget_dim") = 200000, py::call_guard<py::gil_scoped_release>());
    m.def("cohomology", &cohomology, py::arg("algebra"), py::arg("weight"), py::arg("budget_dim") = 200000,
          py::call_guard<py::gil_scoped_release>());
    m.def("coboundary", &coboundary, py::arg("algebra"), py::arg("weight"), py::arg("degree"),
          py::call_guard<py::gil_scoped_release>());
    m.def("factorize", [] { return factorization_json(factorize()).dump(); }, py::call_guard<py::gil_scoped_release>());
    m.def(
        "perchik_series",
        [](int n, int tmax, bool full, std::uint64_t budget_ops) {
            GenfunOptions options;
            options.budget_ops = budget_ops;
            return series_json(full ? perchik_full_series(n, tmax, options) : perchik_series(n, tmax, options)).dump();
        },
        py::arg("n"), py::arg("tmax"), py::arg("full") = false, py::arg("budget_ops") = GenfunOptions{}.budget_ops,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "complex_euler_series",
        [](const std::string& algebra, int tmax) { return series_json(complex_euler_series(parse_variant(algebra), tmax)).dump(); },
        py::arg("algebra"), py::arg("tmax"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "stabilization",
        [](int max_n, int tmax) { return stabilization_json(stabilization_report(max_n, tmax)).dump(); },
        py::arg("max_n"), py::arg("tmax"), py::call_guard<py::gil_scoped_release>());
    m.def("run_suite", &suite, py::arg("suite") = "all", py::call_guard<py::gil_scoped_release>());
    m.def("suite_names", &suite_names);
    m.def("set_threads", &set_worker_count, py::arg("n"));
    m.def("threads", &worker_count);
}
