#include "mvop/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mvop;

namespace {

// Rationals cross the boundary as "p/q" strings; reports come back as JSON text.
WeightSpec weight(int N, const std::string& nu, const std::vector<std::string>& a,
                  const std::vector<std::string>& delta) {
    WeightSpec w;
    w.N = N;
    w.nu = parse_rational(nu);
    for (const auto& s : a) w.a.push_back(parse_rational(s));
    for (const auto& s : delta) w.delta.push_back(parse_rational(s));
    if (a.empty()) w.a.assign(N > 0 ? N - 1 : 0, Q(-1));
    if (delta.empty()) w.delta.assign(N > 0 ? N : 0, Q(1));
    w.validate();
    return w;
}

std::vector<std::string> strings(const std::vector<Q>& v) {
    std::vector<std::string> out;
    for (const Q& q : v) out.push_back(to_string(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_mvop, m) {
    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("compute_polys", [](int N, const std::string& nu, const std::vector<std::string>& a,
                              const std::vector<std::string>& delta, int nmax) {
        const WeightSpec w = weight(N, nu, a, delta);
        py::gil_scoped_release nogil;
        return compute_polys_command(w, nmax);
    }, py::arg("N"), py::arg("nu"), py::arg("a"), py::arg("delta"), py::arg("nmax"));
    m.def("verify", [](int N, const std::string& nu, const std::vector<std::string>& a,
                       const std::vector<std::string>& delta, int nmax, const std::string& suite,
                       const std::string& c, const std::string& d) {
        const WeightSpec w = weight(N, nu, a, delta);
        const Q cq = parse_rational(c), dq = parse_rational(d);
        py::gil_scoped_release nogil;
        return verify_command(w, nmax, suite, cq, dq);
    }, py::arg("N"), py::arg("nu"), py::arg("a"), py::arg("delta"), py::arg("nmax"), py::arg("suite"),
       py::arg("c"), py::arg("d"));
    m.def("xi", [](int N, const std::string& nu, const std::vector<std::string>& a,
                   const std::vector<std::string>& delta, int nmax) {
        const WeightSpec w = weight(N, nu, a, delta);
        py::gil_scoped_release nogil;
        return xi_command(w, nmax);
    }, py::arg("N"), py::arg("nu"), py::arg("a"), py::arg("delta"), py::arg("nmax"));
    m.def("lie", [](const std::string& phi, int truncate) {
        const RPoly p = truncate > 0 ? truncated_exp(truncate) : parse_poly(phi);
        py::gil_scoped_release nogil;
        return lie_command(p);
    }, py::arg("phi"), py::arg("truncate") = 0);
    m.def("dualhahn", [](int N, const std::string& nu, const std::string& c, const std::string& d, int nmax) {
        const DHParams p = build_delta_family(N, parse_rational(nu), parse_rational(c), parse_rational(d));
        py::gil_scoped_release nogil;
        return dualhahn_command(p, nmax);
    }, py::arg("N"), py::arg("nu"), py::arg("c"), py::arg("d"), py::arg("nmax"));

    py::class_<CommandResult>(m, "CommandResult")
        .def_property_readonly("json", [](const CommandResult& r) { return r.out.dump(); })
        .def_readonly("ok", &CommandResult::ok)
        .def_readonly("csv", &CommandResult::csv);

    m.def("laguerre_poly", [](const std::string& alpha, long n) {
        return strings(laguerre_poly(parse_rational(alpha), n).coeffs());
    }, "coefficients, lowest degree first");
    m.def("dual_hahn", [](long k, const std::string& x, const std::string& gamma, const std::string& delta, long M) {
        return to_string(dual_hahn(k, parse_rational(x), parse_rational(gamma), parse_rational(delta), M));
    });
    m.def("parse_rational", [](const std::string& s) { return to_string(parse_rational(s)); });
    m.def("parse_poly", [](const std::string& s) { return strings(parse_poly(s).coeffs()); });
    m.def("thread_cap", &thread_cap);
}
