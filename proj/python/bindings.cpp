#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irs/chernoff.hpp"
#include "irs/clt.hpp"
#include "irs/laplace.hpp"
#include "irs/montecarlo.hpp"
#include "irs/saddlepoint.hpp"
#include "irs/specfun.hpp"
#include "irs/sysmodel.hpp"

namespace py = pybind11;
using namespace irs;

namespace {

py::dict tail_dict(const TailValue& v) {
    py::dict d;
    d["log_value"] = v.value.log_value;
    d["log10"] = v.value.log10();
    d["valid"] = v.valid;
    return d;
}

OutageQuery make_query(const SystemConfig& c, Scenario sc, double gamma_t_db) {
    OutageQuery q{c, sc, db_to_linear(gamma_t_db)};
    q.validate();
    return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Outage probability of reflecting-surface links: Chernoff bound, saddlepoint, CLT, Monte Carlo.";

    py::enum_<Scenario>(m, "Scenario")
        .value("NO_DIRECT_LINK", Scenario::NoDirectLink)
        .value("WITH_DIRECT_LINK", Scenario::WithDirectLink);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init([](int n, double d1, double d2, double dl, double v1, double v2, double vl, double gb_db) {
                 SystemConfig c{n, d1, d2, dl, v1, v2, vl, db_to_linear(gb_db)};
                 c.validate();
                 return c;
             }),
             py::kw_only(), py::arg("n_elements") = 8, py::arg("d1_m") = 5.0, py::arg("d2_m") = 5.0,
             py::arg("dL_m") = 7.0, py::arg("v1") = 2.5, py::arg("v2") = 2.5, py::arg("vL") = 3.5,
             py::arg("gamma_bar_db") = 0.0)
        .def_readwrite("n_elements", &SystemConfig::n_elements)
        .def_readwrite("d1_m", &SystemConfig::d1_m)
        .def_readwrite("d2_m", &SystemConfig::d2_m)
        .def_readwrite("dL_m", &SystemConfig::dL_m)
        .def_readwrite("v1", &SystemConfig::v1)
        .def_readwrite("v2", &SystemConfig::v2)
        .def_readwrite("vL", &SystemConfig::vL)
        .def_readwrite("gamma_bar", &SystemConfig::gamma_bar)
        .def_property_readonly("beta_r", &SystemConfig::beta_r)
        .def_property_readonly("alpha_l", &SystemConfig::alpha_l)
        .def("__eq__", [](const SystemConfig& a, const SystemConfig& b) { return a == b; })
        .def("__repr__", [](const SystemConfig& c) {
            return "SystemConfig(n_elements=" + std::to_string(c.n_elements) + ", ...)";
        });

    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);
    m.def(
        "channel_threshold",
        [](const SystemConfig& c, Scenario sc, double db) { return channel_threshold(make_query(c, sc, db)); },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"));

    m.def("bessel_k0", &specfun::bessel_k0);
    m.def("erfc", &specfun::erfc);
    m.def("log_upper_gamma_int", &specfun::log_upper_gamma_int, py::arg("n"), py::arg("a"));

    m.def("laplace_g", &laplace::laplace_g, py::arg("t"));
    m.def("laplace_d", &laplace::laplace_d, py::arg("t"), py::arg("alpha_l"));

    m.def(
        "chernoff_outage",
        [](const SystemConfig& c, Scenario sc, double db, double epsilon) {
            chernoff::GdmConfig g;
            g.epsilon = epsilon;
            const auto r = chernoff::chernoff_outage(make_query(c, sc, db), g);
            py::dict d;
            d["log_value"] = r.log_bound.log_value;
            d["log10"] = r.log_bound.log10();
            d["t_star"] = r.t_star ? py::cast(*r.t_star) : py::none();
            d["iterations"] = r.iterations;
            d["converged"] = r.converged;
            return d;
        },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"), py::arg("epsilon") = 1e-8);

    m.def(
        "saddlepoint_outage",
        [](const SystemConfig& c, Scenario sc, double db) {
            return tail_dict(saddlepoint::saddlepoint_outage(make_query(c, sc, db)));
        },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"));
    m.def(
        "saddlepoint_leading_outage",
        [](const SystemConfig& c, double db) {
            return tail_dict(saddlepoint::saddlepoint_leading_outage(make_query(c, Scenario::NoDirectLink, db)));
        },
        py::arg("config"), py::arg("gamma_t_db"));
    m.def("log_cdf_h1", [](double s, int n) { return tail_dict(saddlepoint::log_cdf_h1(s, n)); }, py::arg("s"),
          py::arg("n"));
    m.def("rate_function", &saddlepoint::rate_function, py::arg("s"), py::arg("n"));

    m.def(
        "clt_outage",
        [](const SystemConfig& c, Scenario sc, double db) { return clt::clt_outage(make_query(c, sc, db)).log_value; },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"));

    py::class_<mc::MCEstimate>(m, "MCEstimate")
        .def_readonly("p_hat", &mc::MCEstimate::p_hat)
        .def_readonly("std_err", &mc::MCEstimate::std_err)
        .def_readonly("hits", &mc::MCEstimate::hits)
        .def_readonly("n_samples", &mc::MCEstimate::n_samples)
        .def_readonly("seed", &mc::MCEstimate::seed)
        .def("upper_confidence", &mc::MCEstimate::upper_confidence);

    const auto mc_config = [](std::uint64_t n, std::uint64_t seed, unsigned workers) {
        mc::McConfig cfg;
        cfg.n_samples = n;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.validate();
        return cfg;
    };
    m.def(
        "mc_outage",
        [mc_config](const SystemConfig& c, Scenario sc, double db, std::uint64_t n, std::uint64_t seed,
                    unsigned workers) {
            const auto q = make_query(c, sc, db);
            const auto cfg = mc_config(n, seed, workers);
            py::gil_scoped_release release;
            return mc::mc_outage(q, cfg);
        },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"), py::arg("n_samples") = 1'000'000,
        py::arg("seed") = 1, py::arg("workers") = 0);
    m.def(
        "mc_curve",
        [mc_config](const SystemConfig& c, Scenario sc, const std::vector<double>& dbs, std::uint64_t n,
                    std::uint64_t seed, unsigned workers) {
            std::vector<double> grid;
            for (double db : dbs) grid.push_back(db_to_linear(db));
            const auto cfg = mc_config(n, seed, workers);
            c.validate();
            py::gil_scoped_release release;
            return mc::mc_curve(c, sc, grid, cfg);
        },
        py::arg("config"), py::arg("scenario"), py::arg("gamma_t_db"), py::arg("n_samples") = 1'000'000,
        py::arg("seed") = 1, py::arg("workers") = 0);
}
