#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "latbound/hermite_bounds.hpp"
#include "latbound/kz_bounds.hpp"
#include "latbound/lattice.hpp"
#include "latbound/proofcheck.hpp"
#include "latbound/specfun.hpp"
#include "latbound/validate.hpp"

namespace py = pybind11;

namespace {

using latbound::lattice::Basis;
using latbound::lattice::IntMatrix;
using latbound::lattice::Matrix;

py::dict report_to_dict(const latbound::validate::ValidationReport& report) {
    py::dict config;
    config["n"] = report.config.n;
    config["trials"] = report.config.trials;
    config["seed"] = report.config.seed;
    config["entry_range"] = report.config.entry_range;
    py::dict d;
    d["config"] = config;
    d["bound_used"] = report.bound_used;
    if (report.max_hermite_ratio) {
        d["max_hermite_ratio"] = *report.max_hermite_ratio;
    }
    if (report.max_kz_ratio) {
        d["max_kz_ratio"] = *report.max_kz_ratio;
    }
    d["violations"] = report.violations;
    py::list ratios;
    for (const auto& row : report.per_trial) {
        ratios.append(row.ratio);
    }
    d["ratios"] = ratios;
    return d;
}

}  // namespace

PYBIND11_MODULE(_latbound, m) {
    m.doc() = "bounds on lattice reduction constants, with an exact "
              "enumeration engine to test them against";

    // scalar special functions
    m.def("log_gamma", &latbound::specfun::log_gamma, py::arg("x"),
          "ln Gamma(x) for x > 0");
    m.def("digamma", &latbound::specfun::digamma, py::arg("x"),
          "Gamma'(x)/Gamma(x) for x > 0");

    // bounds on the squared-shortest-vector normalization
    m.def("exact_gamma", &latbound::hermite::exact_gamma, py::arg("n"),
          "exact value for n in {1..8, 24}, None otherwise");
    m.def("blichfeldt_bound", &latbound::hermite::blichfeldt_bound,
          py::arg("n"));
    m.def("best_hermite_bound", &latbound::hermite::best_upper_bound,
          py::arg("n"));
    m.def("hermite_crossover", &latbound::hermite::hermite_crossover);
    m.def(
        "figure1_series",
        [](int n_max) {
            std::vector<std::tuple<int, double, double>> rows;
            for (const auto& r : latbound::hermite::figure1_series(n_max)) {
                rows.emplace_back(r.n, r.ratio1, r.ratio2);
            }
            return rows;
        },
        py::arg("n_max"), "(n, ratio1, ratio2) rows");

    // bounds on the full-reduction constant
    m.def("schnorr_bound", &latbound::kz::schnorr_bound, py::arg("n"));
    m.def("hanrot_stehle_bound", &latbound::kz::hanrot_stehle_bound,
          py::arg("n"));
    m.def("wc18_bound", &latbound::kz::wc18_bound, py::arg("n"));
    m.def("new_bound", &latbound::kz::new_bound, py::arg("n"));
    m.def("kz_crossover", &latbound::kz::kz_crossover);
    m.def(
        "figure2_series",
        [](int n_lo, int n_hi) {
            std::vector<std::tuple<int, double>> rows;
            for (const auto& r : latbound::kz::figure2_series(n_lo, n_hi)) {
                rows.emplace_back(r.n, r.ratio);
            }
            return rows;
        },
        py::arg("n_lo") = 111, py::arg("n_hi") = 1000, "(n, ratio) rows");

    // derivation audit
    m.def(
        "run_proof_checks",
        []() {
            py::list out;
            for (const auto& r : latbound::proofcheck::run_all().results) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["computed"] = r.computed;
                d["threshold"] = r.threshold;
                d["margin"] = r.margin;
                d["tolerance"] = r.tolerance;
                out.append(d);
            }
            return out;
        },
        "every audited numeric step, in fixed order");

    // reduction engine; bases are m x n arrays with columns as vectors
    m.def(
        "svp_shortest",
        [](const Matrix& a, int cap) {
            auto rf = latbound::lattice::qr_decompose(Basis{a});
            auto sv = latbound::lattice::svp_shortest(rf, cap);
            return std::make_tuple(sv.coefficients, sv.norm);
        },
        py::arg("basis"), py::arg("cap") = 24,
        "(coefficients, norm) of an exact shortest nonzero vector");
    m.def(
        "lll_reduce",
        [](const Matrix& a, double delta) {
            auto [reduced, t] = latbound::lattice::lll_reduce(Basis{a},
                                                              delta);
            return std::make_tuple(reduced.A, t.Z);
        },
        py::arg("basis"), py::arg("delta") = 0.99,
        "(reduced_basis, transform)");
    m.def(
        "kz_reduce",
        [](const Matrix& a, int cap) {
            auto [reduced, t] = latbound::lattice::kz_reduce(Basis{a}, cap);
            return std::make_tuple(reduced.A, t.Z);
        },
        py::arg("basis"), py::arg("cap") = 24,
        "(reduced_basis, transform)");
    m.def(
        "is_kz_reduced",
        [](const Matrix& a, double tol, int cap) {
            return latbound::lattice::is_kz_reduced(Basis{a}, tol, cap);
        },
        py::arg("basis"), py::arg("tol") = 1e-9, py::arg("cap") = 24);
    m.def(
        "hermite_ratio",
        [](const Matrix& a, int cap) {
            return latbound::lattice::hermite_ratio(Basis{a}, cap);
        },
        py::arg("basis"), py::arg("cap") = 24);
    m.def(
        "kz_ratio",
        [](const Matrix& a, int cap) {
            return latbound::lattice::kz_ratio(Basis{a}, cap);
        },
        py::arg("basis"), py::arg("cap") = 24);
    m.def(
        "orthogonality_defect",
        [](const Matrix& a) {
            return latbound::lattice::orthogonality_defect(Basis{a});
        },
        py::arg("basis"));
    m.def(
        "is_unimodular",
        [](const IntMatrix& z) {
            return latbound::lattice::is_unimodular(z);
        },
        py::arg("transform"));
    m.def(
        "basis_from_gram",
        [](const Matrix& g) {
            return latbound::lattice::basis_from_gram(g).A;
        },
        py::arg("gram"),
        "upper-triangular basis whose Gram matrix is the argument");

    // randomized soundness trials
    m.def(
        "run_hermite_trials",
        [](int n, int trials, std::uint64_t seed, int entry_range) {
            latbound::validate::TrialConfig config{n, trials, seed,
                                                   entry_range};
            return report_to_dict(
                latbound::validate::run_hermite_trials(config));
        },
        py::arg("n"), py::arg("trials") = 200, py::arg("seed") = 0,
        py::arg("entry_range") = 10);
    m.def(
        "run_kz_trials",
        [](int n, int trials, std::uint64_t seed, int entry_range) {
            latbound::validate::TrialConfig config{n, trials, seed,
                                                   entry_range};
            return report_to_dict(
                latbound::validate::run_kz_trials(config));
        },
        py::arg("n"), py::arg("trials") = 100, py::arg("seed") = 0,
        py::arg("entry_range") = 10);
}
