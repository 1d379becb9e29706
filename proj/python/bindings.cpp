#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/errors.hpp"
#include "korobov/params.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"
#include "korobov/zeta.hpp"

namespace py = pybind11;
using namespace korobov;

namespace {

KorobovParams make_params(const std::string& gamma, const std::string& alpha) {
    return KorobovParams(parse_weight_spec(gamma), parse_smoothness_spec(alpha));
}

py::tuple as_tuple(const Frequency& k) {
    py::tuple t(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) t[i] = k[i];
    return t;
}

py::list entries(const std::vector<EigenEntry>& v) {
    py::list out;
    for (const auto& e : v) out.append(py::make_tuple(as_tuple(e.index), e.value));
    return out;
}

using CoeffDict = std::map<std::vector<std::int64_t>, std::complex<double>>;

FourierPoly to_poly(std::size_t d, const CoeffDict& coeffs) {
    FourierPoly f(d);
    for (const auto& [k, c] : coeffs) f.set(k, c);
    return f;
}

py::dict from_poly(const FourierPoly& f) {
    py::dict out;
    for (const auto& [k, c] : f.terms()) out[as_tuple(k)] = c;
    return out;
}

}  // namespace

PYBIND11_MODULE(_korobov, m) {
    m.doc() = "Worst-case L2 approximation in weighted Korobov spaces";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<MonotonicityViolation>(m, "MonotonicityViolation", base.ptr());
    py::register_exception<RangeViolation>(m, "RangeViolation", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<InsufficientBox>(m, "InsufficientBox", base.ptr());
    py::register_exception<NotApplicable>(m, "NotApplicable", base.ptr());

    py::class_<KorobovParams>(m, "Params")
        .def(py::init(&make_params), py::arg("gamma") = "const:1", py::arg("alpha") = "const:1")
        .def("gamma", &KorobovParams::gamma, py::arg("j"))
        .def("alpha", &KorobovParams::alpha, py::arg("j"))
        .def("__repr__", [](const KorobovParams& p) {
            return "Params(gamma='" + to_string(p.weights()) + "', alpha='" +
                   to_string(p.smoothness()) + "')";
        });

    m.def(
        "delta",
        [](const KorobovParams& p, std::optional<std::pair<std::size_t, std::size_t>> window) {
            const auto d = delta(p, window);
            return py::make_tuple(d.value, d.exact);
        },
        py::arg("params"), py::arg("window") = py::none(),
        "(value, exact) of liminf ln(1/gamma_j)/ln(j)");

    m.def(
        "riemann_zeta",
        [](double s) {
            const auto z = riemann_zeta(s);
            return py::make_tuple(z.value, z.abs_error_bound);
        },
        py::arg("s"), "(value, abs_error_bound)");

    m.def("univariate_r", &univariate_r, py::arg("k"), py::arg("alpha"), py::arg("gamma"));
    m.def(
        "product_r",
        [](const std::vector<std::int64_t>& k, const KorobovParams& p) {
            return product_r(k, p, k.size());
        },
        py::arg("k"), py::arg("params"));

    m.def(
        "enumerate_top",
        [](const KorobovParams& p, std::size_t d, std::size_t n) {
            return entries(enumerate_top(p, d, n));
        },
        py::arg("params"), py::arg("d"), py::arg("n"),
        "n largest eigenvalues as [(k, lambda), ...] in spectrum order");
    m.def(
        "brute_force_spectrum",
        [](const KorobovParams& p, std::size_t d, std::size_t kmax) {
            return entries(brute_force_spectrum(p, d, kmax));
        },
        py::arg("params"), py::arg("d"), py::arg("kmax"));
    m.def(
        "nth_eigenvalue",
        [](const KorobovParams& p, std::size_t d, std::size_t n) { return nth_eigenvalue(p, d, n); },
        py::arg("params"), py::arg("d"), py::arg("n"));
    m.def(
        "worst_case_error",
        [](const KorobovParams& p, std::size_t d, std::size_t n) {
            return worst_case_error(p, d, n);
        },
        py::arg("params"), py::arg("d"), py::arg("n"));
    m.def("eigen_sum_tau", &eigen_sum_tau, py::arg("params"), py::arg("d"), py::arg("tau"));

    m.def(
        "info_complexity",
        [](const KorobovParams& p, std::size_t d, double eps, unsigned threads) {
            const auto r = info_complexity({p, d, eps}, {CountOptions{}.node_budget, threads});
            py::dict out;
            out["count"] = r.count;
            out["nodes_visited"] = r.nodes_visited;
            return out;
        },
        py::arg("params"), py::arg("d"), py::arg("epsilon"), py::arg("threads") = 1u);
    m.def(
        "count_box_oracle",
        [](const KorobovParams& p, std::size_t d, double eps, std::optional<std::size_t> kmax) {
            ComplexityQuery q{p, d, eps};
            return count_box_oracle(q, kmax ? *kmax : minimal_certified_kmax(q));
        },
        py::arg("params"), py::arg("d"), py::arg("epsilon"), py::arg("kmax") = py::none());
    m.def(
        "info_complexity_upper_bound",
        [](const KorobovParams& p, std::size_t d, double eps, double tau) {
            return info_complexity_upper_bound({p, d, eps}, tau);
        },
        py::arg("params"), py::arg("d"), py::arg("epsilon"), py::arg("tau"));
    m.def(
        "C_tau_q",
        [](const KorobovParams& p, double tau, double q, std::size_t d_max) {
            const auto c = C_tau_q(p, tau, q, d_max);
            return py::make_tuple(c.value, c.argmax_d, c.still_increasing);
        },
        py::arg("params"), py::arg("tau"), py::arg("q"), py::arg("d_max"),
        "(value, argmax_d, still_increasing)");

    m.def(
        "classify",
        [](const KorobovParams& p) {
            const auto r = classify(p);
            py::dict out;
            out["delta"] = r.delta.value;
            out["delta_exact"] = r.delta.exact;
            out["alpha1"] = r.alpha1;
            out["spt"] = to_string(r.spt);
            out["pt"] = to_string(r.pt);
            out["p_str"] = r.p_str ? py::cast(*r.p_str) : py::none();
            out["curse"] = to_string(r.curse);
            out["wt_t1_gt_1"] = to_string(r.wt_t1_gt_1);
            out["notes"] = r.notes;
            return out;
        },
        py::arg("params"));
    m.def("spt_exponent", &spt_exponent, py::arg("params"));
    m.def(
        "curse_witness",
        [](const KorobovParams& p, double eps, std::size_t d) {
            const auto w = curse_witness(p, eps, d);
            return py::make_tuple(w.lower_bound, w.holds);
        },
        py::arg("params"), py::arg("epsilon"), py::arg("d"));
    m.def(
        "fit_exponent",
        [](const KorobovParams& p, std::size_t d, const std::vector<double>& grid) {
            const auto f = fit_exponent(p, d, grid);
            py::dict out;
            out["slope"] = f.slope;
            out["intercept"] = f.intercept;
            out["residual"] = f.residual;
            out["counts"] = f.counts;
            return out;
        },
        py::arg("params"), py::arg("d"), py::arg("epsilons"));

    m.def(
        "h_norm",
        [](const CoeffDict& f, std::size_t d, const KorobovParams& p) {
            return h_norm(to_poly(d, f), p);
        },
        py::arg("coeffs"), py::arg("d"), py::arg("params"));
    m.def(
        "optimal_index_set",
        [](const KorobovParams& p, std::size_t d, std::size_t n) {
            py::list out;
            for (const auto& k : optimal_index_set(p, d, n)) out.append(as_tuple(k));
            return out;
        },
        py::arg("params"), py::arg("d"), py::arg("n"));
    m.def(
        "approximate",
        [](const CoeffDict& f, std::size_t d, const KorobovParams& p, std::size_t n) {
            return from_poly(approximate(to_poly(d, f), p, n));
        },
        py::arg("coeffs"), py::arg("d"), py::arg("params"), py::arg("n"));
    m.def(
        "l2_error",
        [](const CoeffDict& f, const CoeffDict& g, std::size_t d) {
            return l2_error(to_poly(d, f), to_poly(d, g));
        },
        py::arg("f"), py::arg("g"), py::arg("d"));
    m.def(
        "worst_case_witness",
        [](const KorobovParams& p, std::size_t d, std::size_t n) {
            auto w = worst_case_witness(p, d, n);
            return py::make_tuple(from_poly(w.f), w.error);
        },
        py::arg("params"), py::arg("d"), py::arg("n"));
}
