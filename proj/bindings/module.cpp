#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>

#include "zipfheaps/corpus.hpp"
#include "zipfheaps/errors.hpp"
#include "zipfheaps/expectation.hpp"
#include "zipfheaps/fit.hpp"
#include "zipfheaps/quadrature.hpp"
#include "zipfheaps/random_stream.hpp"
#include "zipfheaps/simulate.hpp"
#include "zipfheaps/special_functions.hpp"
#include "zipfheaps/zipf.hpp"

namespace py = pybind11;
using namespace zipfheaps;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> curve_points(const GrowthCurve& c) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(c.points.size());
    for (const GrowthPoint& p : c.points) {
        out.emplace_back(p.m, p.d);
    }
    return out;
}

GrowthCurve curve_from_points(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points) {
    GrowthCurve c;
    c.points.reserve(points.size());
    for (const auto& [m, d] : points) {
        c.points.push_back({m, d});
    }
    return c;
}

RankFrequency table_from_entries(
    const std::vector<std::pair<std::string, std::uint64_t>>& entries) {
    RankFrequency t;
    t.entries.reserve(entries.size());
    for (const auto& [token, count] : entries) {
        t.entries.push_back({token, count});
    }
    return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zipf text model: distinct-word expectations, sampling, and Heaps fits";

    py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);

    m.def("zeta", &zeta, py::arg("alpha"), "Riemann zeta for alpha > 1");
    m.def("zeta_tail", &zeta_tail, py::arg("s"), py::arg("from_"),
          "sum_{i >= from_} i^-s for s > 1");
    m.def("log_gamma", &log_gamma, py::arg("x"), "ln Gamma(x) for x > 0");

    m.def(
        "integrate_semi_infinite",
        [](const std::function<double(double)>& f, double a, double tol) {
            const QuadratureResult r = integrate_semi_infinite(f, a, tol);
            return std::make_pair(r.value, r.error_estimate);
        },
        py::arg("f"), py::arg("a"), py::arg("tol"),
        "Adaptive integral of f over [a, inf); returns (value, error_estimate)");

    py::class_<RandomStream>(m, "RandomStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_static("derive", &RandomStream::derive, py::arg("seed"), py::arg("k"))
        .def("next_u64", &RandomStream::next_u64)
        .def("uniform01", &RandomStream::uniform01);

    py::class_<ZipfParams>(m, "ZipfParams")
        .def(py::init<double>(), py::arg("alpha"))
        .def_property_readonly("alpha", &ZipfParams::alpha)
        .def_property_readonly("zeta_alpha", &ZipfParams::zeta_alpha)
        .def("__repr__", [](const ZipfParams& p) {
            std::ostringstream os;
            os << "ZipfParams(alpha=" << p.alpha() << ")";
            return os.str();
        });

    m.def("pmf", &pmf, py::arg("params"), py::arg("rank"));
    m.def(
        "tail_mass_bounds",
        [](const ZipfParams& p, std::uint64_t M) {
            const TailMassBounds b = tail_mass_bounds(p, M);
            return std::make_pair(b.lower, b.upper);
        },
        py::arg("params"), py::arg("M"), "Returns (lower, upper) for sum_{i>M} p_i");
    m.def("sample_rank", &sample_rank, py::arg("params"), py::arg("stream"));
    m.def("sample_text", &sample_text, py::arg("params"), py::arg("n"), py::arg("stream"));

    py::enum_<Method>(m, "Method")
        .value("ExactSeries", Method::ExactSeries)
        .value("Integral0", Method::Integral0)
        .value("Integral1", Method::Integral1)
        .value("ClosedForm", Method::ClosedForm)
        .value("Asymptotic", Method::Asymptotic);

    py::class_<ExpectationResult>(m, "ExpectationResult")
        .def_readonly("value", &ExpectationResult::value)
        .def_readonly("abs_error_bound", &ExpectationResult::abs_error_bound)
        .def_readonly("method", &ExpectationResult::method)
        .def("__repr__", [](const ExpectationResult& r) {
            std::ostringstream os;
            os << "ExpectationResult(" << method_name(r.method) << ", value=" << r.value
               << ")";
            return os.str();
        });

    py::enum_<LowerLimit>(m, "LowerLimit")
        .value("FromZero", LowerLimit::FromZero)
        .value("FromOne", LowerLimit::FromOne);

    py::enum_<IdentityForm>(m, "IdentityForm")
        .value("Sum", IdentityForm::Sum)
        .value("Product", IdentityForm::Product);

    m.def("exact_expected_distinct", &exact_expected_distinct, py::arg("params"),
          py::arg("n"), py::arg("eps") = 1e-9);
    m.def("integral_expected_distinct", &integral_expected_distinct, py::arg("params"),
          py::arg("n"), py::arg("lower"));
    m.def("closed_form_tail_integral", &closed_form_tail_integral, py::arg("alpha"),
          py::arg("n"));
    m.def("alternating_identity", &alternating_identity, py::arg("n"), py::arg("x"),
          py::arg("form"));
    m.def("asymptotic_expected_distinct", &asymptotic_expected_distinct, py::arg("params"),
          py::arg("n"));

    m.def("geometric_checkpoints", &geometric_checkpoints, py::arg("n"));
    m.def(
        "simulate_growth_curve",
        [](const ZipfParams& p, std::uint64_t n, RandomStream& s,
           const std::vector<std::uint64_t>& checkpoints) {
            return curve_points(simulate_growth_curve(p, n, s, checkpoints));
        },
        py::arg("params"), py::arg("n"), py::arg("stream"), py::arg("checkpoints"),
        "Returns the curve as a list of (m, d) pairs");
    m.def("per_trial_distinct", &per_trial_distinct, py::arg("params"), py::arg("n"),
          py::arg("trials"), py::arg("seed"));

    py::class_<MCEstimate>(m, "MCEstimate")
        .def_readonly("mean", &MCEstimate::mean)
        .def_readonly("std_error", &MCEstimate::std_error)
        .def_readonly("trials", &MCEstimate::trials)
        .def("__repr__", [](const MCEstimate& e) {
            std::ostringstream os;
            os << "MCEstimate(mean=" << e.mean << ", std_error=" << e.std_error
               << ", trials=" << e.trials << ")";
            return os.str();
        });

    m.def("monte_carlo_distinct", &monte_carlo_distinct, py::arg("params"), py::arg("n"),
          py::arg("trials"), py::arg("seed"));

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("exponent", &FitResult::exponent)
        .def_readonly("log_intercept", &FitResult::log_intercept)
        .def_readonly("residual_rms", &FitResult::residual_rms)
        .def_readonly("points_used", &FitResult::points_used)
        .def("__repr__", [](const FitResult& f) {
            std::ostringstream os;
            os << "FitResult(exponent=" << f.exponent << ", points=" << f.points_used << ")";
            return os.str();
        });

    m.def(
        "fit_heaps",
        [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
           std::uint64_t min_m) { return fit_heaps(curve_from_points(points), min_m); },
        py::arg("points"), py::arg("min_m") = 1000,
        "Least-squares slope of (ln m, ln d) over points with m >= min_m");
    m.def(
        "fit_zipf_alpha",
        [](const std::vector<std::pair<std::string, std::uint64_t>>& entries) {
            return fit_zipf_alpha(table_from_entries(entries));
        },
        py::arg("entries"),
        "MLE Zipf exponent of a (token, count) table sorted by descending count");

    py::class_<ReciprocityReport>(m, "ReciprocityReport")
        .def_readonly("alpha_hat", &ReciprocityReport::alpha_hat)
        .def_readonly("beta_hat", &ReciprocityReport::beta_hat)
        .def_readonly("product", &ReciprocityReport::product)
        .def_readonly("deviation", &ReciprocityReport::deviation)
        .def("__repr__", [](const ReciprocityReport& r) {
            std::ostringstream os;
            os << "ReciprocityReport(product=" << r.product << ")";
            return os.str();
        });

    m.def("reciprocity_report", &reciprocity_report, py::arg("alpha_hat"),
          py::arg("beta_hat"));

    m.def(
        "tokenize",
        [](const std::string& text) { return tokenize(text); }, py::arg("text"),
        "Lowercased word tokens of a UTF-8 string");
    m.def(
        "analyze_text",
        [](const std::string& text) {
            const CorpusAnalysis a = analyze_tokens(tokenize(text));
            std::vector<std::pair<std::string, std::uint64_t>> entries;
            entries.reserve(a.table.entries.size());
            for (const RankEntry& e : a.table.entries) {
                entries.emplace_back(e.token, e.count);
            }
            return py::make_tuple(curve_points(a.curve), entries, a.total_tokens);
        },
        py::arg("text"),
        "Returns (growth_points, rank_table, total_tokens) for a UTF-8 string");

#ifdef ZIPFHEAPS_VERSION
    m.attr("__version__") = ZIPFHEAPS_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
