#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ehvi/benchmark.hpp"
#include "ehvi/ehvi.hpp"
#include "ehvi/errors.hpp"
#include "ehvi/oracle.hpp"
#include "ehvi/wfg.hpp"

namespace py = pybind11;

namespace {

using Points = std::vector<ehvi::ObjectiveVector>;

ehvi::ProblemFrame make_frame(const ehvi::ObjectiveVector& reference, bool maximize) {
    return ehvi::ProblemFrame(reference, maximize ? ehvi::Orientation::maximize : ehvi::Orientation::minimize);
}

py::dict compute(const Points& front, const ehvi::ObjectiveVector& reference, const ehvi::ObjectiveVector& mean,
                 const ehvi::ObjectiveVector& stddev, bool maximize, const std::string& algorithm) {
    const ehvi::ProblemFrame frame = make_frame(reference, maximize);
    const ehvi::Front validated = ehvi::validate_front(frame, front);
    const ehvi::GaussianBelief belief = ehvi::to_internal(frame, ehvi::GaussianBelief(mean, stddev));
    const ehvi::Algorithm resolved = ehvi::resolve_algorithm(ehvi::parse_algorithm(algorithm), validated.objectives());
    ehvi::EhviResult res;
    {
        py::gil_scoped_release release;
        res = ehvi::compute_ehvi(validated, belief, resolved);
    }
    py::dict out;
    out["value"] = res.value;
    out["work"] = res.work;
    out["algorithm"] = ehvi::to_string(resolved);
    return out;
}

py::dict monte_carlo(const Points& front, const ehvi::ObjectiveVector& reference, const ehvi::ObjectiveVector& mean,
                     const ehvi::ObjectiveVector& stddev, std::size_t samples, std::uint64_t seed, bool maximize,
                     unsigned threads) {
    const ehvi::ProblemFrame frame = make_frame(reference, maximize);
    const ehvi::Front validated = ehvi::validate_front(frame, front);
    const ehvi::GaussianBelief belief = ehvi::to_internal(frame, ehvi::GaussianBelief(mean, stddev));
    ehvi::McEstimate est;
    {
        py::gil_scoped_release release;
        est = ehvi::ehvi_monte_carlo(validated, belief, samples, seed, threads);
    }
    py::dict out;
    out["mean"] = est.mean;
    out["std_error"] = est.std_error;
    out["samples"] = est.samples;
    out["seed"] = est.seed;
    return out;
}

double hypervolume(const Points& points, const ehvi::ObjectiveVector& reference, bool maximize) {
    const ehvi::ProblemFrame frame = make_frame(reference, maximize);
    Points internal;
    internal.reserve(points.size());
    for (const auto& p : points) internal.push_back(ehvi::to_internal(frame, p));
    return ehvi::hypervolume(internal, frame.internal_reference());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact expected hypervolume improvement";

    auto error = py::register_exception<ehvi::Error>(m, "Error");
    py::register_exception<ehvi::DimensionError>(m, "DimensionError", error.ptr());
    py::register_exception<ehvi::InvalidFrontError>(m, "InvalidFrontError", error.ptr());
    py::register_exception<ehvi::ReferenceBoundError>(m, "ReferenceBoundError", error.ptr());
    py::register_exception<ehvi::ParameterError>(m, "ParameterError", error.ptr());
    py::register_exception<ehvi::UnsupportedDimensionError>(m, "UnsupportedDimensionError", error.ptr());

    m.def("dominates", [](const ehvi::ObjectiveVector& a, const ehvi::ObjectiveVector& b) { return ehvi::dominates(a, b); },
          py::arg("a"), py::arg("b"), "True if a dominates b under minimization.");
    m.def("nondominated_filter", &ehvi::nondominated_filter, py::arg("points"),
          "Mutually nondominated subset, sorted lexicographically (minimization).");
    m.def("hypervolume", &hypervolume, py::arg("points"), py::arg("reference"), py::arg("maximize") = false,
          "Dominated hypervolume of a point list bounded by the reference point.");
    m.def("psi", &ehvi::psi, py::arg("a"), py::arg("mu"), py::arg("sigma"),
          "Integral of Phi((y - mu) / sigma) over (-inf, a].");
    m.def(
        "box_integral",
        [](const ehvi::ObjectiveVector& lower, const ehvi::ObjectiveVector& upper, const ehvi::ObjectiveVector& mean,
           const ehvi::ObjectiveVector& stddev) {
            return ehvi::box_integral(ehvi::HyperBox{lower, upper}, ehvi::GaussianBelief(mean, stddev));
        },
        py::arg("lower"), py::arg("upper"), py::arg("mean"), py::arg("stddev"),
        "Integral of the Gaussian dominance-probability product over a box (minimization).");
    m.def("ehvi", &compute, py::arg("front"), py::arg("reference"), py::arg("mean"), py::arg("stddev"),
          py::arg("maximize") = false, py::arg("algorithm") = "auto",
          "Exact EHVI. Returns a dict with value, work and the resolved algorithm.");
    m.def("ehvi_monte_carlo", &monte_carlo, py::arg("front"), py::arg("reference"), py::arg("mean"),
          py::arg("stddev"), py::arg("samples") = 1000000, py::arg("seed") = 0, py::arg("maximize") = false,
          py::arg("threads") = 0, "Monte-Carlo EHVI estimate with its standard error.");
    m.def(
        "generate_front",
        [](std::size_t objectives, std::size_t n, std::uint64_t seed) { return ehvi::generate_front(objectives, n, seed).points; },
        py::arg("m"), py::arg("n"), py::arg("seed") = 0,
        "Random mutually nondominated points in [0.1, 10]^m (maximization, reference at the origin).");
}
