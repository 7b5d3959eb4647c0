#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coorbit/frame.hpp"
#include "coorbit/gallery.hpp"
#include "coorbit/gram.hpp"
#include "coorbit/hilbert.hpp"
#include "coorbit/topology.hpp"

namespace py = pybind11;
using namespace coorbit;

namespace {

FrameSpec spec_from_kwargs(const std::string& kind, const py::kwargs& kwargs) {
  FrameSpec spec;
  spec.kind = frame_kind_from_string(kind);
  for (const auto& item : kwargs) {
    const auto name = item.first.cast<std::string>();
    if (name == "d") spec.d = item.second.cast<index_t>();
    else if (name == "m") spec.m = item.second.cast<index_t>();
    else if (name == "copies") spec.copies = item.second.cast<index_t>();
    else if (name == "n") spec.n = item.second.cast<index_t>();
    else if (name == "a") spec.time_step = item.second.cast<index_t>();
    else if (name == "b") spec.freq_step = item.second.cast<index_t>();
    else if (name == "decay") spec.decay = item.second.cast<double>();
    else if (name == "bandwidth") spec.bandwidth = item.second.cast<index_t>();
    else if (name == "condition") spec.condition = item.second.cast<double>();
    else if (name == "seed") spec.seed = item.second.cast<std::uint64_t>();
    else if (name == "name") spec.name = item.second.cast<std::string>();
    else throw spec_error("unknown frame parameter: " + name);
  }
  return spec;
}

}  // namespace

PYBIND11_MODULE(_coorbit, m) {
  m.doc() = "Frames, dual frames, cross Gram matrices, and weighted co-orbit norms";

  py::register_exception<dimension_error>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<spec_error>(m, "SpecError", PyExc_ValueError);
  py::register_exception<conditioning_error>(m, "ConditioningError",
                                             PyExc_ArithmeticError);
  py::register_exception<consistency_error>(m, "ConsistencyError",
                                            PyExc_RuntimeError);
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);

  py::class_<Frame>(m, "Frame")
      .def(py::init<cmat>(), py::arg("vectors"),
           "d x M complex array whose columns are the frame vectors")
      .def_property_readonly("dim", &Frame::dim)
      .def_property_readonly("size", &Frame::size)
      .def_property_readonly("vectors",
                             [](const Frame& f) { return f.vectors(); })
      .def("vector", &Frame::vector, py::arg("k"));

  py::class_<DualPair>(m, "DualPair")
      .def(py::init<Frame, Frame>(), py::arg("primal"), py::arg("dual"))
      .def_readonly("primal", &DualPair::primal)
      .def_readonly("dual", &DualPair::dual)
      .def_property_readonly("dim", &DualPair::dim)
      .def_property_readonly("size", &DualPair::size);

  py::class_<Weight>(m, "Weight")
      .def(py::init<rvec>(), py::arg("values"))
      .def_static("constant", &Weight::constant, py::arg("m"),
                  py::arg("value") = 1.0)
      .def_property_readonly("values",
                             [](const Weight& w) { return w.values(); })
      .def_property_readonly("size", &Weight::size)
      .def("__call__", [](const Weight& w, index_t k) { return w(k); })
      .def_property_readonly("spread", &Weight::spread)
      .def_property_readonly("degenerate", &Weight::degenerate);

  py::class_<FrameBounds>(m, "FrameBounds")
      .def_readonly("lower", &FrameBounds::lower)
      .def_readonly("upper", &FrameBounds::upper)
      .def("__repr__", [](const FrameBounds& b) {
        return "FrameBounds(lower=" + std::to_string(b.lower) +
               ", upper=" + std::to_string(b.upper) + ")";
      });

  py::class_<DualityReport>(m, "DualityReport")
      .def_readonly("primal_residual", &DualityReport::primal_residual)
      .def_readonly("dual_residual", &DualityReport::dual_residual)
      .def_readonly("tolerance", &DualityReport::tolerance)
      .def_readonly("pass_", &DualityReport::pass)
      .def_property_readonly("max_residual", &DualityReport::max_residual);

  m.def("inner", &inner, py::arg("f"), py::arg("g"),
        "Inner product, conjugate linear in the second slot");
  m.def("linf_w_norm", &linf_w_norm, py::arg("alpha"), py::arg("w"));
  m.def("l1_inv_w_norm", &l1_inv_w_norm, py::arg("alpha"), py::arg("w"));

  m.def("analysis", &analysis, py::arg("frame"), py::arg("f"));
  m.def("synthesis", &synthesis, py::arg("frame"), py::arg("coeff"));
  m.def("frame_operator", &frame_operator, py::arg("frame"));
  m.def("frame_bounds", &frame_bounds, py::arg("frame"));
  m.def("canonical_dual", &canonical_dual, py::arg("frame"));
  m.def("canonical_pair", &canonical_pair, py::arg("frame"));
  m.def("verify_dual", &verify_dual, py::arg("pair"), py::arg("tol"));
  m.def("mercedes_frame", &mercedes_frame);

  py::class_<CrossGram>(m, "CrossGram")
      .def(py::init<const DualPair&, Weight>(), py::arg("pair"), py::arg("w"))
      .def_property_readonly("matrix",
                             [](const CrossGram& g) { return g.matrix(); })
      .def_property_readonly("size", &CrossGram::size)
      .def_property_readonly("opnorm", &CrossGram::opnorm)
      .def_property_readonly("opnorm_row", &CrossGram::opnorm_row)
      .def_property_readonly(
          "weighted_row_sums",
          [](const CrossGram& g) { return g.weighted_row_sums(); })
      .def("row_sum", &CrossGram::row_sum, py::arg("k"))
      .def("weighted_row_sum", &CrossGram::weighted_row_sum, py::arg("k"))
      .def("extremal_vector", &CrossGram::extremal_vector, py::arg("k"));

  m.def("gram_opnorm_linf_w", &gram_opnorm_linf_w, py::arg("gram"));
  m.def("coorbit_norm", &coorbit_norm, py::arg("pair"), py::arg("w"),
        py::arg("f"));
  m.def("fixed_point_residual", &fixed_point_residual, py::arg("gram"),
        py::arg("alpha"));
  m.def(
      "range_basis",
      [](const DualPair& pair) { return range_basis(pair).basis(); },
      py::arg("pair"),
      "Orthonormal basis (M x d) of the coefficient operator range");

  py::class_<ProjectionCheck>(m, "ProjectionCheck")
      .def_readonly("range_identity_residual",
                    &ProjectionCheck::range_identity_residual)
      .def_readonly("projection_residual", &ProjectionCheck::projection_residual)
      .def_readonly("rank", &ProjectionCheck::rank)
      .def_readonly("eigenspace_dim", &ProjectionCheck::eigenspace_dim)
      .def_readonly("principal_angle", &ProjectionCheck::principal_angle)
      .def_readonly("pass_", &ProjectionCheck::pass);

  m.def("verify_projection_identity", &verify_projection_identity,
        py::arg("pair"), py::arg("w"), py::arg("tol"),
        py::arg("angle_tol") = 1e-8);

  m.def("seminorm", &seminorm, py::arg("f"), py::arg("v"));

  py::class_<CounterexampleReport>(m, "CounterexampleReport")
      .def_readonly("seminorms", &CounterexampleReport::seminorms)
      .def_readonly("norms", &CounterexampleReport::norms)
      .def_readonly("pointwise_decay", &CounterexampleReport::pointwise_decay)
      .def_readonly("norm_no_decay", &CounterexampleReport::norm_no_decay);

  m.def(
      "onb_counterexample",
      [](index_t n, index_t k, std::optional<Weight> w) {
        return onb_counterexample(n, k, std::move(w));
      },
      py::arg("n"), py::arg("k"), py::arg("w") = std::nullopt);

  py::class_<LocalizationProfile>(m, "LocalizationProfile")
      .def_readonly("band_max", &LocalizationProfile::band_max)
      .def_readonly("fitted_rate", &LocalizationProfile::fitted_rate)
      .def_readonly("envelope_constant", &LocalizationProfile::envelope_constant)
      .def_readonly("poly_exponent", &LocalizationProfile::poly_exponent)
      .def_readonly("correlation", &LocalizationProfile::correlation)
      .def_readonly("decay_ratio", &LocalizationProfile::decay_ratio)
      .def_readonly("diagonal", &LocalizationProfile::diagonal)
      .def_readonly("localized", &LocalizationProfile::localized);

  m.def("localization_profile", &localization_profile, py::arg("pair"));

  m.def(
      "materialize_frame",
      [](const std::string& kind, const py::kwargs& kwargs) {
        return materialize(spec_from_kwargs(kind, kwargs));
      },
      py::arg("kind"),
      "Generate a gallery frame, e.g. materialize_frame('gabor_zn', n=8, a=2, b=2)");

  m.attr("__version__") = "0.1.0";
}
