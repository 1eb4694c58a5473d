// Python bindings for the main operations: scale computation, medium
// generation, data synthesis, imaging and constellation reconstruction.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cintrec/constellation.hpp"
#include "cintrec/forward.hpp"
#include "cintrec/imaging.hpp"
#include "cintrec/kernel_model.hpp"
#include "cintrec/medium.hpp"
#include "cintrec/pipeline.hpp"
#include "cintrec/scales.hpp"

namespace py = pybind11;
using namespace cintrec;

#ifndef CINTREC_PY_MODULE
#define CINTREC_PY_MODULE cintrec_core
#endif

PYBIND11_MODULE(CINTREC_PY_MODULE, m) {
    m.doc() = "passive-array imaging in random media";
    m.attr("__version__") = kToolVersion;

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("cross1") = 0.0, py::arg("cross2") = 0.0,
             py::arg("range") = 0.0)
        .def_readwrite("cross1", &Vec3::cross1)
        .def_readwrite("cross2", &Vec3::cross2)
        .def_readwrite("range", &Vec3::range);

    py::class_<Pt2>(m, "Pt2")
        .def(py::init<double, double>(), py::arg("cross") = 0.0, py::arg("range") = 0.0)
        .def_readwrite("cross", &Pt2::cross)
        .def_readwrite("range", &Pt2::range);

    py::class_<PhysicsConfig>(m, "PhysicsConfig")
        .def(py::init<>())
        .def_readwrite("lambda0", &PhysicsConfig::lambda0)
        .def_readwrite("ell", &PhysicsConfig::ell)
        .def_readwrite("L", &PhysicsConfig::L)
        .def_readwrite("aperture", &PhysicsConfig::aperture)
        .def_readwrite("sigma", &PhysicsConfig::sigma)
        .def_readwrite("B_frac", &PhysicsConfig::B_frac)
        .def_readwrite("X_factor", &PhysicsConfig::X_factor)
        .def_readwrite("Omega_factor", &PhysicsConfig::Omega_factor)
        .def_readwrite("cross_range_dim", &PhysicsConfig::cross_range_dim)
        .def("c0", &PhysicsConfig::c0)
        .def("k0", &PhysicsConfig::k0)
        .def("bandwidth", &PhysicsConfig::bandwidth)
        .def("validate", &PhysicsConfig::validate);

    py::class_<ScaleReport>(m, "ScaleReport")
        .def_readonly("S", &ScaleReport::S)
        .def_readonly("Omega_d", &ScaleReport::Omega_d)
        .def_readonly("X_d", &ScaleReport::X_d)
        .def_readonly("Omega", &ScaleReport::Omega)
        .def_readonly("X", &ScaleReport::X)
        .def_readonly("Omega_e", &ScaleReport::Omega_e)
        .def_readonly("X_e", &ScaleReport::X_e)
        .def_readonly("gamma", &ScaleReport::gamma)
        .def_readonly("theta", &ScaleReport::theta)
        .def_readonly("cross_range_res_cint", &ScaleReport::cross_range_res_cint)
        .def_readonly("range_res_cint", &ScaleReport::range_res_cint)
        .def_readonly("cross_range_res_fine", &ScaleReport::cross_range_res_fine)
        .def_readonly("range_res_fine", &ScaleReport::range_res_fine)
        .def_readonly("validity_ratios", &ScaleReport::validity_ratios);

    m.def("compute_scales", &compute_scales, py::arg("config"));
    m.def("check_regime", &check_regime, py::arg("config"), py::arg("report"),
          py::arg("strict") = false);
    m.def("gamma1", &gamma1, py::arg("zeta_bar_sq"), py::arg("theta"));

    py::class_<MediumRealization>(m, "MediumRealization")
        .def_readonly("seed", &MediumRealization::seed)
        .def_readonly("dim", &MediumRealization::dim)
        .def_readonly("ell", &MediumRealization::ell)
        .def_readonly("sigma", &MediumRealization::sigma)
        .def("num_modes", [](const MediumRealization& m_) { return m_.wavevectors.size(); });

    m.def("generate_medium", &generate_medium, py::arg("seed"), py::arg("num_modes"),
          py::arg("dim"), py::arg("ell"), py::arg("sigma"));
    m.def("eval_mu", &eval_mu, py::arg("medium"), py::arg("point"));
    m.def("delta_tau", &delta_tau, py::arg("medium"), py::arg("x"), py::arg("y"),
          py::arg("config"), py::arg("step") = -1.0);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def_static("linear", &ArrayGeometry::linear, py::arg("n"), py::arg("aperture"))
        .def_readonly("receivers", &ArrayGeometry::receivers)
        .def_readonly("aperture", &ArrayGeometry::aperture);

    py::class_<SourceSet>(m, "SourceSet")
        .def(py::init([](const std::vector<Vec3>& positions) {
                 SourceSet s;
                 s.positions = positions;
                 return s;
             }),
             py::arg("positions"))
        .def_readwrite("positions", &SourceSet::positions);

    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def_static("make", &FrequencyGrid::make, py::arg("config"), py::arg("n") = 257)
        .def_static("uniform", &FrequencyGrid::uniform, py::arg("lo"), py::arg("hi"), py::arg("n"))
        .def_readonly("omegas", &FrequencyGrid::omegas)
        .def_readonly("domega", &FrequencyGrid::domega)
        .def("time_window", &FrequencyGrid::time_window);

    py::class_<ArrayData>(m, "ArrayData")
        .def_readonly("values", &ArrayData::values)
        .def_readonly("noise_free", &ArrayData::noise_free)
        .def_readonly("grid", &ArrayData::grid)
        .def_readonly("geometry", &ArrayData::geometry)
        .def_readonly("noise_level", &ArrayData::noise_level)
        .def("at", &ArrayData::at, py::arg("receiver"), py::arg("freq"));

    m.def("pulse_spectrum", &pulse_spectrum, py::arg("omega"), py::arg("config"));
    m.def("green_function", &green_function, py::arg("omega"), py::arg("x"), py::arg("y"),
          py::arg("medium"), py::arg("config"));
    m.def("synthesize", &synthesize, py::arg("geometry"), py::arg("sources"), py::arg("medium"),
          py::arg("config"), py::arg("grid"), py::arg("noise_level"), py::arg("noise_seed"));
    m.def(
        "time_trace",
        [](const ArrayData& data, int receiver, const std::vector<double>& times) {
            return time_trace(data, receiver, times);
        },
        py::arg("data"), py::arg("receiver"), py::arg("times"));

    py::class_<WindowConfig>(m, "WindowConfig")
        .def(py::init<double, double>(), py::arg("Omega"), py::arg("X"))
        .def_static("from_scales", &WindowConfig::from_scales)
        .def_readwrite("Omega", &WindowConfig::Omega)
        .def_readwrite("X", &WindowConfig::X);

    py::class_<GridSpec>(m, "GridSpec")
        .def_static("centered", &GridSpec::centered, py::arg("center"), py::arg("dcross"),
                    py::arg("drange"), py::arg("half_ncross"), py::arg("half_nrange"))
        .def_readonly("origin_cross", &GridSpec::origin_cross)
        .def_readonly("origin_range", &GridSpec::origin_range)
        .def_readonly("dcross", &GridSpec::dcross)
        .def_readonly("drange", &GridSpec::drange)
        .def_readonly("ncross", &GridSpec::ncross)
        .def_readonly("nrange", &GridSpec::nrange)
        .def("node", &GridSpec::node, py::arg("ic"), py::arg("ir"));

    py::class_<ImageGrid>(m, "ImageGrid")
        .def_readonly("spec", &ImageGrid::spec)
        .def_readonly("values", &ImageGrid::values)
        .def("at", &ImageGrid::at, py::arg("ic"), py::arg("ir"));

    py::class_<Peak>(m, "Peak")
        .def_readonly("position", &Peak::position)
        .def_readonly("magnitude", &Peak::magnitude);

    py::class_<PeakList>(m, "PeakList")
        .def_readonly("peaks", &PeakList::peaks)
        .def_readonly("threshold", &PeakList::threshold)
        .def_readonly("radius_cross", &PeakList::radius_cross)
        .def_readonly("radius_range", &PeakList::radius_range);

    m.def("correlation_td", &correlation_td, py::arg("data"), py::arg("r"), py::arg("rp"),
          py::arg("t"), py::arg("tdiff"), py::arg("window"));
    m.def("correlation_fd", &correlation_fd, py::arg("data"), py::arg("r"), py::arg("rp"),
          py::arg("t"), py::arg("tdiff"), py::arg("window"));
    m.def(
        "two_point_image",
        [](const ArrayData& data, const Vec3& y, const Vec3& yp, const WindowConfig& win,
           const PhysicsConfig& cfg, const std::vector<double>& weights) {
            return two_point_image(data, y, yp, win, cfg, weights);
        },
        py::arg("data"), py::arg("y"), py::arg("yp"), py::arg("window"), py::arg("config"),
        py::arg("receiver_weights") = std::vector<double>());
    m.def(
        "cint_image",
        [](const ArrayData& data, const GridSpec& grid, const WindowConfig& win,
           const PhysicsConfig& cfg, int threads, const std::vector<double>& weights) {
            return cint_image(data, grid, win, cfg, threads, weights);
        },
        py::arg("data"), py::arg("grid"), py::arg("window"), py::arg("config"),
        py::arg("threads") = 1, py::arg("receiver_weights") = std::vector<double>());
    m.def(
        "offset_image",
        [](const ArrayData& data, const Vec3& z0, const GridSpec& grid, const WindowConfig& win,
           const PhysicsConfig& cfg, int threads, const std::vector<double>& weights) {
            return offset_image(data, z0, grid, win, cfg, threads, weights);
        },
        py::arg("data"), py::arg("z0"), py::arg("grid"), py::arg("window"), py::arg("config"),
        py::arg("threads") = 1, py::arg("receiver_weights") = std::vector<double>());
    m.def("migration_image", &migration_image, py::arg("data"), py::arg("grid"), py::arg("config"),
          py::arg("threads") = 1);
    m.def("detect_peaks", &detect_peaks, py::arg("image"), py::arg("threshold_frac"),
          py::arg("radius_cross"), py::arg("radius_range"));
    m.def("apodization_weights", &apodization_weights, py::arg("geometry"), py::arg("config"));

    m.def("kernel_sum", &kernel_sum, py::arg("y"), py::arg("yp"), py::arg("sources"),
          py::arg("scales"), py::arg("config"));

    py::class_<Tol2>(m, "Tol2")
        .def(py::init<double, double>(), py::arg("cross"), py::arg("range"))
        .def_readwrite("cross", &Tol2::cross)
        .def_readwrite("range", &Tol2::range);

    py::class_<OffsetSet>(m, "OffsetSet")
        .def_readonly("offsets", &OffsetSet::offsets)
        .def_readonly("magnitudes", &OffsetSet::magnitudes)
        .def_readonly("tol", &OffsetSet::tol)
        .def("contains", &OffsetSet::contains, py::arg("offset"));

    py::class_<Constellation>(m, "Constellation")
        .def_readonly("points", &Constellation::points)
        .def_readonly("anchor", &Constellation::anchor);

    m.def("vec_eq", &vec_eq, py::arg("u"), py::arg("v"), py::arg("tol"));
    m.def(
        "build_offsets",
        [](const std::vector<Pt2>& points, Tol2 tol) { return build_offsets(points, tol); },
        py::arg("points"), py::arg("tol"));
    m.def("symmetry_filter", &symmetry_filter, py::arg("offsets"));
    m.def("peaks_to_offsets", &peaks_to_offsets, py::arg("peaks"), py::arg("z0"), py::arg("tol"));
    m.def(
        "reconstruct",
        [](const OffsetSet& est, Pt2 z0, Tol2 tol, std::size_t node_cap) {
            return reconstruct(est, z0, tol, {node_cap});
        },
        py::arg("estimate"), py::arg("z0"), py::arg("tol"), py::arg("node_cap") = 1000000);
    m.def("congruent_up_to_reflection", &congruent_up_to_reflection, py::arg("a"), py::arg("b"),
          py::arg("tol"));

    m.def("load_config", &load_config, py::arg("path"));
    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("physics", &RunConfig::physics)
        .def_readwrite("num_receivers", &RunConfig::num_receivers)
        .def_readwrite("noise_level", &RunConfig::noise_level)
        .def_readwrite("output_dir", &RunConfig::output_dir);
    py::class_<PipelineResult>(m, "PipelineResult")
        .def_readonly("z0", &PipelineResult::z0)
        .def_readonly("num_offset_peaks", &PipelineResult::num_offset_peaks)
        .def_readonly("reconstruction_empty", &PipelineResult::reconstruction_empty)
        .def_readonly("reconstruction", &PipelineResult::reconstruction);
    m.def("run_pipeline", &run_pipeline, py::arg("config"), py::arg("threads") = 1);
}
