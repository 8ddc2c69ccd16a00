#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locbmo/counterexample.hpp"
#include "locbmo/geometry.hpp"
#include "locbmo/runner.hpp"
#include "locbmo/sqfun.hpp"

namespace py = pybind11;
using namespace locbmo;

namespace {

DiscreteSpace build_grid_space(int dim, double extent, double spacing,
                               const std::string& metric, const std::string& weight,
                               double exponent) {
  SpaceSpec spec;
  spec.dim = dim;
  spec.extent = extent;
  spec.spacing = spacing;
  spec.metric = metric_from_string(metric);
  if (weight == "lebesgue") {
    spec.weight.kind = WeightSpec::Kind::Lebesgue;
  } else if (weight == "counting") {
    spec.weight.kind = WeightSpec::Kind::Counting;
  } else if (weight == "power") {
    spec.weight.kind = WeightSpec::Kind::Power;
    spec.weight.exponent = exponent;
  } else {
    throw std::invalid_argument("weight must be lebesgue|power|counting");
  }
  return DiscreteSpace::build_grid(spec);
}

ScaleFnKind scale_kind(const std::string& name) {
  if (name == "psi") return ScaleFnKind::Psi;
  if (name == "phi_star") return ScaleFnKind::PhiStar;
  if (name == "phi_lower_star") return ScaleFnKind::PhiLowerStar;
  if (name == "psi_lower_star") return ScaleFnKind::PsiLowerStar;
  throw std::invalid_argument("unknown scale function kind: " + name);
}

}  // namespace

PYBIND11_MODULE(_locbmo, m) {
  m.doc() = "Localized BMO/BLO norms, Schrodinger-kernel square functions, and "
            "metric-geometry checkers on discretized doubling spaces";

  py::class_<DiscreteSpace>(m, "DiscreteSpace")
      .def_property_readonly("size", &DiscreteSpace::size)
      .def_property_readonly("dim", &DiscreteSpace::dim)
      .def_property_readonly("spacing", &DiscreteSpace::spacing)
      .def_property_readonly("diam", &DiscreteSpace::diam)
      .def_property_readonly("total_mass", &DiscreteSpace::total_mass)
      .def("coord", &DiscreteSpace::coord, py::arg("i"), py::arg("axis") = 0)
      .def("mass", &DiscreteSpace::mass)
      .def("distance", &DiscreteSpace::distance)
      .def("nearest_point", &DiscreteSpace::nearest_point)
      .def("ball_members", &DiscreteSpace::ball_members, py::arg("center"),
           py::arg("radius"), py::arg("closed") = false)
      .def("ball_measure", &DiscreteSpace::ball_measure, py::arg("center"),
           py::arg("radius"), py::arg("closed") = false)
      .def("vxy", [](const DiscreteSpace& s, int x, int y) {
        const auto v = s.vxy(x, y);
        return py::make_tuple(v.value, v.degenerate);
      });

  m.def("build_grid_space", &build_grid_space, py::arg("dim"), py::arg("extent"),
        py::arg("spacing"), py::arg("metric") = "euclidean",
        py::arg("weight") = "lebesgue", py::arg("exponent") = 0.0);

  py::class_<DoublingCertificate>(m, "DoublingCertificate")
      .def_readonly("c1", &DoublingCertificate::c1)
      .def_readonly("c2", &DoublingCertificate::c2)
      .def_readonly("n", &DoublingCertificate::n);
  m.def("doubling_certificate",
        [](const DiscreteSpace& s) { return doubling_certificate(s); });

  py::class_<Potential>(m, "Potential")
      .def_readonly("values", &Potential::values)
      .def_static("constant", &Potential::constant)
      .def_static("power", &Potential::power)
      .def_static("indicator", &Potential::indicator);

  py::class_<AdmissibleFn>(m, "AdmissibleFn")
      .def_readonly("values", &AdmissibleFn::values)
      .def_readonly("c0", &AdmissibleFn::c0)
      .def_readonly("k0", &AdmissibleFn::k0)
      .def_readonly("tradeoff", &AdmissibleFn::tradeoff)
      .def_readonly("capped", &AdmissibleFn::capped)
      .def_static("constant", &AdmissibleFn::constant);
  m.def("schrodinger_rho", &schrodinger_rho, py::arg("space"), py::arg("potential"),
        py::arg("radius_count") = 64);

  py::class_<AdmissibilityCertificate>(m, "AdmissibilityCertificate")
      .def_readonly("c0", &AdmissibilityCertificate::c0)
      .def_readonly("k0", &AdmissibilityCertificate::k0)
      .def_readonly("tradeoff", &AdmissibilityCertificate::tradeoff);
  m.def("admissibility_certificate",
        [](const DiscreteSpace& s, const std::vector<double>& rho) {
          return admissibility_certificate(s, rho);
        });

  py::class_<Ball>(m, "Ball")
      .def(py::init<int, double>())
      .def_readwrite("center", &Ball::center)
      .def_readwrite("radius", &Ball::radius);

  py::class_<BallFamily>(m, "BallFamily")
      .def_readonly("balls", &BallFamily::balls)
      .def_property_readonly("size", &BallFamily::size)
      .def_static("enumerate", &BallFamily::enumerate, py::arg("space"), py::arg("rho"),
                  py::arg("center_budget") = 0, py::arg("radius_count") = 40);

  py::class_<ReverseHolderResult>(m, "ReverseHolderResult")
      .def_readonly("constant", &ReverseHolderResult::constant)
      .def_readonly("skipped", &ReverseHolderResult::skipped);
  m.def("reverse_holder_constant", &reverse_holder_constant);

  py::class_<NormReport>(m, "NormReport")
      .def_readonly("oscillation_part", &NormReport::oscillation_part)
      .def_readonly("local_part", &NormReport::local_part)
      .def_readonly("total", &NormReport::total)
      .def_readonly("argmax_oscillation", &NormReport::argmax_oscillation)
      .def_readonly("argmax_local", &NormReport::argmax_local);
  m.def("ball_average", &ball_average);
  m.def("mean_oscillation", &mean_oscillation, py::arg("space"), py::arg("f"),
        py::arg("ball"), py::arg("q") = 1.0);
  m.def("essinf_ball", &essinf_ball);
  m.def("bmo_rho_norm", &bmo_rho_norm, py::arg("space"), py::arg("f"), py::arg("family"),
        py::arg("q") = 1.0);
  m.def("blo_rho_norm", &blo_rho_norm, py::arg("space"), py::arg("f"), py::arg("family"),
        py::arg("q") = 1.0);
  m.def("bmo_phi_norm", &bmo_phi_norm, py::arg("space"), py::arg("f"), py::arg("family"),
        py::arg("phi"), py::arg("tilde") = false);

  py::class_<ScaleGrid>(m, "ScaleGrid")
      .def_readonly("t_values", &ScaleGrid::t_values)
      .def_readonly("log_weights", &ScaleGrid::log_weights)
      .def_readonly("t_min", &ScaleGrid::t_min)
      .def_readonly("t_max", &ScaleGrid::t_max)
      .def_static("logarithmic", &ScaleGrid::logarithmic)
      .def_static("for_space", &ScaleGrid::for_space, py::arg("space"),
                  py::arg("count") = 48);

  m.def("schrodinger_generator", &schrodinger_generator);

  py::class_<KernelFamily>(m, "KernelFamily")
      .def_property_readonly("eigenvalues",
                             [](const KernelFamily& f) { return f.eigenvalues(); })
      .def_property_readonly("basis", [](const KernelFamily& f) { return f.basis(); })
      .def_property_readonly("n", &KernelFamily::n)
      .def("apply", &KernelFamily::apply)
      .def("kernel_matrix", &KernelFamily::kernel_matrix)
      .def("mass_integral", &KernelFamily::mass_integral)
      .def("multiplier_bound", &KernelFamily::multiplier_bound);
  m.def("build_qt_family", &build_qt_family);

  py::class_<KernelDecayCertificate>(m, "KernelDecayCertificate")
      .def_readonly("c_i", &KernelDecayCertificate::c_i)
      .def_readonly("gamma", &KernelDecayCertificate::gamma)
      .def_readonly("delta1", &KernelDecayCertificate::delta1)
      .def_readonly("c_ii", &KernelDecayCertificate::c_ii)
      .def_readonly("delta2", &KernelDecayCertificate::delta2)
      .def("qi_constant", &KernelDecayCertificate::qi_constant)
      .def("qii_constant", &KernelDecayCertificate::qii_constant);
  m.def("decay_certificate", [](const KernelFamily& f, const AdmissibleFn& rho) {
    return decay_certificate(f, rho);
  });
  m.def("verify_decay_certificate", &verify_decay_certificate);

  py::enum_<SquareFunctionKind>(m, "SquareFunctionKind")
      .value("G", SquareFunctionKind::G)
      .value("LusinArea", SquareFunctionKind::LusinArea)
      .value("GLambdaStar", SquareFunctionKind::GLambdaStar);
  py::class_<SquareFunctionResult>(m, "SquareFunctionResult")
      .def_readonly("values", &SquareFunctionResult::values)
      .def_readonly("kind", &SquareFunctionResult::kind)
      .def_readonly("lambda_", &SquareFunctionResult::lambda)
      .def_readonly("truncation", &SquareFunctionResult::truncation);
  m.def("g_function", &g_function);
  m.def("lusin_area", &lusin_area);
  m.def("g_lambda_star", &g_lambda_star);
  m.def("l2_norm", &l2_norm);

  m.def("eval_scale_fn", [](const std::string& kind, double r) {
    return eval_scale_fn(scale_kind(kind), r);
  });
  m.def("psi_lower_star_from_log", &psi_lower_star_from_log);
  m.def("multiplier_g", &multiplier_g);
  m.def("f_log", &f_log);
  py::class_<CriticalRadius>(m, "CriticalRadius")
      .def_readonly("k", &CriticalRadius::k)
      .def_readonly("log_two_over_r", &CriticalRadius::log_two_over_r)
      .def_readonly("r", &CriticalRadius::r)
      .def_readonly("underflowed", &CriticalRadius::underflowed);
  m.def("solve_rk", &solve_rk);
  m.def("max_feasible_m", &max_feasible_m);
  py::class_<ShapeReport>(m, "ShapeReport")
      .def_readonly("m", &ShapeReport::m)
      .def_readonly("nonneg_ok", &ShapeReport::nonneg_ok)
      .def_readonly("increasing_ok", &ShapeReport::increasing_ok)
      .def_readonly("concave_ok", &ShapeReport::concave_ok)
      .def_readonly("endpoint_rel_err", &ShapeReport::endpoint_rel_err);
  m.def("verify_shape", &verify_shape, py::arg("m"), py::arg("samples") = 1000);
  py::class_<DivergenceRow>(m, "DivergenceRow")
      .def_readonly("m", &DivergenceRow::m)
      .def_readonly("log2_r3", &DivergenceRow::log2_r3)
      .def_readonly("interval_average", &DivergenceRow::interval_average)
      .def_readonly("lower_bound", &DivergenceRow::lower_bound)
      .def_readonly("ratio", &DivergenceRow::ratio);
  m.def("blo_divergence", &blo_divergence);
  m.def("sample_abs_fg", &sample_abs_fg);
  m.def("sample_f_log", &sample_f_log);

  py::class_<AnnularDecayCertificate>(m, "AnnularDecayCertificate")
      .def_readonly("delta", &AnnularDecayCertificate::delta)
      .def_readonly("k_const", &AnnularDecayCertificate::k_const)
      .def_readonly("curve", &AnnularDecayCertificate::curve);
  m.def("annular_decay_certificate",
        [](const DiscreteSpace& s) { return annular_decay_certificate(s); });

  py::class_<WeakGeodesicWitness>(m, "WeakGeodesicWitness")
      .def_readonly("x", &WeakGeodesicWitness::x)
      .def_readonly("r", &WeakGeodesicWitness::r)
      .def_readonly("s", &WeakGeodesicWitness::s)
      .def_readonly("y", &WeakGeodesicWitness::y)
      .def_readonly("dist_to_ball", &WeakGeodesicWitness::dist_to_ball);
  py::class_<GeodesicCertificate>(m, "GeodesicCertificate")
      .def_readonly("holds", &GeodesicCertificate::holds)
      .def_readonly("constant", &GeodesicCertificate::constant)
      .def_readonly("witness", &GeodesicCertificate::witness)
      .def_readonly("ratio_by_s", &GeodesicCertificate::ratio_by_s);
  m.def(
      "weak_geodesic_certificate",
      [](const DiscreteSpace& s, const std::vector<double>& s_factors, bool sub_radii) {
        WeakGeodesicOptions opts;
        if (!s_factors.empty()) opts.s_factors = s_factors;
        opts.include_sub_spacing_radii = sub_radii;
        return weak_geodesic_certificate(s, opts);
      },
      py::arg("space"), py::arg("s_factors") = std::vector<double>{},
      py::arg("include_sub_spacing_radii") = false);

  py::class_<ChainResult>(m, "ChainResult")
      .def_readonly("ok", &ChainResult::ok)
      .def_readonly("points", &ChainResult::points)
      .def_readonly("stuck_at", &ChainResult::stuck_at);
  m.def("monotone_geodesic_chain", &monotone_geodesic_chain, py::arg("space"),
        py::arg("x"), py::arg("y"), py::arg("s"), py::arg("c4"),
        py::arg("exhaustive_fallback") = true);

  py::class_<ChainBallWitness>(m, "ChainBallWitness")
      .def_readonly("base", &ChainBallWitness::base)
      .def_readonly("central", &ChainBallWitness::central)
      .def_readonly("target", &ChainBallWitness::target)
      .def_readonly("alpha", &ChainBallWitness::alpha)
      .def_readonly("beta", &ChainBallWitness::beta)
      .def_readonly("chain", &ChainBallWitness::chain)
      .def_readonly("t_trace", &ChainBallWitness::t_trace);
  m.def(
      "chain_ball_construct",
      [](const DiscreteSpace& s, const Ball& base, int x, double c4) {
        return chain_ball_construct(s, base, x, c4);
      },
      py::arg("space"), py::arg("base"), py::arg("x"), py::arg("c4") = 2.0);
  m.def("verify_chain_ball_witness",
        [](const DiscreteSpace& s, const ChainBallWitness& w) {
          const auto check = verify_chain_ball_witness(s, w);
          return py::make_tuple(check.ok, check.violated);
        });
  m.def("p_tau_convert", &p_tau_convert);

  m.def(
      "run_command",
      [](const std::string& command, const std::string& config_json,
         const std::string& out_dir) {
        const auto cfg = Config::parse(nlohmann::json::parse(config_json));
        return run_command(command, cfg, out_dir);
      },
      py::arg("command"), py::arg("config_json"), py::arg("out_dir"),
      "Run one experiment command against a JSON config string; returns the "
      "artifact paths.");
}
