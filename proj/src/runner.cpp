#include "locbmo/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "locbmo/counterexample.hpp"
#include "locbmo/csv.hpp"
#include "locbmo/geometry.hpp"
#include "locbmo/kernels.hpp"
#include "locbmo/sqfun.hpp"

namespace locbmo {

namespace {

namespace fs = std::filesystem;

Potential make_potential(const DiscreteSpace& space, const PotentialSpec& spec) {
  if (spec.kind == "constant") return Potential::constant(space, spec.value);
  if (spec.kind == "power") return Potential::power(space, spec.exponent);
  if (spec.kind == "indicator") return Potential::indicator(space, spec.lo, spec.hi);
  if (spec.kind == "table") {
    if (spec.table.size() != static_cast<size_t>(space.size()))
      throw ConfigError("potential.values", "table size must match the space");
    return Potential{spec.table};
  }
  throw ConfigError("potential.kind", "unknown kind");
}

AdmissibleFn make_rho(const DiscreteSpace& space, const Config& cfg) {
  if (cfg.rho.kind == "constant") return AdmissibleFn::constant(space, cfg.rho.value);
  return schrodinger_rho(space, make_potential(space, cfg.potential));
}

ScaleGrid make_scale_grid(const DiscreteSpace& space, const ScaleGridSpec& spec) {
  const double t_min = spec.t_min.value_or(space.spacing());
  const double t_max = spec.t_max.value_or(4.0 * space.diam());
  return ScaleGrid::logarithmic(t_min, t_max, spec.count);
}

/// Deterministic uniform [-bound, bound] samples, independent of the
/// platform's distribution implementations.
std::vector<double> seeded_uniform(std::uint64_t seed, int n, double bound) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out[i] = bound * (2.0 * u01 - 1.0);
  }
  return out;
}

struct ExperimentContext {
  DiscreteSpace space;
  Potential potential;
  AdmissibleFn rho;
  std::optional<KernelFamily> kernels;
};

std::vector<NamedFunction> resolve_suite(const Config& cfg, ExperimentContext& ctx,
                                         std::optional<std::uint64_t> seed_override) {
  std::vector<NamedFunction> out;
  int idx = 0;
  for (const auto& m : cfg.suite) {
    NamedFunction fn;
    fn.id = m.id;
    const int n = ctx.space.size();
    if (m.kind == "constant") {
      fn.values.assign(n, m.value);
    } else if (m.kind == "f_log") {
      fn.values = sample_f_log(ctx.space);
    } else if (m.kind == "abs_fg") {
      fn.values = sample_abs_fg(ctx.space);
    } else if (m.kind == "indicator") {
      fn.values.assign(n, 0.0);
      for (int i = 0; i < n; ++i) {
        const double x = ctx.space.coord(i, 0);
        if (x >= m.lo && x <= m.hi) fn.values[i] = 1.0;
      }
    } else if (m.kind == "eigenvector") {
      if (!ctx.kernels)
        throw ConfigError("suite[" + std::to_string(idx) + "]",
                          "eigenvector member requires a kernel-bearing command");
      if (m.index >= ctx.kernels->n())
        throw ConfigError("suite[" + std::to_string(idx) + "].index", "out of range");
      const auto col = ctx.kernels->basis().col(m.index);
      fn.values.assign(col.data(), col.data() + n);
    } else if (m.kind == "random") {
      std::uint64_t seed = *m.seed;
      if (seed_override) seed = *seed_override + 1000ull * idx;
      fn.values = seeded_uniform(seed, n, m.bound);
    }
    out.push_back(std::move(fn));
    ++idx;
  }
  return out;
}

std::string out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

std::vector<std::string> run_norms(const Config& cfg, const std::string& dir,
                                   std::optional<std::uint64_t> seed) {
  ExperimentContext ctx{DiscreteSpace::build_grid(cfg.space), {}, {}, {}};
  ctx.potential = make_potential(ctx.space, cfg.potential);
  ctx.rho = make_rho(ctx.space, cfg);
  bool needs_kernels = false;
  for (const auto& m : cfg.suite) needs_kernels = needs_kernels || m.kind == "eigenvector";
  if (needs_kernels)
    ctx.kernels = build_qt_family(schrodinger_generator(ctx.space, ctx.potential),
                                  make_scale_grid(ctx.space, cfg.scale_grid), ctx.space);
  const auto suite = resolve_suite(cfg, ctx, seed);
  const auto family = BallFamily::enumerate(ctx.space, ctx.rho.values,
                                            cfg.ball_family.center_budget,
                                            cfg.ball_family.radius_count);
  const auto rho_path = out_path(dir, "rho_certificate.csv");
  {
    CsvWriter csv(rho_path, cfg.hash(), {"k0", "c0", "selected"});
    for (const auto& [k0, c0] : ctx.rho.tradeoff)
      csv.row({CsvWriter::num(k0), CsvWriter::num(c0),
               k0 == ctx.rho.k0 ? "1" : "0"});
  }
  const auto path = out_path(dir, "norms.csv");
  CsvWriter csv(path, cfg.hash(),
                {"function_id", "q", "norm", "oscillation_part", "local_part", "total",
                 "argmax_center_x", "argmax_radius", "class_d_flag"});
  for (const auto& fn : suite) {
    for (const char* kind : {"bmo_rho", "blo_rho"}) {
      const NormReport rep = std::string(kind) == "bmo_rho"
                                 ? bmo_rho_norm(ctx.space, fn.values, family, cfg.q)
                                 : blo_rho_norm(ctx.space, fn.values, family, cfg.q);
      const bool from_local = rep.local_part >= rep.oscillation_part;
      const Ball arg = from_local ? rep.argmax_local : rep.argmax_oscillation;
      csv.row({fn.id, CsvWriter::num(cfg.q), kind, CsvWriter::num(rep.oscillation_part),
               CsvWriter::num(rep.local_part), CsvWriter::num(rep.total),
               CsvWriter::num(arg.center >= 0 ? ctx.space.coord(arg.center, 0) : 0.0),
               CsvWriter::num(arg.radius), from_local ? "1" : "0"});
    }
  }
  return {path, rho_path};
}

std::vector<std::string> run_squarefn(const Config& cfg, const std::string& dir,
                                      std::optional<std::uint64_t> seed) {
  ExperimentContext ctx{DiscreteSpace::build_grid(cfg.space), {}, {}, {}};
  ctx.potential = make_potential(ctx.space, cfg.potential);
  ctx.rho = make_rho(ctx.space, cfg);
  ctx.kernels = build_qt_family(schrodinger_generator(ctx.space, ctx.potential),
                                make_scale_grid(ctx.space, cfg.scale_grid), ctx.space);
  const auto suite = resolve_suite(cfg, ctx, seed);
  const double lambda = cfg.lambda_list.empty() ? 2.0 : cfg.lambda_list.front();

  std::vector<std::string> files;
  const auto sum_path = out_path(dir, "sqfun_summary.csv");
  CsvWriter sum(sum_path, cfg.hash(),
                {"function_id", "lambda", "l2_f", "l2_g", "l2_S", "l2_glstar",
                 "max_S_over_glstar"});
  for (const auto& fn : suite) {
    const auto g = g_function(*ctx.kernels, fn.values);
    const auto S = lusin_area(*ctx.kernels, fn.values);
    const auto gl = g_lambda_star(*ctx.kernels, fn.values, lambda);
    const auto path = out_path(dir, "sqfun_" + fn.id + ".csv");
    CsvWriter csv(path, cfg.hash(), {"x", "f", "g", "S", "glstar"});
    double worst = 0.0;
    for (int i = 0; i < ctx.space.size(); ++i) {
      csv.row({CsvWriter::num(ctx.space.coord(i, 0)), CsvWriter::num(fn.values[i]),
               CsvWriter::num(g.values[i]), CsvWriter::num(S.values[i]),
               CsvWriter::num(gl.values[i])});
      if (gl.values[i] > 0) worst = std::max(worst, S.values[i] / gl.values[i]);
    }
    sum.row({fn.id, CsvWriter::num(lambda), CsvWriter::num(l2_norm(ctx.space, fn.values)),
             CsvWriter::num(l2_norm(ctx.space, g.values)),
             CsvWriter::num(l2_norm(ctx.space, S.values)),
             CsvWriter::num(l2_norm(ctx.space, gl.values)), CsvWriter::num(worst)});
    files.push_back(path);
  }
  files.push_back(sum_path);
  return files;
}

std::vector<std::string> run_bounds(const Config& cfg, const std::string& dir,
                                    std::optional<std::uint64_t> seed) {
  ExperimentContext ctx{DiscreteSpace::build_grid(cfg.space), {}, {}, {}};
  ctx.potential = make_potential(ctx.space, cfg.potential);
  ctx.rho = make_rho(ctx.space, cfg);
  ctx.kernels = build_qt_family(schrodinger_generator(ctx.space, ctx.potential),
                                make_scale_grid(ctx.space, cfg.scale_grid), ctx.space);
  const auto suite = resolve_suite(cfg, ctx, seed);
  const auto family = BallFamily::enumerate(ctx.space, ctx.rho.values,
                                            cfg.ball_family.center_budget,
                                            cfg.ball_family.radius_count);
  const auto doubling = doubling_certificate(ctx.space);
  std::vector<double> lambdas = cfg.lambda_list;
  if (lambdas.empty())
    lambdas = {doubling.n + 1.0, 2.0 * doubling.n, 3.0 * doubling.n + 1.0, 4.0 * doubling.n};
  const auto exp =
      boundedness_experiment(ctx.space, *ctx.kernels, family, suite, lambdas, doubling.n, cfg.q);

  const auto path = out_path(dir, "bounds.csv");
  CsvWriter csv(path, cfg.hash(),
                {"function_id", "lambda", "norm_kind", "numerator", "denominator", "ratio",
                 "outside_hypothesis"});
  for (const auto& row : exp.rows)
    csv.row({row.function_id, CsvWriter::num(row.lambda), row.norm_kind,
             CsvWriter::num(row.numerator), CsvWriter::num(row.denominator),
             CsvWriter::num(row.ratio), row.outside_hypothesis ? "1" : "0"});
  const auto sum_path = out_path(dir, "bounds_summary.csv");
  CsvWriter sum(sum_path, cfg.hash(), {"norm_kind", "lambda", "max_ratio", "upper_dimension_n"});
  for (const char* kind : {"S_sq_blo_over_bmo_sq", "S_blo_over_bmo", "glstar_sq_blo_over_bmo_sq",
                           "glstar_blo_over_bmo"}) {
    std::vector<double> ls = std::string(kind).starts_with("S") ? std::vector<double>{0.0}
                                                                : lambdas;
    for (double l : ls) {
      double mx = 0.0;
      for (const auto& row : exp.rows)
        if (row.norm_kind == kind && row.lambda == l) mx = std::max(mx, row.ratio);
      sum.row({kind, CsvWriter::num(l), CsvWriter::num(mx), CsvWriter::num(doubling.n)});
    }
  }
  if (!exp.skipped.empty()) {
    std::ofstream note(out_path(dir, "skipped.txt"));
    for (const auto& id : exp.skipped) note << id << ": zero BMO norm, skipped\n";
  }
  return {path, sum_path};
}

std::vector<std::string> run_counterexample(const Config& cfg, const std::string& dir) {
  const auto rk_path = out_path(dir, "rk.csv");
  {
    CsvWriter csv(rk_path, cfg.hash(), {"k", "log2_rk", "rk", "psi_minus_pik4"});
    for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
      const auto rk = solve_rk(k);
      const double resid =
          psi_lower_star_from_log(rk.log_two_over_r) - std::numbers::pi * k / 4.0;
      csv.row({CsvWriter::num(k), CsvWriter::num(1.0 - rk.log_two_over_r / std::numbers::ln2),
               CsvWriter::num(rk.r), CsvWriter::num(resid)});
    }
  }
  const auto div_path = out_path(dir, "divergence.csv");
  {
    CsvWriter csv(div_path, cfg.hash(),
                  {"m", "log2_r_8m3", "log_two_over_r3", "interval_average",
                   "lower_bound", "ratio", "fg_left_endpoint"});
    for (const auto& row : blo_divergence(cfg.m_list))
      csv.row({CsvWriter::num(row.m), CsvWriter::num(row.log2_r3),
               CsvWriter::num(row.log_two_over_r3), CsvWriter::num(row.interval_average),
               CsvWriter::num(row.lower_bound), CsvWriter::num(row.ratio),
               CsvWriter::num(row.min_fg_left)});
    std::vector<int> skipped;
    for (int m : cfg.m_list)
      if (m < 1 || m > max_feasible_m()) skipped.push_back(m);
    if (!skipped.empty()) {
      std::ofstream note(out_path(dir, "skipped.txt"));
      for (int m : skipped)
        note << "m=" << m << ": scale unresolvable (feasible range 1.."
             << max_feasible_m() << ")\n";
    }
  }
  const auto shape_path = out_path(dir, "shape.csv");
  {
    CsvWriter csv(shape_path, cfg.hash(),
                  {"m", "samples", "min_fg", "min_slope_factor", "max_concavity_factor",
                   "endpoint_rel_err"});
    for (int m : cfg.m_list) {
      if (m < 1 || m > max_feasible_m()) continue;
      const auto rep = verify_shape(m);
      if (!rep.nonneg_ok || !rep.increasing_ok || !rep.concave_ok)
        throw NumericalError("shape verification failed at m=" + std::to_string(m));
      csv.row({CsvWriter::num(rep.m), CsvWriter::num(rep.samples), CsvWriter::num(rep.min_fg),
               CsvWriter::num(rep.min_slope_factor), CsvWriter::num(rep.max_concavity_factor),
               CsvWriter::num(rep.endpoint_rel_err)});
    }
  }
  const auto scan_path = out_path(dir, "bmo_scan.csv");
  {
    ScanOptions opts;
    opts.radius_lo = cfg.scan.radius_lo;
    opts.radius_count = cfg.scan.radius_count;
    opts.resolutions = cfg.scan.resolutions;
    opts.q = cfg.q;
    const auto rep = bmo_boundedness_scan(cfg.scan.window, cfg.scan.h, opts);
    CsvWriter csv(scan_path, cfg.hash(),
                  {"h", "bmo_total", "blo_total", "blo_argmax_x", "blo_argmax_radius"});
    for (const auto& lev : rep.levels)
      csv.row({CsvWriter::num(lev.h), CsvWriter::num(lev.bmo_total),
               CsvWriter::num(lev.blo_total), CsvWriter::num(lev.blo_argmax_center_x),
               CsvWriter::num(lev.blo_argmax.radius)});
  }
  return {rk_path, div_path, shape_path, scan_path};
}

std::vector<std::string> run_geometry(const Config& cfg, const std::string& dir) {
  const auto space = DiscreteSpace::build_grid(cfg.space);
  std::vector<std::string> files;
  const auto cert_path = out_path(dir, "geometry.csv");
  CsvWriter csv(cert_path, cfg.hash(),
                {"property", "constant", "secondary", "status", "witness"});

  const auto doubling = doubling_certificate(space);
  csv.row({"doubling_c1", CsvWriter::num(doubling.c1), "", "holds", ""});
  csv.row({"doubling_eq21", CsvWriter::num(doubling.c2), CsvWriter::num(doubling.n), "holds", ""});

  AnnularDecayOptions aopts;
  if (cfg.space.weight.kind == WeightSpec::Kind::Counting) aopts.s_floor_factor = 1.0;
  const auto ann = annular_decay_certificate(space, aopts);
  csv.row({"annular_decay_delta", CsvWriter::num(ann.delta), CsvWriter::num(ann.k_const),
           ann.trivial ? "trivial" : "holds",
           "x=" + CsvWriter::num(space.coord(std::max(ann.worst.x, 0), 0)) +
               ";r=" + CsvWriter::num(ann.worst.r) + ";s=" + CsvWriter::num(ann.worst.s)});

  AnnularDecayOptions topts = aopts;
  topts.tau = cfg.geometry.tau;
  const auto ann_tau = annular_decay_certificate(space, topts);
  const double converted =
      p_tau_convert(cfg.geometry.tau, ann_tau.k_const, ann_tau.delta, doubling.c1);
  csv.row({"annular_decay_tau", CsvWriter::num(ann_tau.delta), CsvWriter::num(ann_tau.k_const),
           "holds", "tau=" + CsvWriter::num(cfg.geometry.tau)});
  csv.row({"p_tau_converted", CsvWriter::num(converted), CsvWriter::num(ann.k_const),
           converted >= ann.k_const ? "dominates" : "violated", ""});

  WeakGeodesicOptions wopts;
  if (cfg.geometry.zed_model_probe && cfg.space.weight.kind == WeightSpec::Kind::Counting) {
    wopts.s_factors = {0.05, 0.25, 1.0, 4.0};
    wopts.include_sub_spacing_radii = true;
  }
  const auto weak = weak_geodesic_certificate(space, wopts);
  csv.row({"weak_geodesic", CsvWriter::num(weak.constant), "",
           weak.trivial ? "trivial" : (weak.holds ? "holds" : "fails"),
           "x=" + CsvWriter::num(space.coord(std::max(weak.witness.x, 0), 0)) +
               ";r=" + CsvWriter::num(weak.witness.r) + ";s=" + CsvWriter::num(weak.witness.s) +
               ";d=" + CsvWriter::num(weak.witness.dist_to_ball)});

  // chain-ball construction over sampled base balls; every witness passes the
  // independent verifier before being serialized
  nlohmann::json witnesses = nlohmann::json::array();
  int constructed = 0, eligible = 0, sampled = 0;
  const double c4 = cfg.geometry.c4;
  const auto centers = [&] {
    std::vector<int> out;
    const int b = std::min(cfg.geometry.chain_ball_budget, space.size());
    for (int k = 0; k < b; ++k)
      out.push_back(static_cast<int>(std::llround(double(k) * (space.size() - 1) /
                                                  std::max(1, b - 1))));
    return out;
  }();
  for (int z : centers) {
    const double r = 0.45 * space.diam();
    for (int x : space.ball_members(z, r, false)) {
      const double margin = r - space.distance(x, z);
      const bool in_central = space.distance(x, z) < 0.75 * r;
      if (!in_central && margin < 2.0 * c4 * space.spacing()) continue;  // monotone precondition
      const bool keep = eligible % 17 == 0;  // thin the sample deterministically
      ++eligible;
      if (!keep) continue;
      ++sampled;
      const auto w = chain_ball_construct(space, Ball{z, r}, x, c4);
      ++constructed;
      if (witnesses.size() < 32) {
        nlohmann::json jw;
        jw["base"] = {{"center_x", space.coord(z, 0)}, {"radius", r}};
        jw["alpha"] = w.alpha;
        jw["beta"] = w.beta;
        jw["target_x"] = space.coord(x, 0);
        nlohmann::json balls = nlohmann::json::array();
        for (const auto& b : w.chain)
          balls.push_back({{"center_x", space.coord(b.center, 0)}, {"radius", b.radius}});
        jw["chain"] = balls;
        jw["t_trace"] = w.t_trace;
        witnesses.push_back(jw);
      }
    }
  }
  csv.row({"chain_ball", CsvWriter::num(4.0 * c4 / 3.0), CsvWriter::num(4.0 / 3.0),
           constructed == sampled ? "holds" : "fails",
           CsvWriter::num(constructed) + " of " + CsvWriter::num(sampled) +
               " sampled constructions verified"});
  const auto wit_path = out_path(dir, "chain_witnesses.json");
  std::ofstream(wit_path) << witnesses.dump(2) << "\n";
  files.push_back(cert_path);
  files.push_back(wit_path);
  return files;
}

std::vector<std::string> run_certify_kernels(const Config& cfg, const std::string& dir) {
  ExperimentContext ctx{DiscreteSpace::build_grid(cfg.space), {}, {}, {}};
  ctx.potential = make_potential(ctx.space, cfg.potential);
  ctx.rho = make_rho(ctx.space, cfg);
  ctx.kernels = build_qt_family(schrodinger_generator(ctx.space, ctx.potential),
                                make_scale_grid(ctx.space, cfg.scale_grid), ctx.space);
  const auto cert = decay_certificate(*ctx.kernels, ctx.rho);
  const double slack = verify_decay_certificate(*ctx.kernels, ctx.rho, cert);
  if (slack > 1.0 + 1e-9)
    throw NumericalError("kernel certificate failed re-verification, slack=" +
                         std::to_string(slack));

  const auto rho_path = out_path(dir, "rho_certificate.csv");
  {
    CsvWriter csv(rho_path, cfg.hash(), {"k0", "c0", "selected"});
    for (const auto& [k0, c0] : ctx.rho.tradeoff)
      csv.row({CsvWriter::num(k0), CsvWriter::num(c0), k0 == ctx.rho.k0 ? "1" : "0"});
  }

  const auto path = out_path(dir, "kernel_certificates.csv");
  CsvWriter csv(path, cfg.hash(),
                {"condition", "gamma", "delta1", "delta2", "constant", "arg_t", "arg_x",
                 "arg_y", "verified_slack"});
  for (const auto& e : cert.qi_surface)
    csv.row({"Qi", CsvWriter::num(e.gamma), CsvWriter::num(e.delta1), "",
             CsvWriter::num(e.c),
             CsvWriter::num(e.arg_t >= 0 ? ctx.kernels->scales().t_values[e.arg_t] : 0.0),
             CsvWriter::num(e.arg_x >= 0 ? ctx.space.coord(e.arg_x, 0) : 0.0),
             CsvWriter::num(e.arg_y >= 0 ? ctx.space.coord(e.arg_y, 0) : 0.0),
             CsvWriter::num(slack)});
  for (const auto& e : cert.qii_surface)
    csv.row({"Qii", "", "", CsvWriter::num(e.delta2), CsvWriter::num(e.c),
             CsvWriter::num(e.arg_t >= 0 ? ctx.kernels->scales().t_values[e.arg_t] : 0.0),
             CsvWriter::num(e.arg_x >= 0 ? ctx.space.coord(e.arg_x, 0) : 0.0), "",
             CsvWriter::num(slack)});

  // per-(t, x) ratio scan at the headline exponents: the argmax-y entry
  const auto scan_path = out_path(dir, "qi_scan.csv");
  CsvWriter scan(scan_path, cfg.hash(),
                 {"t", "x", "argmax_y", "lhs", "rhs_over_c", "ratio", "gamma", "delta1"});
  for (int ti = 0; ti < ctx.kernels->scales().count(); ++ti) {
    const double t = ctx.kernels->scales().t_values[ti];
    const auto rows = ctx.kernels->kernel_rows(ti, cert.sampled_centers);
    for (size_t r = 0; r < cert.sampled_centers.size(); ++r) {
      const int x = cert.sampled_centers[r];
      const double vt = ctx.space.ball_measure(x, t);
      const double rx = ctx.rho.values[x];
      double best = 0.0;
      int best_y = -1;
      double best_lhs = 0.0, best_env = 0.0;
      for (int y = 0; y < ctx.space.size(); ++y) {
        const double lhs = std::abs(rows(r, y));
        if (lhs == 0.0) continue;
        const double vxy = (x == y) ? 0.0 : ctx.space.vxy(x, y).value;
        const double d = ctx.space.distance(x, y);
        const double env = 1.0 / (vt + vxy) * std::pow(t / (t + d), cert.gamma) *
                           std::pow(rx / (t + rx), cert.delta1);
        if (lhs / env > best) {
          best = lhs / env;
          best_y = y;
          best_lhs = lhs;
          best_env = env;
        }
      }
      if (best_y >= 0)
        scan.row({CsvWriter::num(t), CsvWriter::num(ctx.space.coord(x, 0)),
                  CsvWriter::num(ctx.space.coord(best_y, 0)), CsvWriter::num(best_lhs),
                  CsvWriter::num(best_env), CsvWriter::num(best), CsvWriter::num(cert.gamma),
                  CsvWriter::num(cert.delta1)});
    }
  }
  const auto qii_path = out_path(dir, "qii_scan.csv");
  CsvWriter qii(qii_path, cfg.hash(), {"t", "x", "mass_integral", "ratio", "delta2"});
  for (int ti = 0; ti < ctx.kernels->scales().count(); ++ti) {
    const double t = ctx.kernels->scales().t_values[ti];
    const auto mass = ctx.kernels->mass_integral(ti);
    double best = 0.0;
    int best_x = 0;
    for (int x = 0; x < ctx.space.size(); ++x) {
      const double ratio = std::abs(mass[x]) *
                           std::pow((t + ctx.rho.values[x]) / t, cert.delta2);
      if (ratio > best) {
        best = ratio;
        best_x = x;
      }
    }
    qii.row({CsvWriter::num(t), CsvWriter::num(ctx.space.coord(best_x, 0)),
             CsvWriter::num(mass[best_x]), CsvWriter::num(best), CsvWriter::num(cert.delta2)});
  }
  return {path, scan_path, qii_path, rho_path};
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {"norms",          "squarefn", "bounds",
                                                "counterexample", "geometry", "certify-kernels"};
  return cmds;
}

std::vector<std::string> run_command(const std::string& command, const Config& cfg,
                                     const std::string& out_dir,
                                     std::optional<std::uint64_t> seed_override) {
  const auto seed = seed_override ? seed_override : cfg.seed;
  if (command == "norms") return run_norms(cfg, out_dir, seed);
  if (command == "squarefn") return run_squarefn(cfg, out_dir, seed);
  if (command == "bounds") return run_bounds(cfg, out_dir, seed);
  if (command == "counterexample") return run_counterexample(cfg, out_dir);
  if (command == "geometry") return run_geometry(cfg, out_dir);
  if (command == "certify-kernels") return run_certify_kernels(cfg, out_dir);
  throw ConfigError("(command)", "unknown command " + command);
}

}  // namespace locbmo
