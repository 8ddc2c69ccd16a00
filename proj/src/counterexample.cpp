#include "locbmo/counterexample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "locbmo/norms.hpp"
#include "locbmo/quadrature.hpp"

namespace locbmo {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;
}  // namespace

double eval_scale_fn(ScaleFnKind kind, double r) {
  if (!(r > 0)) throw std::invalid_argument("scale function: r must be > 0");
  switch (kind) {
    case ScaleFnKind::Psi:
      return 1.0 / std::log(2.0 / std::min(1.0, r));
    case ScaleFnKind::PhiStar:
      // integral of psi(t)/t from 1 to r (constant below 2): log2(r)
      return r < 2.0 ? 1.0 : std::log2(r);
    case ScaleFnKind::PhiLowerStar:
    case ScaleFnKind::PsiLowerStar:
      return psi_lower_star_from_log(std::log(2.0 / r));
  }
  throw std::invalid_argument("scale function: unknown kind");
}

double psi_lower_star_from_log(double u) {
  if (u < kLn2) return 1.0;  // r > 1
  return 1.0 + std::log(u / kLn2);
}

double multiplier_g(double x) {
  double r = std::abs(x);
  if (r < 1e-300) r = 1e-300;
  return std::sin(psi_lower_star_from_log(std::log(2.0 / r)));
}

double f_log(double x) {
  const double r = std::abs(x);
  if (r > 2.0) return 0.0;
  if (r == 0.0) throw std::invalid_argument("f_log: undefined at 0, clamp first");
  return std::log(2.0 / r);
}

double fg_from_log(double u) { return u * std::sin(psi_lower_star_from_log(u)); }

CriticalRadius solve_rk(int k) {
  if (k < 2) throw std::invalid_argument("solve_rk: k must be >= 2");
  CriticalRadius out;
  out.k = k;
  const double expo = std::exp(kPi * k / 4.0 - 1.0);
  if (!std::isfinite(expo))
    throw std::invalid_argument("solve_rk: scale unresolvable, largest feasible k = " +
                                std::to_string(4 * (max_feasible_m() * 2 + 1)));
  out.log_two_over_r = kLn2 * expo;
  out.r = 2.0 * std::exp(-out.log_two_over_r);
  out.underflowed = !(out.r > 0.0);
  return out;
}

int max_feasible_m() {
  // need exp(pi(8m+4)/4 - 1) finite
  const int k_max = static_cast<int>(std::floor((709.0 + 1.0) * 4.0 / kPi));
  return (k_max - 4) / 8;
}

ShapeReport verify_shape(int m, int samples) {
  if (m < 1) throw std::invalid_argument("verify_shape: m must be >= 1");
  if (m > max_feasible_m())
    throw std::invalid_argument("verify_shape: scale unresolvable, largest feasible m = " +
                                std::to_string(max_feasible_m()));
  const double u3 = solve_rk(8 * m + 3).log_two_over_r;
  const double u4 = solve_rk(8 * m + 4).log_two_over_r;

  ShapeReport rep;
  rep.m = m;
  rep.samples = samples;
  rep.nonneg_ok = rep.increasing_ok = rep.concave_ok = true;
  rep.min_fg = std::numeric_limits<double>::infinity();
  rep.min_slope_factor = std::numeric_limits<double>::infinity();
  rep.max_concavity_factor = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    // x in (r_{8m+4}, r_{8m+3}) corresponds to u in (u3, u4); the fraction is
    // formed first so u3-scale magnitudes near the overflow edge survive
    const double u = u3 + (u4 - u3) * ((i + 0.5) / samples);
    const double psi = psi_lower_star_from_log(u);
    const double s = std::sin(psi), c = std::cos(psi);
    const double fg = u * s;
    const double slope = -(s + c);                  // sign of (fg)'
    const double curv = (s + c) + (c - s) / u;      // sign of (fg)''
    rep.nonneg_ok = rep.nonneg_ok && fg >= 0.0;
    rep.increasing_ok = rep.increasing_ok && slope > 0.0;
    rep.concave_ok = rep.concave_ok && curv < 0.0;
    rep.min_fg = std::min(rep.min_fg, fg);
    rep.min_slope_factor = std::min(rep.min_slope_factor, slope);
    rep.max_concavity_factor = std::max(rep.max_concavity_factor, curv);
  }
  rep.endpoint_value = fg_from_log(u3);
  rep.endpoint_expected = std::numbers::sqrt2 / 2.0 * u3;
  rep.endpoint_rel_err =
      std::abs(rep.endpoint_value - rep.endpoint_expected) / rep.endpoint_expected;
  return rep;
}

std::vector<DivergenceRow> blo_divergence(const std::vector<int>& m_list) {
  std::vector<DivergenceRow> rows;
  for (int m : m_list) {
    if (m < 1 || m > max_feasible_m()) continue;  // unresolvable, skip with note upstream
    const double u3 = solve_rk(8 * m + 3).log_two_over_r;
    const double u4 = solve_rk(8 * m + 4).log_two_over_r;
    // integral of fg dx over [r_{8m+4}, r_{8m+3}] with x = 2 e^{-u}; factor
    // out e^{-u3} so nothing underflows:
    //   average = int_0^{du} (u3+v) sin(psi(u3+v)) e^{-v} dv / (1 - e^{-du})
    const double du = u4 - u3;
    const double vmax = std::min(du, 64.0);  // e^{-64} tail is far below roundoff
    const double integral = adaptive_simpson(
        [&](double v) {
          const double u = u3 + v;
          return u * std::sin(psi_lower_star_from_log(u)) * std::exp(-v);
        },
        0.0, vmax, 1e-10 * u3, 48);
    DivergenceRow row;
    row.m = m;
    row.log_two_over_r3 = u3;
    row.log2_r3 = 1.0 - u3 / kLn2;
    row.interval_average = integral / (1.0 - std::exp(-du));
    row.lower_bound = std::numbers::sqrt2 / 4.0 * u3;
    row.ratio = row.interval_average / row.lower_bound;
    row.min_fg_left = fg_from_log(u4);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> sample_abs_fg(const DiscreteSpace& space) {
  std::vector<double> out(space.size());
  const double clamp = space.spacing() / 2.0;
  for (int i = 0; i < space.size(); ++i) {
    const double r = std::max(std::abs(space.coord(i, 0)), clamp);
    if (r > 2.0) {
      out[i] = 0.0;
      continue;
    }
    const double u = std::log(2.0 / r);
    out[i] = std::abs(u * std::sin(psi_lower_star_from_log(u)));
  }
  return out;
}

std::vector<double> sample_f_log(const DiscreteSpace& space) {
  std::vector<double> out(space.size());
  const double clamp = space.spacing() / 2.0;
  for (int i = 0; i < space.size(); ++i) {
    const double r = std::max(std::abs(space.coord(i, 0)), clamp);
    out[i] = r > 2.0 ? 0.0 : std::log(2.0 / r);
  }
  return out;
}

ScanReport bmo_boundedness_scan(double window, double h, const ScanOptions& opts) {
  if (!(window > 0) || !(h > 0) || !(h < window))
    throw std::invalid_argument("bmo scan: need 0 < h < window");
  ScanReport rep;
  const double radius_lo = opts.radius_lo > 0 ? opts.radius_lo : h;
  double level_h = h;
  for (int lev = 0; lev < opts.resolutions; ++lev, level_h /= 2.0) {
    SpaceSpec spec;
    spec.dim = 1;
    spec.extent = window;
    spec.spacing = level_h;
    const auto space = DiscreteSpace::build_grid(spec);
    const auto f = sample_abs_fg(space);
    const std::vector<double> rho(space.size(), opts.rho);
    const auto radii = log_spaced(radius_lo, space.diam(), opts.radius_count);
    std::vector<int> centers(space.size());
    for (int i = 0; i < space.size(); ++i) centers[i] = i;
    const auto family = BallFamily::enumerate_with_radii(space, rho, centers, radii);
    const auto bmo = bmo_rho_norm(space, f, family, opts.q);
    const auto blo = blo_rho_norm(space, f, family, opts.q);
    ScanLevel level;
    level.h = level_h;
    level.bmo_total = bmo.total;
    level.blo_total = blo.total;
    level.blo_oscillation = blo.oscillation_part;
    level.blo_argmax = blo.argmax_oscillation;
    level.blo_argmax_center_x =
        blo.argmax_oscillation.center >= 0 ? space.coord(blo.argmax_oscillation.center, 0) : 0.0;
    rep.levels.push_back(level);
  }
  for (size_t i = 1; i < rep.levels.size(); ++i) {
    const double rel = std::abs(rep.levels[i].bmo_total - rep.levels[i - 1].bmo_total) /
                       rep.levels[i - 1].bmo_total;
    rep.max_bmo_rel_change = std::max(rep.max_bmo_rel_change, rel);
  }
  if (!rep.levels.empty())
    rep.blo_growth =
        rep.levels.back().blo_oscillation / std::max(rep.levels.front().blo_oscillation, 1e-300);
  return rep;
}

}  // namespace locbmo
