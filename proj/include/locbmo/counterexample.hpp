#pragma once

#include <vector>

#include "locbmo/norms.hpp"
#include "locbmo/space.hpp"

namespace locbmo {

/// Oscillation scale functions built from psi(r) = 1/log(2/min(1,r)):
/// PhiStar integrates psi(t)/t up from 1, PhiLowerStar (= PsiLowerStar)
/// integrates it down to r from 2.
enum class ScaleFnKind { Psi, PhiStar, PhiLowerStar, PsiLowerStar };

/// Closed-form evaluation; r > 0.
double eval_scale_fn(ScaleFnKind kind, double r);

/// PsiLowerStar as a function of u = log(2/r); valid for all u (u < log 2
/// corresponds to r > 1 where the function is the constant 1). This is the
/// entry point that stays finite long after r itself underflows.
double psi_lower_star_from_log(double u);

/// g(x) = sin(PsiLowerStar(|x|)); |x| is floored at a tiny positive value so
/// the evaluation at exactly 0 stays defined (the grid samplers use the
/// half-spacing convention instead).
double multiplier_g(double x);

/// log(2/|x|) on 0 < |x| <= 2, zero outside; x == 0 must be handled by the
/// caller's clamp (grid samplers use half-spacing).
double f_log(double x);

/// (fg)(x) expressed through u = log(2/x), x in (0, 1].
double fg_from_log(double u);

struct CriticalRadius {
  int k = 0;
  double log_two_over_r = 0.0;  // log(2/r_k), exact in log-space
  double r = 0.0;               // 0 when underflowed
  bool underflowed = false;
};

/// Solve PsiLowerStar(r_k) = pi k / 4 in closed form, k >= 2.
CriticalRadius solve_rk(int k);

/// Largest m for which log(2/r_{8m+4}) is representable.
int max_feasible_m();

struct ShapeReport {
  int m = 0;
  int samples = 0;
  bool nonneg_ok = false;
  bool increasing_ok = false;
  bool concave_ok = false;
  double min_fg = 0.0;
  double min_slope_factor = 0.0;      // min of -(sin+cos); > 0 iff (fg)' > 0
  double max_concavity_factor = 0.0;  // max of (sin+cos)+(cos-sin)/u; < 0 iff (fg)'' < 0
  double endpoint_value = 0.0;        // fg(r_{8m+3})
  double endpoint_expected = 0.0;     // (sqrt2/2) log(2/r_{8m+3})
  double endpoint_rel_err = 0.0;
};

/// Sign pattern of fg on (r_{8m+4}, r_{8m+3}) per the derivative formulas,
/// evaluated at interior samples in u = log(2/x).
ShapeReport verify_shape(int m, int samples = 1000);

struct DivergenceRow {
  int m = 0;
  double log2_r3 = 0.0;           // log2 of r_{8m+3}
  double log_two_over_r3 = 0.0;   // log(2/r_{8m+3})
  double interval_average = 0.0;  // average of fg over [r_{8m+4}, r_{8m+3}]
  double lower_bound = 0.0;       // (sqrt2/4) log(2/r_{8m+3})
  double ratio = 0.0;
  double min_fg_left = 0.0;  // fg at the left endpoint (the interval essinf)
};

/// Interval averages in the substituted variable u = log(2/t) (adaptive
/// quadrature), paired with the proof's lower bound.
std::vector<DivergenceRow> blo_divergence(const std::vector<int>& m_list);

struct ScanOptions {
  double radius_lo = 0.0;  // fixed across resolutions; defaults to the base h
  int radius_count = 40;
  int resolutions = 3;  // h, h/2, h/4, ...
  double q = 1.0;
  double rho = 1.0;
};

struct ScanLevel {
  double h = 0.0;
  double bmo_total = 0.0;
  double blo_total = 0.0;
  double blo_oscillation = 0.0;  // the part that carries the divergence
  Ball blo_argmax{-1, 0.0};
  double blo_argmax_center_x = 0.0;
};

struct ScanReport {
  std::vector<ScanLevel> levels;
  double max_bmo_rel_change = 0.0;
  double blo_growth = 0.0;  // oscillation part at finest over coarsest
};

/// Grid scan of the bmo functional of |fg| across dyadic refinements with a
/// resolution-independent ball family; the blo functional on the same family
/// is reported alongside to exhibit the divergence direction.
ScanReport bmo_boundedness_scan(double window, double h, const ScanOptions& opts = {});

/// |fg| sampled on a 1D grid, half-spacing clamp at the origin.
std::vector<double> sample_abs_fg(const DiscreteSpace& space);
std::vector<double> sample_f_log(const DiscreteSpace& space);

}  // namespace locbmo
