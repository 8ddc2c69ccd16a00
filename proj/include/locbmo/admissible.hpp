#pragma once

#include <vector>

#include "locbmo/norms.hpp"
#include "locbmo/space.hpp"

namespace locbmo {

/// Nonnegative potential sampled on the space.
struct Potential {
  std::vector<double> values;

  static Potential constant(const DiscreteSpace& space, double v);
  /// V(x) = |x|^exponent (exponent < 0 evaluated at half-spacing near 0).
  static Potential power(const DiscreteSpace& space, double exponent);
  static Potential indicator(const DiscreteSpace& space, double lo, double hi);
};

/// Admissible auxiliary radius with its fitted two-point certificate:
///   1/rho(x) <= c0 (1/rho(y)) (1 + d(x,y)/rho(y))^k0  for all pairs.
struct AdmissibleFn {
  std::vector<double> values;
  double c0 = 1.0;
  double k0 = 0.0;
  std::vector<std::pair<double, double>> tradeoff;  // (k0 candidate, c0(k0))
  bool capped = false;   // condition still held at the top of the radius grid
  bool floored = false;  // condition failed at every grid radius somewhere

  static AdmissibleFn constant(const DiscreteSpace& space, double value);
};

struct AdmissibilityCertificate {
  double c0 = 1.0;
  double k0 = 0.0;
  std::vector<std::pair<double, double>> tradeoff;
};

/// Fit (c0, k0) over a k0 grid by the exhaustive pair sup; returns the pair
/// minimizing c0 (ties to the smallest k0) plus the whole trade-off curve.
AdmissibilityCertificate admissibility_certificate(
    const DiscreteSpace& space, const std::vector<double>& rho,
    const std::vector<double>& k0_grid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0});

/// rho(x) = sup of grid radii r with r^2 avg_{B(x,r)} V <= 1 (full sweep, the
/// map r -> r^2 avg V need not be monotone). Capped at 2*diam when the
/// condition holds at the largest radius.
AdmissibleFn schrodinger_rho(const DiscreteSpace& space, const Potential& v,
                             int radius_count = 64);

struct ReverseHolderResult {
  double constant = 0.0;
  int skipped = 0;  // balls with vanishing average
  Ball argmax{-1, 0.0};
};

/// sup over the family of (avg_B V^q)^{1/q} / avg_B V, q in (1, inf).
ReverseHolderResult reverse_holder_constant(const DiscreteSpace& space,
                                            const Potential& v, double q,
                                            const BallFamily& family);

/// C~_a from (c0, k0): whenever d(x,y) <= a rho(x), the radii are comparable
/// within C~_a on both sides.
double comparability_constant(double c0, double k0, double a);

struct ComparabilityCheck {
  bool ok = true;
  int worst_x = -1, worst_y = -1;
  double worst_ratio = 1.0;
};

ComparabilityCheck check_comparability(const DiscreteSpace& space,
                                       const std::vector<double>& rho, double a,
                                       double c_tilde);

}  // namespace locbmo
