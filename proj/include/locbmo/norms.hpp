#pragma once

#include <functional>
#include <string>
#include <vector>

#include "locbmo/space.hpp"

namespace locbmo {

struct Ball {
  int center = -1;
  double radius = 0.0;
};

/// Enumerated test balls; class D holds the balls with radius >= rho(center),
/// where the localized norms replace oscillation by plain size.
struct BallFamily {
  std::vector<Ball> balls;
  std::vector<char> class_d;

  static BallFamily enumerate(const DiscreteSpace& space,
                              const std::vector<double>& rho,
                              int center_budget = 0, int radius_count = 40);
  static BallFamily enumerate_with_radii(const DiscreteSpace& space,
                                         const std::vector<double>& rho,
                                         const std::vector<int>& centers,
                                         const std::vector<double>& radii);
  size_t size() const { return balls.size(); }
};

double ball_average(const DiscreteSpace& space, const std::vector<double>& f,
                    const Ball& b);

/// (mass-weighted mean of |f - f_B|^q)^{1/q}, q >= 1.
double mean_oscillation(const DiscreteSpace& space, const std::vector<double>& f,
                        const Ball& b, double q = 1.0);

/// Discrete essential infimum: every point carries positive mass, so this is
/// the pointwise minimum over the ball.
double essinf_ball(const DiscreteSpace& space, const std::vector<double>& f,
                   const Ball& b);

struct NormReport {
  double oscillation_part = 0.0;  // sup over balls outside class D
  double local_part = 0.0;        // sup over class D of the plain q-mean
  double total = 0.0;
  Ball argmax_oscillation{-1, 0.0};
  Ball argmax_local{-1, 0.0};
};

NormReport bmo_rho_norm(const DiscreteSpace& space, const std::vector<double>& f,
                        const BallFamily& family, double q = 1.0);

/// Same as bmo_rho_norm with f - min_B f in place of f - f_B on the
/// oscillation balls.
NormReport blo_rho_norm(const DiscreteSpace& space, const std::vector<double>& f,
                        const BallFamily& family, double q = 1.0);

/// sup over the family of MO(f, B)/phi(r_B); the tilde variant adds
/// |f_{B(0,1)}|. phi must be positive on the sampled radii.
double bmo_phi_norm(const DiscreteSpace& space, const std::vector<double>& f,
                    const BallFamily& family,
                    const std::function<double(double)>& phi, bool tilde = false);

}  // namespace locbmo
