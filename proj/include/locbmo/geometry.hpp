#pragma once

#include <functional>
#include <string>
#include <vector>

#include "locbmo/norms.hpp"
#include "locbmo/space.hpp"

namespace locbmo {

struct AnnularDecaySample {
  int x = -1;
  double r = 0.0, s = 0.0;
  double ratio = 0.0;  // annulus mass over (s/r)^delta * ball mass, at the chosen delta
};

struct AnnularDecayCertificate {
  double delta = 1.0;
  double k_const = 1.0;
  AnnularDecaySample worst;
  std::vector<std::pair<double, double>> curve;  // (delta candidate, K(delta))
  bool trivial = false;                          // every sampled annulus was empty
};

struct AnnularDecayOptions {
  int center_budget = 64;
  int radius_count = 16;
  int s_count = 6;
  // the annulus mass on a grid carries a +-2h counting error, so meaningful
  // ratios need s well above the lattice scale
  double s_floor_factor = 8.0;
  double tau = 1.0;  // sample r > tau * s (Property (P)_tau)
  std::vector<double> delta_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
};

/// Fit (delta, K) for the annulus bound over sampled (x, r, s); K(delta) is
/// the sup ratio per delta and the headline pair is lexicographic
/// (largest delta, then its K).
AnnularDecayCertificate annular_decay_certificate(const DiscreteSpace& space,
                                                  const AnnularDecayOptions& opts = {});

struct WeakGeodesicWitness {
  int x = -1;
  double r = 0.0, s = 0.0;
  int y = -1;
  double dist_to_ball = 0.0;
  double ratio = 0.0;
};

struct WeakGeodesicOptions {
  int center_budget = 16;
  int radius_count = 8;
  // multiples of spacing for the enlargement s; values below 1 probe
  // sub-lattice scales where discrete spaces genuinely fail
  std::vector<double> s_factors = {1.0, 2.0, 4.0, 8.0};
  double failure_factor = 10.0;
  bool include_sub_spacing_radii = false;  // adds r in {0.5, 0.96} * spacing
};

struct GeodesicCertificate {
  bool holds = true;
  double constant = 0.0;  // C3: sup over samples of d(y, closed ball)/s
  WeakGeodesicWitness witness;
  std::vector<std::pair<double, double>> ratio_by_s;  // (s, sup ratio at s)
  bool trivial = false;                               // all outer shells empty
};

GeodesicCertificate weak_geodesic_certificate(const DiscreteSpace& space,
                                              const WeakGeodesicOptions& opts = {});

struct ChainResult {
  bool ok = false;
  std::vector<int> points;  // start ... target
  int stuck_at = -1;
  bool used_fallback = false;
};

/// Chain x_0 = y, ..., x_m = x with steps <= c4*s and distance to x dropping
/// by at least s per step. Greedy nearest-progress with an exhaustive
/// fallback to distinguish "greedy failed" from "no chain exists".
ChainResult monotone_geodesic_chain(const DiscreteSpace& space, int x, int y, double s,
                                    double c4, bool exhaustive_fallback = true);

/// Supplies the chain whose first hop the chain-ball construction consumes
/// for a (start, target, step scale) query. The default performs a direct
/// one-hop search (step <= c4*s, progress >= s); monotone_geodesic_chain is
/// a valid resolver wherever the full chain exists at the queried scale.
using StepResolver =
    std::function<ChainResult(const DiscreteSpace&, int target, int start, double s, double c4)>;

struct ChainBallWitness {
  Ball base;
  Ball central;
  int target = -1;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<Ball> chain;     // chain[0] = central, target in chain.back()
  std::vector<double> t_trace; // t_0, t_1, ... of the construction
};

/// Constructive chain-ball witness: B(z,r) is a (4c4/3, 4/3)-chain ball with
/// central sub-ball B(z, 3r/4), built from monotone chains with step
/// parameter t_j = (r - d(x_j, z))/2.
ChainBallWitness chain_ball_construct(const DiscreteSpace& space, const Ball& base, int x,
                                      double c4, const StepResolver& resolver = {});

struct WitnessCheck {
  bool ok = true;
  std::string violated;
};

/// Independent verifier of the four chain-ball clauses plus the containment
/// of every chain ball in the base ball.
WitnessCheck verify_chain_ball_witness(const DiscreteSpace& space,
                                       const ChainBallWitness& w);

/// Constant conversion between the tau-restricted annulus property and the
/// unrestricted one: ceil(tau)^{1-delta} * C_tau * C1.
double p_tau_convert(double tau, double c_p_tau, double delta, double c1);

}  // namespace locbmo
