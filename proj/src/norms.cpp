#include "locbmo/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace locbmo {

BallFamily BallFamily::enumerate(const DiscreteSpace& space,
                                 const std::vector<double>& rho,
                                 int center_budget, int radius_count) {
  const int n = space.size();
  std::vector<int> centers;
  const int budget = center_budget > 0 ? std::min(center_budget, n) : n;
  for (int k = 0; k < budget; ++k)
    centers.push_back(static_cast<int>(std::llround(double(k) * (n - 1) / std::max(1, budget - 1))));
  return enumerate_with_radii(space, rho, centers, log_radius_grid(space, radius_count));
}

BallFamily BallFamily::enumerate_with_radii(const DiscreteSpace& space,
                                            const std::vector<double>& rho,
                                            const std::vector<int>& centers,
                                            const std::vector<double>& radii) {
  if (rho.size() != static_cast<size_t>(space.size()))
    throw std::invalid_argument("ball family: rho size mismatch");
  BallFamily fam;
  fam.balls.reserve(centers.size() * radii.size());
  for (int c : centers)
    for (double r : radii) {
      fam.balls.push_back({c, r});
      fam.class_d.push_back(r >= rho[c] ? 1 : 0);
    }
  return fam;
}

namespace {

struct BallStats {
  double measure = 0.0;
  double favg = 0.0;
  double fmin = 0.0;
};

BallStats first_pass(const DiscreteSpace& space, const std::vector<double>& f,
                     const Ball& b) {
  if (!(b.radius > 0.0) || b.center < 0)
    throw std::invalid_argument("ball operation: empty or invalid ball");
  BallStats st;
  double acc = 0.0;
  double mn = std::numeric_limits<double>::infinity();
  space.for_ball(b.center, b.radius, false, [&](int j) {
    const double m = space.mass(j);
    st.measure += m;
    acc += f[j] * m;
    mn = std::min(mn, f[j]);
  });
  if (!(st.measure > 0.0)) throw std::invalid_argument("ball operation: empty ball");
  st.favg = acc / st.measure;
  st.fmin = mn;
  return st;
}

double q_mean_about(const DiscreteSpace& space, const std::vector<double>& f,
                    const Ball& b, double center_value, double q, double measure) {
  double acc = 0.0;
  if (q == 1.0) {
    space.for_ball(b.center, b.radius, false,
                   [&](int j) { acc += std::abs(f[j] - center_value) * space.mass(j); });
    return acc / measure;
  }
  space.for_ball(b.center, b.radius, false, [&](int j) {
    acc += std::pow(std::abs(f[j] - center_value), q) * space.mass(j);
  });
  return std::pow(acc / measure, 1.0 / q);
}

}  // namespace

double ball_average(const DiscreteSpace& space, const std::vector<double>& f,
                    const Ball& b) {
  return first_pass(space, f, b).favg;
}

double mean_oscillation(const DiscreteSpace& space, const std::vector<double>& f,
                        const Ball& b, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("mean_oscillation: q must be >= 1");
  const auto st = first_pass(space, f, b);
  return q_mean_about(space, f, b, st.favg, q, st.measure);
}

double essinf_ball(const DiscreteSpace& space, const std::vector<double>& f,
                   const Ball& b) {
  return first_pass(space, f, b).fmin;
}

namespace {

NormReport localized_norm(const DiscreteSpace& space, const std::vector<double>& f,
                          const BallFamily& family, double q, bool lower_oscillation) {
  if (family.balls.empty()) throw std::invalid_argument("norm: empty ball family");
  if (!(q >= 1.0)) throw std::invalid_argument("norm: q must be >= 1");
  NormReport rep;
  for (size_t i = 0; i < family.balls.size(); ++i) {
    const Ball& b = family.balls[i];
    const auto st = first_pass(space, f, b);
    if (family.class_d[i]) {
      const double v = q_mean_about(space, f, b, 0.0, q, st.measure);
      if (v > rep.local_part) {
        rep.local_part = v;
        rep.argmax_local = b;
      }
    } else {
      const double about = lower_oscillation ? st.fmin : st.favg;
      const double v = q_mean_about(space, f, b, about, q, st.measure);
      if (v > rep.oscillation_part) {
        rep.oscillation_part = v;
        rep.argmax_oscillation = b;
      }
    }
  }
  rep.total = std::max(rep.oscillation_part, rep.local_part);
  return rep;
}

}  // namespace

NormReport bmo_rho_norm(const DiscreteSpace& space, const std::vector<double>& f,
                        const BallFamily& family, double q) {
  return localized_norm(space, f, family, q, false);
}

NormReport blo_rho_norm(const DiscreteSpace& space, const std::vector<double>& f,
                        const BallFamily& family, double q) {
  return localized_norm(space, f, family, q, true);
}

double bmo_phi_norm(const DiscreteSpace& space, const std::vector<double>& f,
                    const BallFamily& family,
                    const std::function<double(double)>& phi, bool tilde) {
  double sup = 0.0;
  for (const Ball& b : family.balls) {
    const double p = phi(b.radius);
    if (!(p > 0.0)) throw std::invalid_argument("bmo_phi_norm: phi must be positive");
    sup = std::max(sup, mean_oscillation(space, f, b, 1.0) / p);
  }
  if (tilde) {
    std::vector<double> origin(space.dim(), 0.0);
    sup += std::abs(ball_average(space, f, {space.nearest_point(origin), 1.0}));
  }
  return sup;
}

}  // namespace locbmo
