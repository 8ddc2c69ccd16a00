#include "locbmo/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace locbmo {

Metric metric_from_string(const std::string& s) {
  if (s == "euclidean") return Metric::Euclidean;
  if (s == "sup_norm") return Metric::SupNorm;
  if (s == "graph_path") return Metric::GraphPath;
  throw std::invalid_argument("unknown metric: " + s);
}

std::string metric_to_string(Metric m) {
  switch (m) {
    case Metric::Euclidean: return "euclidean";
    case Metric::SupNorm: return "sup_norm";
    case Metric::GraphPath: return "graph_path";
  }
  return "?";
}

DiscreteSpace DiscreteSpace::build_grid(const SpaceSpec& spec) {
  if (spec.dim != 1 && spec.dim != 2)
    throw std::invalid_argument("space.dim: must be 1 or 2");
  if (!(spec.extent > 0.0))
    throw std::invalid_argument("space.extent: must be > 0");
  if (!(spec.spacing > 0.0) || !(spec.spacing < spec.extent))
    throw std::invalid_argument("space.spacing: must satisfy 0 < spacing < extent");
  if (spec.weight.kind == WeightSpec::Kind::Power && !(spec.weight.exponent > -1.0))
    throw std::invalid_argument("space.weight.exponent: must be > -1 (local integrability)");

  DiscreteSpace s;
  s.spec_ = spec;
  const double h = spec.spacing;
  const int m = static_cast<int>(std::floor(spec.extent / h + 1e-9));
  s.nx_ = 2 * m + 1;
  s.n_ = spec.dim == 1 ? s.nx_ : s.nx_ * s.nx_;
  if (s.n_ < 2) throw std::invalid_argument("space: degenerate single-point grid");

  s.coords_.resize(static_cast<size_t>(s.n_) * spec.dim);
  s.masses_.resize(s.n_);
  const double cell = spec.dim == 1 ? h : h * h;
  for (int i = 0; i < s.n_; ++i) {
    double norm2 = 0.0;
    if (spec.dim == 1) {
      const double x = (i - m) * h;
      s.coords_[i] = x;
      norm2 = x * x;
    } else {
      const int ix = i % s.nx_, iy = i / s.nx_;
      const double x = (ix - m) * h, y = (iy - m) * h;
      s.coords_[2 * i] = x;
      s.coords_[2 * i + 1] = y;
      norm2 = x * x + y * y;
    }
    switch (spec.weight.kind) {
      case WeightSpec::Kind::Lebesgue:
        s.masses_[i] = cell;
        break;
      case WeightSpec::Kind::Power: {
        // the weight is evaluated at half-spacing where it would vanish or
        // blow up at the origin, keeping every point mass positive
        const double r = std::max(std::sqrt(norm2), h / 2.0);
        s.masses_[i] = cell * std::pow(r, spec.weight.exponent);
        break;
      }
      case WeightSpec::Kind::Counting:
        s.masses_[i] = 1.0;
        break;
    }
  }
  s.total_mass_ = std::accumulate(s.masses_.begin(), s.masses_.end(), 0.0);

  if (spec.dim == 1) {
    s.prefix_mass_.resize(s.n_ + 1, 0.0);
    for (int i = 0; i < s.n_; ++i) s.prefix_mass_[i + 1] = s.prefix_mass_[i] + s.masses_[i];
    s.diam_ = s.coords_[s.n_ - 1] - s.coords_[0];
    if (spec.metric == Metric::GraphPath) s.diam_ = (s.n_ - 1) * h;
  } else {
    // extreme corners realize the diameter for all three grid metrics
    const int a = 0, b = s.n_ - 1;
    // diam_ needed before distance() is valid; compute directly
    const double dx = s.coords_[2 * a] - s.coords_[2 * b];
    const double dy = s.coords_[2 * a + 1] - s.coords_[2 * b + 1];
    switch (spec.metric) {
      case Metric::Euclidean: s.diam_ = std::hypot(dx, dy); break;
      case Metric::SupNorm: s.diam_ = std::max(std::abs(dx), std::abs(dy)); break;
      case Metric::GraphPath: s.diam_ = (std::abs(dx) + std::abs(dy)); break;
    }
  }
  return s;
}

int DiscreteSpace::nearest_point(const std::vector<double>& pos) const {
  if (static_cast<int>(pos.size()) != spec_.dim)
    throw std::invalid_argument("nearest_point: wrong dimension");
  int best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    double d2 = 0.0;
    for (int a = 0; a < spec_.dim; ++a) {
      const double d = coord(i, a) - pos[a];
      d2 += d * d;
    }
    if (d2 < bd) {
      bd = d2;
      best = i;
    }
  }
  return best;
}

std::pair<int, int> DiscreteSpace::ball_range_1d(int center, double r, bool closed) const {
  const double xc = coords_[center];
  // first index with x > xc - r (or >= for closed)
  auto lo_it = closed ? std::lower_bound(coords_.begin(), coords_.end(), xc - r)
                      : std::upper_bound(coords_.begin(), coords_.end(), xc - r);
  // last index with x < xc + r (or <= for closed)
  auto hi_it = closed ? std::upper_bound(coords_.begin(), coords_.end(), xc + r)
                      : std::lower_bound(coords_.begin(), coords_.end(), xc + r);
  int lo = static_cast<int>(lo_it - coords_.begin());
  int hi = static_cast<int>(hi_it - coords_.begin()) - 1;
  lo = std::max(lo, 0);
  hi = std::min(hi, n_ - 1);
  if (hi < center) hi = center;
  if (lo > center) lo = center;
  return {lo, hi};
}

std::vector<int> DiscreteSpace::ball_members(int center, double r, bool closed) const {
  std::vector<int> out;
  for_ball(center, r, closed, [&](int j) { out.push_back(j); });
  return out;
}

double DiscreteSpace::ball_measure(int center, double r, bool closed) const {
  if (!(r > 0.0)) throw std::invalid_argument("ball_measure: radius must be > 0");
  if (fast_1d()) {
    auto [lo, hi] = ball_range_1d(center, r, closed);
    return prefix_mass_[hi + 1] - prefix_mass_[lo];
  }
  double acc = 0.0;
  for_ball(center, r, closed, [&](int j) { acc += masses_[j]; });
  return acc;
}

DiscreteSpace::Vxy DiscreteSpace::vxy(int x, int y) const {
  if (x == y) return {0.0, true};
  return {ball_measure(x, distance(x, y), false), false};
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int k = 0; k < count; ++k) out[k] = lo * std::exp(step * k);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> log_radius_grid(const DiscreteSpace& space, int count) {
  return log_spaced(space.spacing(), space.diam(), count);
}

DoublingCertificate doubling_certificate(const DiscreteSpace& space,
                                         const DoublingOptions& opts) {
  const int n = space.size();
  std::vector<int> centers;
  const int budget = opts.center_budget > 0 ? std::min(opts.center_budget, n) : n;
  for (int k = 0; k < budget; ++k)
    centers.push_back(static_cast<int>(std::llround(double(k) * (n - 1) / std::max(1, budget - 1))));

  const double r_lo = opts.radius_floor_factor * space.spacing();
  const double r_hi = space.diam();
  if (!(r_lo < r_hi))
    throw std::invalid_argument("doubling_certificate: window too small for radius floor");
  const auto radii = log_spaced(r_lo, r_hi, opts.radius_count);

  DoublingCertificate cert;
  cert.c1 = 1.0;
  struct Sample {
    double log_lambda, log_ratio;
    bool saturated;  // the scaled ball swallowed most of the window
  };
  std::vector<Sample> samples;
  for (int c : centers) {
    for (double r : radii) {
      const double base = space.ball_measure(c, r);
      if (!(base > 0)) continue;
      cert.c1 = std::max(cert.c1, space.ball_measure(c, 2 * r) / base);
      for (double lam : opts.lambda_grid) {
        if (!(lam >= 1.0)) throw std::invalid_argument("doubling: lambda grid values must be >= 1");
        const double scaled = space.ball_measure(c, lam * r);
        samples.push_back(
            {std::log(lam), std::log(scaled / base), scaled > 0.5 * space.total_mass()});
      }
    }
  }
  if (samples.empty()) throw std::runtime_error("doubling_certificate: no valid samples");
  // least-squares exponent over the unsaturated samples (saturated balls
  // carry no scaling information), then inflate c2 so the bound holds on
  // every sample
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int pass = 0; pass < 2 && cnt < 8; ++pass) {
    sx = sy = sxx = sxy = 0.0;
    cnt = 0;
    for (const auto& s : samples) {
      if (pass == 0 && s.saturated) continue;
      sx += s.log_lambda;
      sy += s.log_ratio;
      sxx += s.log_lambda * s.log_lambda;
      sxy += s.log_lambda * s.log_ratio;
      ++cnt;
    }
  }
  const double denom = cnt * sxx - sx * sx;
  double n_fit = denom != 0.0 ? (cnt * sxy - sx * sy) / denom : 1.0;
  if (n_fit < 1e-6) n_fit = 1e-6;
  double c2 = 1.0;
  for (const auto& s : samples)
    c2 = std::max(c2, std::exp(s.log_ratio - n_fit * s.log_lambda));
  cert.n = n_fit;
  cert.c2 = c2;
  return cert;
}

}  // namespace locbmo
