#include "locbmo/admissible.hpp"

#include <cmath>
#include <stdexcept>

namespace locbmo {

Potential Potential::constant(const DiscreteSpace& space, double v) {
  if (v < 0) throw std::invalid_argument("potential: must be nonnegative");
  return {std::vector<double>(space.size(), v)};
}

Potential Potential::power(const DiscreteSpace& space, double exponent) {
  Potential p;
  p.values.resize(space.size());
  for (int i = 0; i < space.size(); ++i) {
    double norm2 = 0.0;
    for (int a = 0; a < space.dim(); ++a) norm2 += space.coord(i, a) * space.coord(i, a);
    double r = std::sqrt(norm2);
    if (exponent < 0.0) r = std::max(r, space.spacing() / 2.0);
    p.values[i] = std::pow(r, exponent);
  }
  return p;
}

Potential Potential::indicator(const DiscreteSpace& space, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("potential indicator: need lo < hi");
  Potential p;
  p.values.resize(space.size(), 0.0);
  for (int i = 0; i < space.size(); ++i) {
    const double x = space.coord(i, 0);
    if (x >= lo && x <= hi) p.values[i] = 1.0;
  }
  return p;
}

AdmissibleFn AdmissibleFn::constant(const DiscreteSpace& space, double value) {
  if (!(value > 0)) throw std::invalid_argument("rho: must be positive");
  AdmissibleFn fn;
  fn.values.assign(space.size(), value);
  fn.c0 = 1.0;
  fn.k0 = 0.0;
  fn.tradeoff = {{0.0, 1.0}};
  return fn;
}

AdmissibilityCertificate admissibility_certificate(
    const DiscreteSpace& space, const std::vector<double>& rho,
    const std::vector<double>& k0_grid) {
  const int n = space.size();
  if (rho.size() != static_cast<size_t>(n))
    throw std::invalid_argument("admissibility: rho size mismatch");
  for (double v : rho)
    if (!(v > 0)) throw std::invalid_argument("admissibility: rho must be positive");
  if (k0_grid.empty()) throw std::invalid_argument("admissibility: empty k0 grid");

  // log c0(k0) = sup over pairs of [log rho(y) - log rho(x) - k0 log(1 + d/rho(y))]
  std::vector<double> log_c0(k0_grid.size(), 0.0);  // diagonal pair gives ratio 1
  std::vector<double> lr(n);
  for (int i = 0; i < n; ++i) lr[i] = std::log(rho[i]);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const double a = lr[y] - lr[x];
      const double b = std::log1p(space.distance(x, y) / rho[y]);
      for (size_t k = 0; k < k0_grid.size(); ++k) {
        const double v = a - k0_grid[k] * b;
        if (v > log_c0[k]) log_c0[k] = v;
      }
    }
  }
  AdmissibilityCertificate cert;
  size_t best = 0;
  for (size_t k = 0; k < k0_grid.size(); ++k) {
    cert.tradeoff.emplace_back(k0_grid[k], std::exp(log_c0[k]));
    if (log_c0[k] < log_c0[best] - 1e-12) best = k;
  }
  cert.k0 = k0_grid[best];
  cert.c0 = std::exp(log_c0[best]);
  return cert;
}

AdmissibleFn schrodinger_rho(const DiscreteSpace& space, const Potential& v,
                             int radius_count) {
  const int n = space.size();
  if (v.values.size() != static_cast<size_t>(n))
    throw std::invalid_argument("schrodinger_rho: potential size mismatch");
  bool any = false;
  for (double x : v.values)
    if (x > 0) {
      any = true;
      break;
    }
  if (!any) throw std::invalid_argument("schrodinger_rho: potential identically zero, rho infinite");

  const auto radii = log_spaced(space.spacing(), 2.0 * space.diam(), radius_count);
  AdmissibleFn fn;
  fn.values.resize(n);
  for (int x = 0; x < n; ++x) {
    double best = -1.0;
    bool top = false;
    for (size_t ri = 0; ri < radii.size(); ++ri) {
      const double r = radii[ri];
      double num = 0.0, den = 0.0;
      space.for_ball(x, r, false, [&](int j) {
        num += v.values[j] * space.mass(j);
        den += space.mass(j);
      });
      const double cond = r * r * (num / den);
      if (cond <= 1.0) {
        best = r;
        top = (ri + 1 == radii.size());
      }
    }
    if (best < 0) {
      fn.values[x] = radii.front();
      fn.floored = true;
    } else {
      fn.values[x] = best;
      if (top) fn.capped = true;
    }
  }
  auto cert = admissibility_certificate(space, fn.values);
  fn.c0 = cert.c0;
  fn.k0 = cert.k0;
  fn.tradeoff = std::move(cert.tradeoff);
  return fn;
}

ReverseHolderResult reverse_holder_constant(const DiscreteSpace& space,
                                            const Potential& v, double q,
                                            const BallFamily& family) {
  if (!(q > 1.0)) throw std::invalid_argument("reverse_holder: q must be in (1, inf)");
  ReverseHolderResult res;
  for (const Ball& b : family.balls) {
    double m = 0.0, s1 = 0.0, sq = 0.0;
    space.for_ball(b.center, b.radius, false, [&](int j) {
      const double w = space.mass(j);
      m += w;
      s1 += v.values[j] * w;
      sq += std::pow(v.values[j], q) * w;
    });
    const double avg = s1 / m;
    if (!(avg > 0.0)) {
      ++res.skipped;
      continue;
    }
    const double ratio = std::pow(sq / m, 1.0 / q) / avg;
    if (ratio > res.constant) {
      res.constant = ratio;
      res.argmax = b;
    }
  }
  if (res.constant == 0.0)
    throw std::runtime_error("reverse_holder: potential vanishes on family");
  return res;
}

double comparability_constant(double c0, double k0, double a) {
  // d(x,y) <= a rho(x) gives rho(x) <= c0 (1+a)^k0 rho(y) directly; feeding
  // that bound back into the defining inequality gives the other side
  const double one_way = c0 * std::pow(1.0 + a, k0);
  const double other = c0 * std::pow(1.0 + a * one_way, k0);
  return std::max(one_way, other);
}

ComparabilityCheck check_comparability(const DiscreteSpace& space,
                                       const std::vector<double>& rho, double a,
                                       double c_tilde) {
  ComparabilityCheck out;
  const int n = space.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (space.distance(x, y) > a * rho[x]) continue;
      const double r1 = rho[x] / rho[y];
      const double worst = std::max(r1, 1.0 / r1);
      if (worst > out.worst_ratio) {
        out.worst_ratio = worst;
        out.worst_x = x;
        out.worst_y = y;
      }
      if (worst > c_tilde) out.ok = false;
    }
  return out;
}

}  // namespace locbmo
