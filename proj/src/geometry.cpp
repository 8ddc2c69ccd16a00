#include "locbmo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace locbmo {

namespace {

std::vector<int> even_centers(int n, int budget) {
  std::vector<int> out;
  const int b = budget > 0 ? std::min(budget, n) : n;
  for (int k = 0; k < b; ++k)
    out.push_back(static_cast<int>(std::llround(double(k) * (n - 1) / std::max(1, b - 1))));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

AnnularDecayCertificate annular_decay_certificate(const DiscreteSpace& space,
                                                  const AnnularDecayOptions& opts) {
  if (space.size() < 2)
    throw std::invalid_argument("annular_decay: space must have at least 2 points");
  if (!(opts.tau >= 1.0)) throw std::invalid_argument("annular_decay: tau must be >= 1");
  const double h = space.spacing();
  const double s_lo = opts.s_floor_factor * h;

  struct Raw {
    int x;
    double r, s, q;  // q = annulus mass / ball mass
  };
  std::vector<Raw> raws;
  const auto centers = even_centers(space.size(), opts.center_budget);
  const auto radii = log_spaced(std::max(opts.tau * s_lo * (1.0 + 1e-9), 2.0 * h),
                                space.diam(), opts.radius_count);
  for (int c : centers) {
    for (double r : radii) {
      const double s_hi = r / opts.tau;
      if (!(s_hi > s_lo)) continue;
      for (double s : log_spaced(s_lo, s_hi * (1.0 - 1e-12), opts.s_count)) {
        const double inner = space.ball_measure(c, r);
        const double outer = space.ball_measure(c, r + s);
        raws.push_back({c, r, s, (outer - inner) / inner});
      }
    }
  }
  if (raws.empty())
    throw std::invalid_argument("annular_decay: window too small for the sample floors");

  AnnularDecayCertificate cert;
  bool any = false;
  for (const Raw& raw : raws) any = any || raw.q > 0;
  cert.trivial = !any;
  for (double delta : opts.delta_grid) {
    double k = 1.0;
    for (const Raw& raw : raws)
      k = std::max(k, raw.q / std::pow(raw.s / raw.r, delta));
    cert.curve.emplace_back(delta, k);
  }
  // lexicographic: the largest delta in (0,1] with its sup K
  cert.delta = cert.curve.back().first;
  cert.k_const = cert.curve.back().second;
  for (const Raw& raw : raws) {
    const double ratio = raw.q / std::pow(raw.s / raw.r, cert.delta);
    if (ratio >= cert.worst.ratio) cert.worst = {raw.x, raw.r, raw.s, ratio};
  }
  return cert;
}

GeodesicCertificate weak_geodesic_certificate(const DiscreteSpace& space,
                                              const WeakGeodesicOptions& opts) {
  if (space.size() < 2)
    throw std::invalid_argument("weak_geodesic: space must have at least 2 points");
  const double h = space.spacing();
  const auto centers = even_centers(space.size(), opts.center_budget);
  std::vector<double> radii = log_spaced(h, space.diam() / 2.0, opts.radius_count);
  if (opts.include_sub_spacing_radii) {
    radii.push_back(0.5 * h);
    radii.push_back(0.96 * h);
  }

  GeodesicCertificate cert;
  cert.trivial = true;
  std::vector<double> sup_by_s(opts.s_factors.size(), 0.0);
  for (size_t si = 0; si < opts.s_factors.size(); ++si) {
    const double s = opts.s_factors[si] * h;
    for (int c : centers) {
      for (double r : radii) {
        const auto inner = space.ball_members(c, r, true);
        for (int y = 0; y < space.size(); ++y) {
          const double dcy = space.distance(c, y);
          if (dcy <= r || dcy > r + s) continue;  // want the closed shell
          cert.trivial = false;
          double dmin = std::numeric_limits<double>::infinity();
          for (int p : inner) dmin = std::min(dmin, space.distance(y, p));
          const double ratio = dmin / s;
          sup_by_s[si] = std::max(sup_by_s[si], ratio);
          if (ratio > cert.witness.ratio)
            cert.witness = {c, r, s, y, dmin, ratio};
          cert.constant = std::max(cert.constant, ratio);
        }
      }
    }
    cert.ratio_by_s.emplace_back(s, sup_by_s[si]);
  }
  // s_factors ascend, so the failure test compares the sub-lattice end of the
  // sweep against the coarse end
  if (!cert.ratio_by_s.empty()) {
    const double small_s = cert.ratio_by_s.front().second;
    const double large_s = std::max(cert.ratio_by_s.back().second, 1e-12);
    cert.holds = !(small_s > opts.failure_factor * large_s);
  }
  return cert;
}

namespace {

// Lattice distances land within an ulp of the chain constraints, so all hop
// admissibility tests carry a relative slack.
constexpr double kHopSlack = 1e-9;

bool hop_admissible(const DiscreteSpace& space, int cur, int w, int x, double dcx,
                    double s, double c4) {
  if (w == cur) return false;
  if (space.distance(cur, w) > c4 * s * (1.0 + kHopSlack)) return false;
  const double dwx = space.distance(w, x);
  if (dwx > dcx - s + kHopSlack * (dcx + s)) return false;
  return true;
}

ChainResult exhaustive_chain(const DiscreteSpace& space, int x, int y, double s, double c4) {
  // BFS over the DAG of admissible hops (distance to x strictly decreases by
  // >= s per hop, so it terminates)
  const int n = space.size();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  parent[y] = -1;
  queue.push_back(y);
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (cur == x) break;
    const double dcx = space.distance(cur, x);
    for (int w = 0; w < n; ++w) {
      if (parent[w] != -2) continue;
      if (!hop_admissible(space, cur, w, x, dcx, s, c4)) continue;
      parent[w] = cur;
      queue.push_back(w);
    }
  }
  ChainResult res;
  res.used_fallback = true;
  if (parent[x] == -2) {
    res.stuck_at = y;
    return res;
  }
  for (int p = x; p != -1; p = parent[p]) res.points.push_back(p);
  std::reverse(res.points.begin(), res.points.end());
  res.ok = true;
  return res;
}

}  // namespace

ChainResult monotone_geodesic_chain(const DiscreteSpace& space, int x, int y, double s,
                                    double c4, bool exhaustive_fallback) {
  if (!(s > 0)) throw std::invalid_argument("monotone_chain: s must be > 0");
  if (!(c4 >= 1.0)) throw std::invalid_argument("monotone_chain: c4 must be >= 1");
  if (!(space.distance(x, y) >= s))
    throw std::invalid_argument("monotone_chain: requires d(x,y) >= s");
  ChainResult res;
  res.points.push_back(y);
  int cur = y;
  const int max_hops = static_cast<int>(std::ceil(space.distance(x, y) / s)) + 2;
  for (int hop = 0; hop < max_hops; ++hop) {
    if (cur == x) {
      res.ok = true;
      return res;
    }
    const double dcx = space.distance(cur, x);
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int w = 0; w < space.size(); ++w) {
      if (!hop_admissible(space, cur, w, x, dcx, s, c4)) continue;
      const double dwx = space.distance(w, x);
      // a landing strictly inside distance s of x (but not at x) is a dead
      // end for the next hop
      if (w != x && dwx < s * (1.0 - kHopSlack)) continue;
      if (dwx < best_d) {
        best_d = dwx;
        best = w;
      }
    }
    if (best < 0) {
      if (exhaustive_fallback && space.size() <= 4096) {
        auto fb = exhaustive_chain(space, x, y, s, c4);
        if (fb.ok) return fb;
      }
      res.stuck_at = cur;
      return res;
    }
    cur = best;
    res.points.push_back(cur);
  }
  res.stuck_at = cur;
  return res;
}

ChainResult first_hop_resolver(const DiscreteSpace& space, int target, int start, double s,
                               double c4) {
  // One admissible hop is all the chain-ball construction consumes: step at
  // most c4*s and progress toward the target by at least s. A full
  // monotone chain can fail on a lattice when s is misaligned with the
  // spacing even though every first hop exists.
  const double dcx = space.distance(start, target);
  ChainResult res;
  res.points.push_back(start);
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int w = 0; w < space.size(); ++w) {
    if (!hop_admissible(space, start, w, target, dcx, s, c4)) continue;
    const double dwx = space.distance(w, target);
    if (dwx < best_d) {
      best_d = dwx;
      best = w;
    }
  }
  if (best < 0) {
    res.stuck_at = start;
    return res;
  }
  res.points.push_back(best);
  res.ok = true;
  return res;
}

ChainBallWitness chain_ball_construct(const DiscreteSpace& space, const Ball& base, int x,
                                      double c4, const StepResolver& resolver) {
  if (!(c4 >= 1.0)) throw std::invalid_argument("chain_ball: c4 must be >= 1");
  const int z = base.center;
  const double r = base.radius;
  if (!(space.distance(x, z) < r))
    throw std::invalid_argument("chain_ball: x must lie in the base ball");
  const StepResolver resolve = resolver ? resolver : first_hop_resolver;

  ChainBallWitness w;
  w.base = base;
  w.central = Ball{z, 0.75 * r};
  w.target = x;
  w.alpha = 4.0 * c4 / 3.0;
  w.beta = 4.0 / 3.0;

  if (space.distance(x, z) < w.central.radius) {
    w.chain = {w.central};
  } else {
    std::vector<Ball> constructed;
    int cur = x;
    const int max_iter = 64 + static_cast<int>(
        std::ceil(std::log(std::max(2.0, 4.0 * r / (r - space.distance(x, z)))) /
                  std::log1p(1.0 / (2.0 * c4))));
    int iter = 0;
    for (;;) {
      if (++iter > max_iter)
        throw std::runtime_error("chain_ball: construction failed to terminate");
      const double t = (r - space.distance(cur, z)) / 2.0;
      w.t_trace.push_back(t);
      constructed.push_back(Ball{cur, 1.5 * t});
      const auto step = resolve(space, z, cur, t / c4, c4);
      if (!step.ok)
        throw std::runtime_error("chain_ball: monotone chain unavailable at scale " +
                                 std::to_string(t / c4));
      cur = step.points.at(1);
      if (space.distance(cur, z) < w.central.radius) break;
    }
    w.chain.push_back(w.central);
    for (auto it = constructed.rbegin(); it != constructed.rend(); ++it) w.chain.push_back(*it);
  }

  const auto check = verify_chain_ball_witness(space, w);
  if (!check.ok)
    throw std::runtime_error("chain_ball: constructed witness violates " + check.violated);
  return w;
}

WitnessCheck verify_chain_ball_witness(const DiscreteSpace& space,
                                       const ChainBallWitness& w) {
  auto fail = [](const std::string& what) { return WitnessCheck{false, what}; };
  if (w.chain.empty()) return fail("(i): empty chain");
  if (w.chain.front().center != w.central.center ||
      w.chain.front().radius != w.central.radius)
    return fail("(i): chain does not start at the central ball");
  const Ball& last = w.chain.back();
  if (!(space.distance(w.target, last.center) < last.radius))
    return fail("(i): target not in the last ball");
  for (size_t i = 0; i + 1 < w.chain.size(); ++i) {
    bool meet = false;
    space.for_ball(w.chain[i].center, w.chain[i].radius, false, [&](int p) {
      if (!meet && space.distance(p, w.chain[i + 1].center) < w.chain[i + 1].radius)
        meet = true;
    });
    if (!meet) return fail("(ii): consecutive balls disjoint at index " + std::to_string(i));
  }
  for (size_t i = 0; i < w.chain.size(); ++i) {
    if (!(space.distance(w.target, w.chain[i].center) < w.alpha * w.chain[i].radius))
      return fail("(iii): target escapes alpha-dilate at index " + std::to_string(i));
    const double depth = w.base.radius - space.distance(w.chain[i].center, w.base.center);
    if (!(w.beta * w.chain[i].radius <= depth * (1.0 + 1e-12)))
      return fail("(iv): depth bound fails at index " + std::to_string(i));
    bool inside = true;
    space.for_ball(w.chain[i].center, w.chain[i].radius, false, [&](int p) {
      if (inside && !(space.distance(p, w.base.center) < w.base.radius)) inside = false;
    });
    if (!inside) return fail("containment: chain ball escapes the base ball");
  }
  return {};
}

double p_tau_convert(double tau, double c_p_tau, double delta, double c1) {
  if (!(tau > 1.0)) throw std::invalid_argument("p_tau_convert: tau must be > 1");
  if (!(delta > 0.0) || !(delta <= 1.0))
    throw std::invalid_argument("p_tau_convert: delta must be in (0,1]");
  if (!(c1 >= 1.0)) throw std::invalid_argument("p_tau_convert: c1 must be >= 1");
  return std::pow(std::ceil(tau), 1.0 - delta) * c_p_tau * c1;
}

}  // namespace locbmo
