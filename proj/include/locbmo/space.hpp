#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locbmo {

enum class Metric { Euclidean, SupNorm, GraphPath };

/// Point-mass weight of the grid measure.
struct WeightSpec {
  enum class Kind { Lebesgue, Power, Counting };
  Kind kind = Kind::Lebesgue;
  double exponent = 0.0;  // only for Power: w(x) = |x|^exponent, exponent > -1
};

struct SpaceSpec {
  int dim = 1;
  double extent = 0.0;
  double spacing = 0.0;
  Metric metric = Metric::Euclidean;
  WeightSpec weight;
};

Metric metric_from_string(const std::string& s);
std::string metric_to_string(Metric m);

/// A finite symmetric grid window of R^d carrying a metric and positive point
/// masses. Immutable after construction; all queries are const.
///
/// Ball membership is strict (d(x,y) < r) unless the closed flag is set.
class DiscreteSpace {
 public:
  static DiscreteSpace build_grid(const SpaceSpec& spec);

  int size() const { return n_; }
  int dim() const { return spec_.dim; }
  Metric metric() const { return spec_.metric; }
  double spacing() const { return spec_.spacing; }
  double extent() const { return spec_.extent; }
  double diam() const { return diam_; }
  double total_mass() const { return total_mass_; }
  const SpaceSpec& spec() const { return spec_; }

  double coord(int i, int axis) const { return coords_[i * spec_.dim + axis]; }
  double mass(int i) const { return masses_[i]; }
  const std::vector<double>& masses() const { return masses_; }

  double distance(int i, int j) const {
    if (spec_.dim == 1) {
      if (spec_.metric == Metric::GraphPath)
        return std::abs(i - j) * spec_.spacing;
      return std::abs(coords_[i] - coords_[j]);
    }
    const double dx = coords_[2 * i] - coords_[2 * j];
    const double dy = coords_[2 * i + 1] - coords_[2 * j + 1];
    switch (spec_.metric) {
      case Metric::Euclidean:
        return std::hypot(dx, dy);
      case Metric::SupNorm:
        return std::max(std::abs(dx), std::abs(dy));
      case Metric::GraphPath: {
        // full grid: all-pairs shortest path over nearest-neighbour edges of
        // length `spacing` collapses to the L1 index distance
        const int ax = i % nx_, ay = i / nx_;
        const int bx = j % nx_, by = j / nx_;
        return (std::abs(ax - bx) + std::abs(ay - by)) * spec_.spacing;
      }
    }
    return 0.0;
  }

  /// Index of the grid point closest to the given coordinates.
  int nearest_point(const std::vector<double>& pos) const;

  /// Members of B(center, r) (strict) or its closure.
  std::vector<int> ball_members(int center, double r, bool closed = false) const;

  /// Visit members without allocating; 1D euclidean grids use the contiguous
  /// index range, everything else scans.
  template <class F>
  void for_ball(int center, double r, bool closed, F&& fn) const {
    if (fast_1d()) {
      auto [lo, hi] = ball_range_1d(center, r, closed);
      for (int j = lo; j <= hi; ++j) fn(j);
      return;
    }
    for (int j = 0; j < n_; ++j) {
      const double d = distance(center, j);
      if (closed ? d <= r : d < r) fn(j);
    }
  }

  /// Contiguous member range [lo, hi] for 1D grids (all three metrics agree
  /// on the line).
  std::pair<int, int> ball_range_1d(int center, double r, bool closed) const;

  double ball_measure(int center, double r, bool closed = false) const;

  struct Vxy {
    double value = 0.0;
    bool degenerate = false;  // x == y, value 0 by convention
  };
  /// V(x,y) = mu(B(x, d(x,y))), open ball.
  Vxy vxy(int x, int y) const;

  bool fast_1d() const { return spec_.dim == 1; }

 private:
  DiscreteSpace() = default;
  SpaceSpec spec_;
  int n_ = 0;
  int nx_ = 0;  // points per axis
  std::vector<double> coords_;
  std::vector<double> masses_;
  std::vector<double> prefix_mass_;  // 1D only: prefix_mass_[k] = sum of masses_[0..k-1]
  double diam_ = 0.0;
  double total_mass_ = 0.0;
};

/// Witness for mu(B(x, lambda r)) <= c2 lambda^n mu(B(x, r)) on the sampled
/// set, with c1 the sampled sup of the doubling ratio.
struct DoublingCertificate {
  double c1 = 1.0;
  double c2 = 1.0;
  double n = 1.0;
};

struct DoublingOptions {
  std::vector<double> lambda_grid = {1.5, 2.0, 3.0, 4.0};
  int radius_count = 24;
  int center_budget = 96;
  // radii below a few lattice spacings make the ratio a counting artifact;
  // certificates sample r >= radius_floor_factor * spacing
  double radius_floor_factor = 8.0;
};

DoublingCertificate doubling_certificate(const DiscreteSpace& space,
                                         const DoublingOptions& opts = {});

/// Logarithmically spaced radii in [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int count);

/// Shared radius grid: log spaced from spacing to diam.
std::vector<double> log_radius_grid(const DiscreteSpace& space, int count = 40);

}  // namespace locbmo
