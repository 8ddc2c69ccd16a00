#include "locbmo/sqfun.hpp"

#include <cmath>
#include <stdexcept>

namespace locbmo {

namespace {

Eigen::VectorXd to_vec(const std::vector<double>& f) {
  return Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(f.size()));
}

void check_input(const KernelFamily& family, const std::vector<double>& f) {
  if (f.size() != static_cast<size_t>(family.n()))
    throw std::invalid_argument("square function: input size mismatch");
  for (double v : f)
    if (!std::isfinite(v)) throw std::invalid_argument("square function: non-finite input");
}

/// |Q_t f(y)|^2 mu_y / V_t(y) for all y at one scale.
std::vector<double> cone_density(const DiscreteSpace& space, const Eigen::VectorXd& u,
                                 double t) {
  const int n = static_cast<int>(u.size());
  std::vector<double> a(n);
  for (int y = 0; y < n; ++y)
    a[y] = u[y] * u[y] * space.mass(y) / space.ball_measure(y, t);
  return a;
}

}  // namespace

SquareFunctionResult g_function(const KernelFamily& family,
                                const std::vector<double>& f) {
  check_input(family, f);
  const int n = family.n();
  const auto& grid = family.scales();
  Eigen::VectorXd c = family.basis().transpose() * to_vec(f);
  std::vector<double> acc(n, 0.0);
  for (int ti = 0; ti < grid.count(); ++ti) {
    const Eigen::VectorXd u = family.apply_coeff(ti, c);
    const double w = grid.log_weights[ti];
    for (int x = 0; x < n; ++x) acc[x] += u[x] * u[x] * w;
  }
  SquareFunctionResult res;
  res.kind = SquareFunctionKind::G;
  res.truncation = {grid.t_min, grid.t_max};
  res.values.resize(n);
  for (int x = 0; x < n; ++x) res.values[x] = std::sqrt(acc[x]);
  return res;
}

SquareFunctionResult lusin_area(const KernelFamily& family,
                                const std::vector<double>& f) {
  check_input(family, f);
  const DiscreteSpace& space = family.space();
  const int n = family.n();
  const auto& grid = family.scales();
  Eigen::VectorXd c = family.basis().transpose() * to_vec(f);
  std::vector<double> acc(n, 0.0);
  for (int ti = 0; ti < grid.count(); ++ti) {
    const double t = grid.t_values[ti];
    const double w = grid.log_weights[ti];
    const Eigen::VectorXd u = family.apply_coeff(ti, c);
    const auto a = cone_density(space, u, t);
    if (space.fast_1d()) {
      std::vector<double> prefix(n + 1, 0.0);
      for (int y = 0; y < n; ++y) prefix[y + 1] = prefix[y] + a[y];
      for (int x = 0; x < n; ++x) {
        auto [lo, hi] = space.ball_range_1d(x, t, false);
        acc[x] += (prefix[hi + 1] - prefix[lo]) * w;
      }
    } else {
      for (int x = 0; x < n; ++x) {
        double s = 0.0;
        space.for_ball(x, t, false, [&](int y) { s += a[y]; });
        acc[x] += s * w;
      }
    }
  }
  SquareFunctionResult res;
  res.kind = SquareFunctionKind::LusinArea;
  res.truncation = {grid.t_min, grid.t_max};
  res.values.resize(n);
  for (int x = 0; x < n; ++x) res.values[x] = std::sqrt(acc[x]);
  return res;
}

SquareFunctionResult g_lambda_star(const KernelFamily& family,
                                   const std::vector<double>& f, double lambda) {
  check_input(family, f);
  if (!(lambda > 0)) throw std::invalid_argument("g_lambda_star: lambda must be > 0");
  const DiscreteSpace& space = family.space();
  const int n = family.n();
  const auto& grid = family.scales();
  Eigen::VectorXd c = family.basis().transpose() * to_vec(f);
  std::vector<double> acc(n, 0.0);
  const bool uniform_1d = space.fast_1d();
  std::vector<double> wk(uniform_1d ? n : 0);
  for (int ti = 0; ti < grid.count(); ++ti) {
    const double t = grid.t_values[ti];
    const double w = grid.log_weights[ti];
    const Eigen::VectorXd u = family.apply_coeff(ti, c);
    const auto a = cone_density(space, u, t);
    if (uniform_1d) {
      // distances on the line take only |i-j|*h, so the weight is a lookup
      const double h = space.spacing();
      for (int k = 0; k < n; ++k) wk[k] = std::pow(t / (t + k * h), lambda);
      for (int x = 0; x < n; ++x) {
        double s = 0.0;
        for (int y = 0; y < n; ++y) s += wk[std::abs(x - y)] * a[y];
        acc[x] += s * w;
      }
    } else {
      for (int x = 0; x < n; ++x) {
        double s = 0.0;
        for (int y = 0; y < n; ++y)
          s += std::pow(t / (t + space.distance(x, y)), lambda) * a[y];
        acc[x] += s * w;
      }
    }
  }
  SquareFunctionResult res;
  res.kind = SquareFunctionKind::GLambdaStar;
  res.lambda = lambda;
  res.truncation = {grid.t_min, grid.t_max};
  res.values.resize(n);
  for (int x = 0; x < n; ++x) res.values[x] = std::sqrt(acc[x]);
  return res;
}

double l2_norm(const DiscreteSpace& space, const std::vector<double>& f) {
  double acc = 0.0;
  for (int i = 0; i < space.size(); ++i) acc += f[i] * f[i] * space.mass(i);
  return std::sqrt(acc);
}

BoundednessExperiment boundedness_experiment(const DiscreteSpace& space,
                                             const KernelFamily& family,
                                             const BallFamily& norm_family,
                                             const std::vector<NamedFunction>& suite,
                                             const std::vector<double>& lambda_list,
                                             double upper_dimension_n, double q) {
  BoundednessExperiment exp;
  for (const auto& fn : suite) {
    const double bmo = bmo_rho_norm(space, fn.values, norm_family, q).total;
    if (!(bmo > 0)) {
      exp.skipped.push_back(fn.id);
      continue;
    }
    auto push = [&](double lambda, const std::string& kind, double num, double den) {
      ExperimentRow row;
      row.function_id = fn.id;
      row.lambda = lambda;
      row.norm_kind = kind;
      row.numerator = num;
      row.denominator = den;
      row.ratio = num / den;
      row.outside_hypothesis = lambda > 0 && lambda <= 3.0 * upper_dimension_n;
      exp.rows.push_back(row);
      exp.max_ratio = std::max(exp.max_ratio, row.ratio);
    };

    const auto S = lusin_area(family, fn.values);
    std::vector<double> S2(S.values.size());
    for (size_t i = 0; i < S2.size(); ++i) S2[i] = S.values[i] * S.values[i];
    push(0.0, "S_sq_blo_over_bmo_sq", blo_rho_norm(space, S2, norm_family, q).total, bmo * bmo);
    push(0.0, "S_blo_over_bmo", blo_rho_norm(space, S.values, norm_family, q).total, bmo);

    for (double lambda : lambda_list) {
      const auto G = g_lambda_star(family, fn.values, lambda);
      std::vector<double> G2(G.values.size());
      for (size_t i = 0; i < G2.size(); ++i) G2[i] = G.values[i] * G.values[i];
      push(lambda, "glstar_sq_blo_over_bmo_sq", blo_rho_norm(space, G2, norm_family, q).total,
           bmo * bmo);
      push(lambda, "glstar_blo_over_bmo", blo_rho_norm(space, G.values, norm_family, q).total,
           bmo);
    }
  }
  return exp;
}

}  // namespace locbmo
