#include "locbmo/kernels.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

namespace locbmo {

ScaleGrid ScaleGrid::logarithmic(double t_min, double t_max, int count) {
  if (!(t_min > 0) || !(t_max > t_min) || count < 2)
    throw std::invalid_argument("scale_grid: need 0 < t_min < t_max, count >= 2");
  ScaleGrid g;
  g.t_min = t_min;
  g.t_max = t_max;
  const double step = std::log(t_max / t_min) / count;
  g.t_values.resize(count);
  g.log_weights.assign(count, step);
  for (int i = 0; i < count; ++i)
    g.t_values[i] = std::exp(std::log(t_min) + (i + 0.5) * step);
  return g;
}

ScaleGrid ScaleGrid::for_space(const DiscreteSpace& space, int count) {
  return logarithmic(space.spacing(), 4.0 * space.diam(), count);
}

Eigen::MatrixXd schrodinger_generator(const DiscreteSpace& space, const Potential& v) {
  if (space.dim() != 1 || space.metric() == Metric::SupNorm)
    throw std::invalid_argument("schrodinger_generator: requires a 1D grid");
  const int n = space.size();
  if (v.values.size() != static_cast<size_t>(n))
    throw std::invalid_argument("schrodinger_generator: potential size mismatch");
  const double m0 = space.mass(0);
  for (int i = 0; i < n; ++i) {
    if (v.values[i] < 0)
      throw std::invalid_argument("schrodinger_generator: potential must be >= 0");
    if (std::abs(space.mass(i) - m0) > 1e-12 * m0)
      throw std::invalid_argument("schrodinger_generator: requires uniform masses");
  }
  const double h2 = space.spacing() * space.spacing();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    L(i, i) = 2.0 / h2 + v.values[i];
    if (i > 0) L(i, i - 1) = -1.0 / h2;
    if (i + 1 < n) L(i, i + 1) = -1.0 / h2;
  }
  return L;
}

KernelFamily::KernelFamily(DiscreteSpace space, Eigen::VectorXd eigenvalues,
                           Eigen::MatrixXd basis, ScaleGrid grid)
    : space_(std::move(space)),
      eigenvalues_(std::move(eigenvalues)),
      basis_(std::move(basis)),
      grid_(std::move(grid)) {}

double KernelFamily::multiplier_bound(int ti) const {
  const double t = grid_.t_values[ti];
  double b = 0.0;
  for (int j = 0; j < n(); ++j) b = std::max(b, std::abs(multiplier(t, eigenvalues_[j])));
  return b;
}

Eigen::VectorXd KernelFamily::apply(int ti, const Eigen::VectorXd& f) const {
  return apply_coeff(ti, basis_.transpose() * f);
}

Eigen::VectorXd KernelFamily::apply_coeff(int ti, const Eigen::VectorXd& c) const {
  const double t = grid_.t_values[ti];
  Eigen::VectorXd mc(n());
  for (int j = 0; j < n(); ++j) mc[j] = multiplier(t, eigenvalues_[j]) * c[j];
  return basis_ * mc;
}

Eigen::MatrixXd KernelFamily::kernel_matrix(int ti) const {
  const double t = grid_.t_values[ti];
  Eigen::VectorXd m(n());
  for (int j = 0; j < n(); ++j) m[j] = multiplier(t, eigenvalues_[j]);
  Eigen::MatrixXd op = (basis_ * m.asDiagonal()) * basis_.transpose();
  for (int y = 0; y < n(); ++y) op.col(y) /= space_.mass(y);
  return op;
}

Eigen::MatrixXd KernelFamily::kernel_rows(int ti, const std::vector<int>& centers) const {
  const double t = grid_.t_values[ti];
  Eigen::VectorXd m(n());
  for (int j = 0; j < n(); ++j) m[j] = multiplier(t, eigenvalues_[j]);
  Eigen::MatrixXd sub(centers.size(), n());
  for (size_t r = 0; r < centers.size(); ++r) sub.row(r) = basis_.row(centers[r]);
  Eigen::MatrixXd rows = (sub * m.asDiagonal()) * basis_.transpose();
  for (int y = 0; y < n(); ++y) rows.col(y) /= space_.mass(y);
  return rows;
}

Eigen::VectorXd KernelFamily::mass_integral(int ti) const {
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n());
  return apply(ti, ones);
}

Eigen::MatrixXd KernelFamily::heat_operator(double s) const {
  Eigen::VectorXd m(n());
  for (int j = 0; j < n(); ++j) m[j] = std::exp(-s * eigenvalues_[j]);
  return (basis_ * m.asDiagonal()) * basis_.transpose();
}

namespace {

bool is_tridiagonal(const Eigen::MatrixXd& L) {
  const int n = static_cast<int>(L.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (L(i, j) != 0.0 || L(j, i) != 0.0) return false;
  return true;
}

}  // namespace

KernelFamily build_qt_family(const Eigen::MatrixXd& L, const ScaleGrid& grid,
                             const DiscreteSpace& space) {
  const int n = static_cast<int>(L.rows());
  if (L.cols() != n || n != space.size())
    throw std::invalid_argument("build_qt_family: operator/space size mismatch");
  if (!L.isApprox(L.transpose(), 1e-12))
    throw std::invalid_argument("build_qt_family: operator not symmetric");

  Eigen::VectorXd evals(n);
  Eigen::MatrixXd evecs(n, n);
  if (is_tridiagonal(L)) {
    std::vector<double> d(n), e(std::max(n - 1, 1));
    for (int i = 0; i < n; ++i) d[i] = L(i, i);
    for (int i = 0; i + 1 < n; ++i) e[i] = L(i, i + 1);
    std::vector<double> z(static_cast<size_t>(n) * n);
    const lapack_int info = LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, d.data(),
                                           e.data(), z.data(), n);
    if (info != 0) throw std::runtime_error("build_qt_family: eigendecomposition failed");
    for (int i = 0; i < n; ++i) evals[i] = d[i];
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) evecs(i, j) = z[static_cast<size_t>(j) * n + i];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("build_qt_family: eigendecomposition failed");
    evals = es.eigenvalues();
    evecs = es.eigenvectors();
  }
  if (evals.minCoeff() < -1e-8 * std::max(1.0, std::abs(evals.maxCoeff())))
    throw std::invalid_argument("build_qt_family: operator not positive semidefinite");
  return KernelFamily(space, std::move(evals), std::move(evecs), grid);
}

double KernelDecayCertificate::qi_constant(double g, double d1) const {
  for (const auto& e : qi_surface)
    if (e.gamma == g && e.delta1 == d1) return e.c;
  throw std::invalid_argument("certificate: exponent pair not fitted");
}

double KernelDecayCertificate::qii_constant(double d2) const {
  for (const auto& e : qii_surface)
    if (e.delta2 == d2) return e.c;
  throw std::invalid_argument("certificate: exponent not fitted");
}

namespace {

std::vector<int> pick_centers(int n, int budget) {
  std::vector<int> out;
  const int b = budget > 0 ? std::min(budget, n) : n;
  for (int k = 0; k < b; ++k)
    out.push_back(static_cast<int>(std::llround(double(k) * (n - 1) / std::max(1, b - 1))));
  return out;
}

}  // namespace

KernelDecayCertificate decay_certificate(const KernelFamily& family,
                                         const AdmissibleFn& rho,
                                         const DecayOptions& opts) {
  const DiscreteSpace& space = family.space();
  const int n = family.n();
  if (rho.values.size() != static_cast<size_t>(n))
    throw std::invalid_argument("decay_certificate: rho size mismatch");

  KernelDecayCertificate cert;
  cert.sampled_centers = pick_centers(n, opts.center_budget);
  for (double g : opts.gammas)
    for (double d1 : opts.delta1s) cert.qi_surface.push_back({g, d1, 0.0, -1, -1, -1});
  for (double d2 : opts.delta2s) cert.qii_surface.push_back({d2, 0.0, -1, -1});

  for (int ti = 0; ti < family.scales().count(); ++ti) {
    const double t = family.scales().t_values[ti];
    const Eigen::MatrixXd rows = family.kernel_rows(ti, cert.sampled_centers);
    const Eigen::VectorXd mass = family.mass_integral(ti);

    for (size_t r = 0; r < cert.sampled_centers.size(); ++r) {
      const int x = cert.sampled_centers[r];
      const double vt = space.ball_measure(x, t);
      const double rx = rho.values[x];
      for (int y = 0; y < n; ++y) {
        const double lhs = std::abs(rows(r, y));
        if (lhs == 0.0) continue;
        const double vxy = (x == y) ? 0.0 : space.vxy(x, y).value;
        const double d = space.distance(x, y);
        const double base = lhs * (vt + vxy);
        for (auto& e : cert.qi_surface) {
          const double c = base * std::pow((t + d) / t, e.gamma) *
                           std::pow((t + rx) / rx, e.delta1);
          if (c > e.c) {
            e.c = c;
            e.arg_t = ti;
            e.arg_x = x;
            e.arg_y = y;
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      const double lhs = std::abs(mass[x]);
      if (lhs == 0.0) continue;
      const double rx = rho.values[x];
      for (auto& e : cert.qii_surface) {
        const double c = lhs * std::pow((t + rx) / t, e.delta2);
        if (c > e.c) {
          e.c = c;
          e.arg_t = ti;
          e.arg_x = x;
        }
      }
    }
  }

  // headline: the exponent combination with the smallest constant
  const auto* best_qi = &cert.qi_surface.front();
  for (const auto& e : cert.qi_surface)
    if (e.c < best_qi->c) best_qi = &e;
  cert.c_i = best_qi->c;
  cert.gamma = best_qi->gamma;
  cert.delta1 = best_qi->delta1;
  const auto* best_qii = &cert.qii_surface.front();
  for (const auto& e : cert.qii_surface)
    if (e.c < best_qii->c) best_qii = &e;
  cert.c_ii = best_qii->c;
  cert.delta2 = best_qii->delta2;
  return cert;
}

double verify_decay_certificate(const KernelFamily& family, const AdmissibleFn& rho,
                                const KernelDecayCertificate& cert) {
  const DiscreteSpace& space = family.space();
  const int n = family.n();
  double worst = 0.0;
  for (int ti = 0; ti < family.scales().count(); ++ti) {
    const double t = family.scales().t_values[ti];
    const Eigen::MatrixXd rows = family.kernel_rows(ti, cert.sampled_centers);
    const Eigen::VectorXd mass = family.mass_integral(ti);
    for (size_t r = 0; r < cert.sampled_centers.size(); ++r) {
      const int x = cert.sampled_centers[r];
      const double vt = space.ball_measure(x, t);
      const double rx = rho.values[x];
      for (int y = 0; y < n; ++y) {
        const double lhs = std::abs(rows(r, y));
        const double vxy = (x == y) ? 0.0 : space.vxy(x, y).value;
        const double d = space.distance(x, y);
        for (const auto& e : cert.qi_surface) {
          const double rhs = e.c / (vt + vxy) * std::pow(t / (t + d), e.gamma) *
                             std::pow(rx / (t + rx), e.delta1);
          if (rhs > 0) worst = std::max(worst, lhs / rhs);
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      const double rx = rho.values[x];
      for (const auto& e : cert.qii_surface) {
        const double rhs = e.c * std::pow(t / (t + rx), e.delta2);
        if (rhs > 0) worst = std::max(worst, std::abs(mass[x]) / rhs);
      }
    }
  }
  return worst;
}

}  // namespace locbmo
