#pragma once

#include <Eigen/Dense>
#include <vector>

#include "locbmo/admissible.hpp"
#include "locbmo/space.hpp"

namespace locbmo {

/// Logarithmic quadrature grid for the dt/t integrals: midpoint rule in
/// log t over [t_min, t_max].
struct ScaleGrid {
  std::vector<double> t_values;
  std::vector<double> log_weights;
  double t_min = 0.0;
  double t_max = 0.0;

  static ScaleGrid logarithmic(double t_min, double t_max, int count);
  static ScaleGrid for_space(const DiscreteSpace& space, int count = 48);
  int count() const { return static_cast<int>(t_values.size()); }
};

/// L = -Delta_h + diag(V) on a 1D euclidean grid with uniform masses,
/// Dirichlet truncation at the window edge. Symmetric positive definite.
Eigen::MatrixXd schrodinger_generator(const DiscreteSpace& space, const Potential& v);

/// Semigroup-derivative family Q_t = t^2 d/ds e^{-sL} |_{s=t^2}
/// = -t^2 L e^{-t^2 L}, held spectrally. The kernel convention is
/// Q_t f(x) = sum_y Q_t(x,y) f(y) mu_y.
class KernelFamily {
 public:
  KernelFamily(DiscreteSpace space, Eigen::VectorXd eigenvalues, Eigen::MatrixXd basis,
               ScaleGrid grid);

  const DiscreteSpace& space() const { return space_; }
  const ScaleGrid& scales() const { return grid_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  int n() const { return static_cast<int>(eigenvalues_.size()); }

  static double multiplier(double t, double lambda) {
    const double u = t * t * lambda;
    return -u * std::exp(-u);
  }

  /// Largest |multiplier| over the spectrum at scale index ti (L2 operator
  /// norm of Q_t).
  double multiplier_bound(int ti) const;

  /// Q_t f as an operator on function vectors.
  Eigen::VectorXd apply(int ti, const Eigen::VectorXd& f) const;
  /// Same with the basis transform c = U^T f precomputed.
  Eigen::VectorXd apply_coeff(int ti, const Eigen::VectorXd& c) const;

  /// Dense kernel matrix Q_t(x,y) (operator entries divided by mu_y).
  Eigen::MatrixXd kernel_matrix(int ti) const;
  /// Selected kernel rows Q_t(x, .) for the given centers.
  Eigen::MatrixXd kernel_rows(int ti, const std::vector<int>& centers) const;
  /// sum_z Q_t(x,z) mu_z for every x.
  Eigen::VectorXd mass_integral(int ti) const;

  /// e^{-sL} as a dense operator matrix (spectral).
  Eigen::MatrixXd heat_operator(double s) const;

 private:
  DiscreteSpace space_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd basis_;  // columns orthonormal
  ScaleGrid grid_;
};

KernelFamily build_qt_family(const Eigen::MatrixXd& L, const ScaleGrid& grid,
                             const DiscreteSpace& space);

struct KernelDecayCertificate {
  double c_i = 0.0;
  double gamma = 0.0;
  double delta1 = 0.0;
  double c_ii = 0.0;
  double delta2 = 0.0;
  struct QiEntry {
    double gamma, delta1, c;
    int arg_t, arg_x, arg_y;
  };
  struct QiiEntry {
    double delta2, c;
    int arg_t, arg_x;
  };
  std::vector<QiEntry> qi_surface;
  std::vector<QiiEntry> qii_surface;
  std::vector<int> sampled_centers;

  double qi_constant(double gamma, double delta1) const;
  double qii_constant(double delta2) const;
};

struct DecayOptions {
  std::vector<double> gammas = {0.5, 1.0, 2.0};
  std::vector<double> delta1s = {0.5, 1.0};
  std::vector<double> delta2s = {0.25, 0.5, 0.9};
  int center_budget = 96;
};

/// Fit the sup-ratio constants of the two kernel decay conditions over the
/// exponent grid; rows are sampled, columns and scales exhaustive.
KernelDecayCertificate decay_certificate(const KernelFamily& family,
                                         const AdmissibleFn& rho,
                                         const DecayOptions& opts = {});

/// Re-walk every sampled (t, x, y) / (t, x) and check the certificate
/// inequalities at the stored exponents. Returns the worst slack
/// (max lhs/rhs; sound certificates stay <= 1 + eps).
double verify_decay_certificate(const KernelFamily& family, const AdmissibleFn& rho,
                                const KernelDecayCertificate& cert);

}  // namespace locbmo
