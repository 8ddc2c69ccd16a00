#pragma once

#include <string>
#include <vector>

#include "locbmo/kernels.hpp"
#include "locbmo/norms.hpp"

namespace locbmo {

enum class SquareFunctionKind { G, LusinArea, GLambdaStar };

struct SquareFunctionResult {
  std::vector<double> values;
  SquareFunctionKind kind = SquareFunctionKind::G;
  double lambda = 0.0;  // only meaningful for GLambdaStar
  std::pair<double, double> truncation{0.0, 0.0};
};

/// Vertical square function: per-point sqrt of sum_t |Q_t f(x)|^2 dlog t.
SquareFunctionResult g_function(const KernelFamily& family,
                                const std::vector<double>& f);

/// Conical square function over the cone d(x,y) < t with dmu(y)/V_t(y).
SquareFunctionResult lusin_area(const KernelFamily& family,
                                const std::vector<double>& f);

/// Globally weighted square function with weight (t/(t+d(x,y)))^lambda.
SquareFunctionResult g_lambda_star(const KernelFamily& family,
                                   const std::vector<double>& f, double lambda);

double l2_norm(const DiscreteSpace& space, const std::vector<double>& f);

struct ExperimentRow {
  std::string function_id;
  double lambda = 0.0;  // 0 for the S rows
  std::string norm_kind;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool outside_hypothesis = false;  // lambda <= 3n rows
};

struct NamedFunction {
  std::string id;
  std::vector<double> values;
};

struct BoundednessExperiment {
  std::vector<ExperimentRow> rows;
  std::vector<std::string> skipped;  // zero-norm functions
  double max_ratio = 0.0;
};

/// For each suite function and each lambda, the BLO-over-BMO ratios whose
/// uniform boundedness the experiment probes; lambda <= 3n rows are emitted
/// but flagged as outside the supported exponent range.
BoundednessExperiment boundedness_experiment(const DiscreteSpace& space,
                                             const KernelFamily& family,
                                             const BallFamily& norm_family,
                                             const std::vector<NamedFunction>& suite,
                                             const std::vector<double>& lambda_list,
                                             double upper_dimension_n, double q = 1.0);

}  // namespace locbmo
