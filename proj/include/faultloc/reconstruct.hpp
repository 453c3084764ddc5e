#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faultloc/dynamics.hpp"
#include "faultloc/rip.hpp"
#include "faultloc/signal.hpp"

namespace faultloc {

enum class SolveAlgorithm {
    /// Accelerated proximal gradient with backtracking and objective restart.
    /// Default; scales to large channel-by-sample problems.
    proximal_gradient,
    /// Explicit discretized operator + ADMM with a cached factorization.
    /// Linear/affine models only, desk scale; robust when the model dynamics
    /// are unstable and the misfit is catastrophically ill-conditioned.
    admm_direct,
};

struct ReconstructionConfig {
    double reg_weight = 0.01;      // regularization constant of the fit functional
    double p = 2.0;                // channel norm exponent (only 2 supported)
    double q = 1.0;                // underline norm exponent
    double data_tolerance = 0.0;   // epsilon of the discrepancy criterion
    int max_iterations = 5000;
    double initial_step = 0.0;     // 0 => power-iteration estimate
    double backtrack_factor = 0.5;
    double convergence_tol = 1e-8;       // relative objective decrease
    double threshold_fraction = 0.1;     // support pruning, fraction of max underline
    double discrepancy_beta_min = 1e-6;  // bracket for the reg-weight search
    double discrepancy_beta_max = 1e2;
    SolveAlgorithm algorithm = SolveAlgorithm::proximal_gradient;
    int admm_max_iterations = 4000;
    double admm_rho = 0.0;         // 0 => scale from the operator
    uint64_t step_seed = 20240001; // power-iteration start vector
};

struct ReconstructionResult {
    Signal w_hat;                        // always spans the requested ground set
    std::vector<std::pair<int, double>> support;  // node id, underline magnitude
    std::vector<double> objective_history;
    double misfit = 0.0;                 // ||Phi(w_hat) - y_data||_2 (p=q=2)
    double reg_weight = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string warning;
    std::optional<RecoveryBoundReport> bound;
};

/// J[w] = 1/2 ||Phi(w) - y_data||_2^2 + reg_weight * ||w||_{2,1}.
double objective(const DynamicModel& model, const Signal& y_data, const Signal& w,
                 const ReconstructionConfig& config);

/// Gradient of the misfit term 1/2 ||Phi(w) - y_data||_2^2 with respect to w,
/// as a signal in the trapezoid inner product (the partial derivative with
/// respect to sample (n, c) equals value * quad_weight(n)). Exact for the
/// RK4 + linear-interpolation discretization: the backward sweep
/// differentiates the integrator stages rather than the continuous dynamics.
Signal misfit_gradient(const DynamicModel& model, const Signal& y_data,
                       const Signal& w);

/// Misfit ||Phi(w) - y_data||_2 recomputed from a fresh simulation.
double data_misfit(const DynamicModel& model, const Signal& y_data, const Signal& w);

/// Minimize J over inputs supported on the model's ground set, starting from
/// w = 0. Deterministic for fixed inputs. Non-convergence at max_iterations
/// returns converged = false rather than throwing.
ReconstructionResult solve(const DynamicModel& model, const Signal& y_data,
                           const ReconstructionConfig& config);

/// Discrepancy principle: largest reg_weight (within a factor-1.2 bracket)
/// whose solve misfit still meets epsilon. Log-bisection over
/// [discrepancy_beta_min, discrepancy_beta_max]. Throws NumericError when the
/// tolerance is unreachable even at the bracket floor.
double select_beta_discrepancy(const DynamicModel& model, const Signal& y_data,
                               const ReconstructionConfig& config, double epsilon);

/// Freeze channels whose underline is below threshold_fraction * max to zero
/// and re-solve over the remaining channels, iterating until the support is
/// stable. Never increases the data misfit beyond config.data_tolerance.
ReconstructionResult threshold_and_refit(const DynamicModel& model,
                                         const Signal& y_data,
                                         const ReconstructionResult& result,
                                         const ReconstructionConfig& config);

std::string result_to_json(const ReconstructionResult& result);

/// Explicit dense discretization of the input-output map on a grid: an
/// isometry from trapezoid-weighted input samples to trapezoid-weighted
/// output samples. Columns are grouped by channel (channel c occupies columns
/// c*n_points .. (c+1)*n_points-1).
struct DiscretizedOperator {
    TimeGrid grid;
    std::vector<int> input_ids;
    std::vector<int> output_ids;
    Eigen::MatrixXd weighted;          // (P n) x (M n)
    Eigen::VectorXd offset_weighted;   // response to w = 0, weighted

    Eigen::VectorXd input_to_weighted(const Signal& w) const;
    Signal input_from_weighted(const Eigen::VectorXd& x) const;
    Eigen::VectorXd output_to_weighted(const Signal& y) const;
};

/// Build the dense operator by simulating one basis input per channel sample.
/// Throws BudgetExceeded when channels * n_points exceeds max_columns.
DiscretizedOperator discretize_operator(const DynamicModel& model,
                                        const TimeGrid& grid,
                                        int max_columns = 5000);

struct UniquenessReport {
    int spark = 0;
    bool spark_is_sentinel = false;
    int max_union_size = 0;             // union sizes actually checked
    bool all_injective = true;
    double worst_sigma_min = 0.0;
    std::vector<int> worst_support;
    /// Supports whose restricted operator is rank-deficient (sigma_min below
    /// the 1e-8 gate), smallest first; a failing pair names its two channels.
    std::vector<std::vector<int>> failures;
};

/// Desk-scale check of the unique-localization premise: every support union
/// of size <= min(2k, spark - 1) must index an injective restriction of the
/// discretized operator.
UniquenessReport verify_uniqueness_smallscale(const LinearSystem& sys,
                                              const TimeGrid& grid, int k,
                                              int max_columns = 5000);

std::string uniqueness_report_to_json(const UniquenessReport& report);

} // namespace faultloc
