#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "faultloc/linear_system.hpp"

namespace faultloc {

/// T(s) = C (sI - A)^{-1} B with B the ground-set column selector and C the
/// sensor row selector. Throws NumericError when sI - A is too close to
/// singular (s near an eigenvalue of A).
Eigen::MatrixXcd transfer_matrix(const LinearSystem& sys, std::complex<double> s);

/// Input Gramian G(s) = T(s)^H T(s); Hermitian positive semidefinite.
Eigen::MatrixXcd input_gramian(const LinearSystem& sys, std::complex<double> s);

/// |G_ij| / sqrt(G_ii G_jj) for ground-set indices i, j. Throws NumericError
/// naming the node when a diagonal entry vanishes (input influences no
/// sensor at this s).
double coherence(const LinearSystem& sys, std::complex<double> s, int i, int j);

/// Full coherence matrix at s (symmetric, unit diagonal).
Eigen::MatrixXd coherence_matrix(const LinearSystem& sys, std::complex<double> s);

/// max_{i != j} coherence(i, j); zero for a single input by convention.
double mutual_coherence(const LinearSystem& sys, std::complex<double> s);

/// Largest integer bound floor(1/mu_best + 1) over the evaluation points,
/// where mu_best is the smallest mutual coherence seen. When mu_best is at
/// machine tolerance the bound saturates at min(card(L), card(Z)) + 1, the
/// largest value the spark can take.
int spark_lower_bound(const LinearSystem& sys,
                      const std::vector<std::complex<double>>& eval_points);

/// Coherence surrogate from summed weights of all shortest paths in the
/// concatenated gammoid: entry (i, j) = |F(psi_ij)| / sqrt(F(psi_ii) F(psi_jj)),
/// 0 when no path from l_i to l_j' exists. Throws NumericError when a ground
/// node reaches no sensor (undefined diagonal).
Eigen::MatrixXd shortest_path_coherence(const LinearSystem& sys);

/// Strict diagonal dominance |G_ii| > sum_{j != i} |G_ij| for all i; an
/// invertibility certificate at one evaluation point.
bool diagonal_dominance_check(const Eigen::MatrixXcd& gramian);

/// Log-spaced real evaluation points 10^-1 .. 10^6 (25 by default).
std::vector<std::complex<double>> default_eval_points(int count = 25);

struct CoherenceReport {
    std::vector<std::complex<double>> eval_points;   // points actually used
    std::vector<double> mutual_coherence_per_point;
    Eigen::MatrixXd min_coherence;        // pointwise min across points
    Eigen::MatrixXd shortest_path;        // mu^short matrix
    int spark_lower_bound = 0;
    std::vector<std::string> warnings;    // dropped points etc.
};

/// Evaluate the coherence machinery over a grid. Ill-conditioned points are
/// nudged once by +1e-3 * (1 + |s|), then dropped with a warning.
CoherenceReport analyze_coherence(const LinearSystem& sys,
                                  std::vector<std::complex<double>> eval_points = {});

std::string coherence_report_to_json(const CoherenceReport& report,
                                     const std::vector<int>& ground_set);

/// L x L matrix as CSV with a header row of ground-set node ids.
void save_matrix_csv(const Eigen::MatrixXd& matrix,
                     const std::vector<int>& ground_set, const std::string& path);

} // namespace faultloc
