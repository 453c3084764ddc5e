#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "faultloc/graph.hpp"

namespace faultloc {

/// Linear dynamics dx/dt = A x + w with sensor outputs y_i = x_i for i in the
/// sensor set. The ground set lists the states that may receive inputs; its
/// ordering fixes the transfer-matrix column order.
struct LinearSystem {
    Eigen::MatrixXd A;
    std::vector<int> sensor_set;   // Z, rows of the transfer matrix
    std::vector<int> ground_set;   // L, columns of the transfer matrix
    Eigen::VectorXd x0;

    LinearSystem() = default;
    LinearSystem(Eigen::MatrixXd A, std::vector<int> sensors,
                 std::vector<int> ground, Eigen::VectorXd x0 = {});

    int dimension() const { return static_cast<int>(A.rows()); }
    int input_count() const { return static_cast<int>(ground_set.size()); }
    int sensor_count() const { return static_cast<int>(sensor_set.size()); }
};

/// Edge j->i with weight A(i,j) for every nonzero entry.
InfluenceGraph influence_graph(const Eigen::MatrixXd& A);

/// The system's gammoid (ground set, influence graph of A, sensor set).
Gammoid gammoid_of(const LinearSystem& sys);

/// Model JSON: {"A": [[row0...], ...], "x0": [...], "output_set": [...],
/// "ground_set": [...]}. Missing ground_set means all states.
LinearSystem linear_system_from_json(const std::string& text);
std::string linear_system_to_json(const LinearSystem& sys);
LinearSystem load_linear_system(const std::string& path);
void save_linear_system(const LinearSystem& sys, const std::string& path);

} // namespace faultloc
