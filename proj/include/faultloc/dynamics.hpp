#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "faultloc/linear_system.hpp"
#include "faultloc/signal.hpp"

namespace faultloc {

/// Open system dx/dt = f(x) + w with sensor outputs y_i = x_i, i in Z.
/// A missing Jacobian falls back to central finite differences.
struct DynamicModel {
    int dimension = 0;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> rhs;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // optional
    Eigen::VectorXd x0;
    std::vector<int> sensor_set;   // Z
    std::vector<int> ground_set;   // L
    std::string name;

    Eigen::MatrixXd jacobian_at(const Eigen::VectorXd& x) const;
    bool is_linear() const { return linear_matrix.size() > 0; }
    Eigen::MatrixXd linear_matrix;  // set for linear models (empty otherwise)
};

struct Trajectory {
    TimeGrid grid;
    Eigen::MatrixXd states;  // n_points x dimension
    Signal outputs;          // sensor channels, exact restriction of states
};

/// Default time resolution when only a horizon is given.
inline constexpr int kDefaultStepsPerUnitTime = 200;

/// Classical fixed-step RK4 for dx/dt = f(x) + B w(t), with w interpolated
/// linearly between grid samples. Throws NumericError with the first bad
/// step index if the state leaves the finite range.
Trajectory simulate(const DynamicModel& model, const Signal& input,
                    const TimeGrid& grid);

/// Closed-system run (w = 0).
Trajectory simulate(const DynamicModel& model, const TimeGrid& grid);

/// r(t) = y_data(t) - y0(t) with y0 the closed-system output on the same grid.
Signal residual(const DynamicModel& model, const Signal& y_data);

DynamicModel linear_model(const LinearSystem& sys);

/// The chaotic three-state convection system; default sensors {0, 2}
/// (variables x and z), ground set all states.
DynamicModel lorenz_model(double rho = 28.0, double sigma = 10.0,
                          double beta_param = 8.0 / 3.0,
                          Eigen::Vector3d x0 = {1.0, 1.0, 1.0});

/// Same system with the bilinear terms removed from the second and third
/// equations; used as the deliberately wrong model whose error is the pair
/// (-x y, x y).
DynamicModel lorenz_linearized(double rho = 28.0, double sigma = 10.0,
                               double beta_param = 8.0 / 3.0,
                               Eigen::Vector3d x0 = {1.0, 1.0, 1.0});

/// Built-in registry: "lorenz", "lorenz-linear". Anything else is read as a
/// linear-system JSON file path.
DynamicModel model_by_name(const std::string& name_or_path);

} // namespace faultloc
