#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace faultloc {

/// Uniform grid on [0, T] with n_steps intervals (n_steps + 1 points).
struct TimeGrid {
    double horizon = 1.0;
    int n_steps = 1;

    TimeGrid() = default;
    TimeGrid(double horizon, int n_steps);

    double dt() const { return horizon / n_steps; }
    int n_points() const { return n_steps + 1; }
    double time_at(int k) const { return horizon * k / n_steps; }

    /// Trapezoid quadrature weight of grid point k (dt at interior points,
    /// dt/2 at the ends).
    double quad_weight(int k) const;

    bool operator==(const TimeGrid& other) const {
        return horizon == other.horizon && n_steps == other.n_steps;
    }
};

/// Multi-component time series on a shared grid. Channel ids map to network
/// node ids; values column i holds channel channel_ids[i].
struct Signal {
    TimeGrid grid;
    std::vector<int> channel_ids;
    Eigen::MatrixXd values;  // n_points x channels

    Signal() = default;
    Signal(TimeGrid grid, std::vector<int> channel_ids);
    Signal(TimeGrid grid, std::vector<int> channel_ids, Eigen::MatrixXd values);

    int channel_count() const { return static_cast<int>(channel_ids.size()); }
    bool has_channel(int id) const;
    int channel_index(int id) const;  // throws if absent
    Eigen::VectorXd channel(int id) const;

    Signal& operator+=(const Signal& other);
    Signal& operator-=(const Signal& other);
    Signal& operator*=(double scale);
};

Signal operator+(Signal lhs, const Signal& rhs);
Signal operator-(Signal lhs, const Signal& rhs);
Signal operator*(double scale, Signal sig);

/// CSV with first column `t` and one column per channel named
/// `<prefix><id>`, e.g. w_6 or y_12. Values round-trip exactly
/// (17 significant digits).
void save_signal_csv(const Signal& sig, const std::string& path,
                     const std::string& prefix);
Signal load_signal_csv(const std::string& path);

} // namespace faultloc
