#include "faultloc/dynamics.hpp"

#include <cmath>

#include "faultloc/errors.hpp"

namespace faultloc {

Eigen::MatrixXd DynamicModel::jacobian_at(const Eigen::VectorXd& x) const {
    if (jacobian) return jacobian(x);
    // Central finite differences, step scaled per coordinate.
    const int n = dimension;
    Eigen::MatrixXd J(n, n);
    Eigen::VectorXd probe = x;
    for (int j = 0; j < n; ++j) {
        const double h = 1e-6 * (1.0 + std::abs(x[j]));
        probe[j] = x[j] + h;
        const Eigen::VectorXd fp = rhs(probe);
        probe[j] = x[j] - h;
        const Eigen::VectorXd fm = rhs(probe);
        probe[j] = x[j];
        J.col(j) = (fp - fm) / (2.0 * h);
    }
    return J;
}

namespace {

// Scatter input channels into state coordinates; channels must lie in the
// ground set unless identically zero.
struct InputMap {
    std::vector<int> state_of_channel;

    InputMap(const DynamicModel& model, const Signal& input) {
        for (int c = 0; c < input.channel_count(); ++c) {
            const int id = input.channel_ids[c];
            const bool in_ground =
                std::find(model.ground_set.begin(), model.ground_set.end(), id) !=
                model.ground_set.end();
            if (!in_ground) {
                if (input.values.col(c).cwiseAbs().maxCoeff() > 0.0)
                    throw InputError("input channel " + std::to_string(id) +
                                     " is outside the ground set and not zero");
                state_of_channel.push_back(-1);
                continue;
            }
            if (id < 0 || id >= model.dimension)
                throw InputError("input channel id out of range");
            state_of_channel.push_back(id);
        }
    }

    void scatter(const Eigen::RowVectorXd& w_row, Eigen::VectorXd& into) const {
        into.setZero();
        for (size_t c = 0; c < state_of_channel.size(); ++c)
            if (state_of_channel[c] >= 0) into[state_of_channel[c]] += w_row[c];
    }
};

} // namespace

Trajectory simulate(const DynamicModel& model, const Signal& input,
                    const TimeGrid& grid) {
    if (input.channel_count() > 0 && !(input.grid == grid))
        throw InputError("input signal grid does not match simulation grid");

    const int n = model.dimension;
    const double h = grid.dt();
    const InputMap map(model, input);

    Eigen::MatrixXd states(grid.n_points(), n);
    Eigen::VectorXd x = model.x0;
    states.row(0) = x;

    Eigen::VectorXd w_lo = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd w_hi = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd w_mid(n), k1(n), k2(n), k3(n), k4(n);

    for (int step = 0; step < grid.n_steps; ++step) {
        if (input.channel_count() > 0) {
            map.scatter(input.values.row(step), w_lo);
            map.scatter(input.values.row(step + 1), w_hi);
        }
        w_mid = 0.5 * (w_lo + w_hi);

        k1 = model.rhs(x) + w_lo;
        k2 = model.rhs(x + 0.5 * h * k1) + w_mid;
        k3 = model.rhs(x + 0.5 * h * k2) + w_mid;
        k4 = model.rhs(x + h * k3) + w_hi;
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!x.allFinite())
            throw NumericError("integration blew up at step " +
                               std::to_string(step + 1) + " (t = " +
                               std::to_string(grid.time_at(step + 1)) + ")");
        states.row(step + 1) = x;
    }

    Signal outputs(grid, model.sensor_set);
    for (int c = 0; c < outputs.channel_count(); ++c)
        outputs.values.col(c) = states.col(model.sensor_set[c]);
    return {grid, std::move(states), std::move(outputs)};
}

Trajectory simulate(const DynamicModel& model, const TimeGrid& grid) {
    return simulate(model, Signal(grid, {}), grid);
}

Signal residual(const DynamicModel& model, const Signal& y_data) {
    if (y_data.channel_ids != model.sensor_set)
        throw InputError("data channels must match the model sensor set");
    const Trajectory closed = simulate(model, y_data.grid);
    Signal r = y_data;
    r.values -= closed.outputs.values;
    return r;
}

DynamicModel linear_model(const LinearSystem& sys) {
    DynamicModel model;
    model.dimension = sys.dimension();
    const Eigen::MatrixXd A = sys.A;
    model.rhs = [A](const Eigen::VectorXd& x) -> Eigen::VectorXd { return A * x; };
    model.jacobian = [A](const Eigen::VectorXd&) -> Eigen::MatrixXd { return A; };
    model.linear_matrix = A;
    model.x0 = sys.x0;
    model.sensor_set = sys.sensor_set;
    model.ground_set = sys.ground_set;
    model.name = "linear";
    return model;
}

DynamicModel lorenz_model(double rho, double sigma, double beta_param,
                          Eigen::Vector3d x0) {
    DynamicModel model;
    model.dimension = 3;
    // Both bilinear terms couple x and y; the pair (-x y, x y) is exactly the
    // error the linearized variant incurs.
    model.rhs = [=](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        Eigen::VectorXd d(3);
        d[0] = sigma * (v[1] - v[0]);
        d[1] = -v[0] * v[1] + rho * v[0] - v[1];
        d[2] = v[0] * v[1] - beta_param * v[2];
        return d;
    };
    model.jacobian = [=](const Eigen::VectorXd& v) -> Eigen::MatrixXd {
        Eigen::MatrixXd J(3, 3);
        J << -sigma, sigma, 0.0,
             rho - v[1], -v[0] - 1.0, 0.0,
             v[1], v[0], -beta_param;
        return J;
    };
    model.x0 = x0;
    model.sensor_set = {0, 2};
    model.ground_set = {0, 1, 2};
    model.name = "lorenz";
    return model;
}

DynamicModel lorenz_linearized(double rho, double sigma, double beta_param,
                               Eigen::Vector3d x0) {
    Eigen::MatrixXd A(3, 3);
    A << -sigma, sigma, 0.0,
         rho, -1.0, 0.0,
         0.0, 0.0, -beta_param;
    LinearSystem sys(A, {0, 2}, {0, 1, 2}, x0);
    DynamicModel model = linear_model(sys);
    model.name = "lorenz-linear";
    return model;
}

DynamicModel model_by_name(const std::string& name_or_path) {
    if (name_or_path == "lorenz") return lorenz_model();
    if (name_or_path == "lorenz-linear") return lorenz_linearized();
    return linear_model(load_linear_system(name_or_path));
}

} // namespace faultloc
