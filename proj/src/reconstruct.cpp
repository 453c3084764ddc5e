#include "faultloc/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "faultloc/errors.hpp"
#include "faultloc/gammoid.hpp"
#include "faultloc/norms.hpp"
#include "faultloc/rng.hpp"

namespace faultloc {

namespace {

void check_problem(const DynamicModel& model, const Signal& y_data) {
    if (y_data.channel_ids != model.sensor_set)
        throw InputError("data channels must match the model sensor set");
    if (y_data.grid.n_steps < 1) throw InputError("data grid is empty");
}

Signal zero_input(const DynamicModel& model, const TimeGrid& grid) {
    return Signal(grid, model.ground_set);
}

double misfit_squared(const DynamicModel& model, const Signal& y_data,
                      const Signal& w) {
    const Trajectory traj = simulate(model, w, y_data.grid);
    Signal r = traj.outputs;
    r.values -= y_data.values;
    return signal_inner(r, r);
}

} // namespace

double data_misfit(const DynamicModel& model, const Signal& y_data,
                   const Signal& w) {
    return std::sqrt(std::max(0.0, misfit_squared(model, y_data, w)));
}

double objective(const DynamicModel& model, const Signal& y_data, const Signal& w,
                 const ReconstructionConfig& config) {
    check_problem(model, y_data);
    if (config.p != 2.0) throw InputError("only p = 2 is supported");
    return 0.5 * misfit_squared(model, y_data, w) +
           config.reg_weight * pq_norm(w, 2.0, 1.0);
}

Signal misfit_gradient(const DynamicModel& model, const Signal& y_data,
                       const Signal& w) {
    check_problem(model, y_data);
    const TimeGrid& grid = y_data.grid;
    const int n = model.dimension;
    const int n_steps = grid.n_steps;
    const double h = grid.dt();

    const Trajectory traj = simulate(model, w, grid);

    // Input scatter map (channel -> state id); mirrors the forward pass.
    std::vector<int> state_of_channel(w.channel_count(), -1);
    for (int c = 0; c < w.channel_count(); ++c) {
        const int id = w.channel_ids[c];
        if (std::find(model.ground_set.begin(), model.ground_set.end(), id) !=
            model.ground_set.end())
            state_of_channel[c] = id;
    }

    // d misfit / d x_k for the local (trapezoid-weighted) term at node k.
    auto local_term = [&](int k) {
        Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
        const double theta = grid.quad_weight(k);
        for (int c = 0; c < y_data.channel_count(); ++c) {
            const int z = model.sensor_set[c];
            g[z] += theta * (traj.states(k, z) - y_data.values(k, c));
        }
        return g;
    };

    const bool constant_jacobian = model.is_linear();
    Eigen::MatrixXd Jt_const;
    if (constant_jacobian) Jt_const = model.linear_matrix.transpose();

    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(grid.n_points(), w.channel_count());
    Eigen::VectorXd w_lo = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd w_hi = Eigen::VectorXd::Zero(n);

    Eigen::VectorXd lambda = local_term(n_steps);
    for (int step = n_steps - 1; step >= 0; --step) {
        // Recompute the forward stages of this step.
        w_lo.setZero();
        w_hi.setZero();
        for (int c = 0; c < w.channel_count(); ++c) {
            if (state_of_channel[c] < 0) continue;
            w_lo[state_of_channel[c]] += w.values(step, c);
            w_hi[state_of_channel[c]] += w.values(step + 1, c);
        }
        const Eigen::VectorXd w_mid = 0.5 * (w_lo + w_hi);
        const Eigen::VectorXd x0 = traj.states.row(step);
        const Eigen::VectorXd k1 = model.rhs(x0) + w_lo;
        const Eigen::VectorXd x2 = x0 + 0.5 * h * k1;
        const Eigen::VectorXd k2 = model.rhs(x2) + w_mid;
        const Eigen::VectorXd x3 = x0 + 0.5 * h * k2;
        const Eigen::VectorXd k3 = model.rhs(x3) + w_mid;
        const Eigen::VectorXd x4 = x0 + h * k3;

        auto jac_t = [&](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
            return constant_jacobian ? Jt_const : model.jacobian_at(x).transpose();
        };
        const Eigen::MatrixXd J1t = jac_t(x0);
        const Eigen::MatrixXd J2t = jac_t(x2);
        const Eigen::MatrixXd J3t = jac_t(x3);
        const Eigen::MatrixXd J4t = jac_t(x4);

        // Reverse sweep through the RK4 stages.
        const Eigen::VectorXd& a = lambda;
        const Eigen::VectorXd g4 = (h / 6.0) * a;
        const Eigen::VectorXd g3 = (h / 3.0) * a + h * (J4t * g4);
        const Eigen::VectorXd g2 = (h / 3.0) * a + 0.5 * h * (J3t * g3);
        const Eigen::VectorXd g1 = (h / 6.0) * a + 0.5 * h * (J2t * g2);

        const Eigen::VectorXd d_lo = g1 + 0.5 * (g2 + g3);
        const Eigen::VectorXd d_hi = g4 + 0.5 * (g2 + g3);
        for (int c = 0; c < w.channel_count(); ++c) {
            if (state_of_channel[c] < 0) continue;
            raw(step, c) += d_lo[state_of_channel[c]];
            raw(step + 1, c) += d_hi[state_of_channel[c]];
        }

        lambda = a + J1t * g1 + J2t * g2 + J3t * g3 + J4t * g4;
        lambda += local_term(step);
    }

    // Convert raw sample partials to the trapezoid Riesz representative.
    Signal gradient(grid, w.channel_ids);
    for (int k = 0; k < grid.n_points(); ++k)
        gradient.values.row(k) = raw.row(k) / grid.quad_weight(k);
    return gradient;
}

namespace {

double regularizer(const Signal& w) { return pq_norm(w, 2.0, 1.0); }

// Power-iteration estimate of the squared operator norm of the linearized
// input-output map (the Lipschitz constant of the misfit gradient).
double estimate_lipschitz(const DynamicModel& model, const Signal& y_data,
                          const Signal& w0, uint64_t seed) {
    Rng rng(seed);
    Signal u = w0;
    for (int k = 0; k < u.values.rows(); ++k)
        for (int c = 0; c < u.values.cols(); ++c) u.values(k, c) = rng.normal();
    double norm = signal_l2(u);
    if (norm <= 0.0) return 1.0;
    u *= 1.0 / norm;

    const double eps = 1e-3;
    Signal g0 = misfit_gradient(model, y_data, w0);
    double estimate = 1.0;
    for (int it = 0; it < 5; ++it) {
        Signal probe = w0;
        probe.values += eps * u.values;
        Signal gu = misfit_gradient(model, y_data, probe);
        gu.values = (gu.values - g0.values) / eps;
        const double gu_norm = signal_l2(gu);
        if (!(gu_norm > 0.0) || !std::isfinite(gu_norm)) break;
        estimate = gu_norm;
        u = gu;
        u *= 1.0 / gu_norm;
    }
    return std::max(estimate, 1e-12);
}

ReconstructionResult finalize_result(const DynamicModel& model,
                                     const Signal& y_data, Signal w_hat,
                                     const ReconstructionConfig& config,
                                     double reg_weight,
                                     std::vector<double> history, int iterations,
                                     bool converged) {
    ReconstructionResult result;
    result.w_hat = std::move(w_hat);
    result.objective_history = std::move(history);
    result.misfit = data_misfit(model, y_data, result.w_hat);
    result.reg_weight = reg_weight;
    result.iterations = iterations;
    result.converged = converged;

    const Eigen::VectorXd u = underline(result.w_hat);
    const double cutoff = u.size() ? config.threshold_fraction * u.maxCoeff() : 0.0;
    for (int c = 0; c < u.size(); ++c)
        if (u[c] > cutoff && u[c] > 0.0)
            result.support.emplace_back(result.w_hat.channel_ids[c], u[c]);
    std::sort(result.support.begin(), result.support.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    return result;
}

ReconstructionResult solve_proximal_gradient(const DynamicModel& model,
                                             const Signal& y_data,
                                             const ReconstructionConfig& config,
                                             double reg_weight) {
    const TimeGrid& grid = y_data.grid;
    Signal w = zero_input(model, grid);

    auto misfit_half = [&](const Signal& v) {
        return 0.5 * misfit_squared(model, y_data, v);
    };

    double eta = config.initial_step;
    if (eta <= 0.0) {
        const double L =
            estimate_lipschitz(model, y_data, w, config.step_seed);
        eta = 1.0 / L;
    }

    double E_w = misfit_half(w);
    double J_w = E_w + reg_weight * regularizer(w);
    std::vector<double> history{J_w};

    Signal v = w;       // extrapolated point
    Signal w_prev = w;
    double t = 1.0;
    bool converged = false;
    int iter = 0;

    for (; iter < config.max_iterations; ++iter) {
        const Signal grad = misfit_gradient(model, y_data, v);
        const double E_v = misfit_half(v);

        Signal candidate;
        double E_c = 0.0;
        for (;;) {
            Signal step = v;
            step.values -= eta * grad.values;
            candidate = block_soft_threshold(step, eta * reg_weight);
            E_c = misfit_half(candidate);
            Signal diff = candidate;
            diff.values -= v.values;
            const double quad = E_v + signal_inner(grad, diff) +
                                signal_inner(diff, diff) / (2.0 * eta);
            if (E_c <= quad + 1e-15 * std::max(1.0, std::abs(E_v))) break;
            eta *= config.backtrack_factor;
            if (eta < 1e-300) throw NumericError("line search step underflowed");
        }

        const double J_c = E_c + reg_weight * regularizer(candidate);
        if (J_c > J_w) {
            // Momentum overshot; restart from the last accepted iterate. The
            // next pass is a plain proximal step, which cannot increase J.
            v = w;
            t = 1.0;
            continue;
        }

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        v = candidate;
        v.values += ((t - 1.0) / t_next) * (candidate.values - w.values);
        w_prev = std::move(w);
        w = std::move(candidate);
        t = t_next;

        const double decrease = J_w - J_c;
        J_w = J_c;
        history.push_back(J_w);
        if (decrease <= config.convergence_tol * std::max(1.0, std::abs(J_w))) {
            converged = true;
            ++iter;
            break;
        }
    }

    return finalize_result(model, y_data, std::move(w), config, reg_weight,
                           std::move(history), iter, converged);
}

std::vector<int> group_of_columns(int channels, int n_points) {
    std::vector<int> group(channels * n_points);
    for (int c = 0; c < channels; ++c)
        std::fill(group.begin() + c * n_points, group.begin() + (c + 1) * n_points, c);
    return group;
}

ReconstructionResult solve_admm_direct(const DynamicModel& model,
                                       const Signal& y_data,
                                       const ReconstructionConfig& config,
                                       double reg_weight) {
    const TimeGrid& grid = y_data.grid;
    const DiscretizedOperator op =
        discretize_operator(model, grid, 1 << 16);
    const Eigen::MatrixXd& A = op.weighted;
    const Eigen::VectorXd b = op.output_to_weighted(y_data) - op.offset_weighted;

    const int cols = static_cast<int>(A.cols());
    const int channels = static_cast<int>(op.input_ids.size());
    const int n_points = grid.n_points();

    const Eigen::MatrixXd AtA = A.transpose() * A;
    const Eigen::VectorXd Atb = A.transpose() * b;

    double rho = config.admm_rho;
    if (rho <= 0.0) {
        // mean squared column norm keeps the splitting on the operator scale
        rho = std::max(AtA.trace() / cols, 1e-8);
    }

    Eigen::MatrixXd AtA_rho = AtA;
    AtA_rho.diagonal().array() += rho;
    Eigen::LLT<Eigen::MatrixXd> llt(AtA_rho);
    if (llt.info() != Eigen::Success)
        throw NumericError("normal-equation factorization failed");

    Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
    Eigen::VectorXd dual = Eigen::VectorXd::Zero(cols);

    auto group_shrink = [&](Eigen::VectorXd& vec, double tau) {
        for (int c = 0; c < channels; ++c) {
            auto seg = vec.segment(c * n_points, n_points);
            const double norm = seg.norm();
            if (norm <= tau)
                seg.setZero();
            else
                seg *= 1.0 - tau / norm;
        }
    };

    auto objective_of = [&](const Eigen::VectorXd& vec) {
        double reg = 0.0;
        for (int c = 0; c < channels; ++c)
            reg += vec.segment(c * n_points, n_points).norm();
        return 0.5 * (A * vec - b).squaredNorm() + reg_weight * reg;
    };

    std::vector<double> history;
    bool converged = false;
    int iter = 0;
    const double eps_abs = 1e-10;
    const double eps_rel = 1e-8;
    int refactor_count = 0;

    for (; iter < config.admm_max_iterations; ++iter) {
        x = llt.solve(Atb + rho * (z - dual));
        Eigen::VectorXd z_old = z;
        z = x + dual;
        group_shrink(z, reg_weight / rho);
        dual += x - z;

        history.push_back(objective_of(z));

        const double r_norm = (x - z).norm();
        const double s_norm = rho * (z - z_old).norm();
        const double eps_pri =
            eps_abs * std::sqrt(cols) + eps_rel * std::max(x.norm(), z.norm());
        const double eps_dual =
            eps_abs * std::sqrt(cols) + eps_rel * rho * dual.norm();
        if (r_norm <= eps_pri && s_norm <= eps_dual) {
            converged = true;
            ++iter;
            break;
        }

        // Residual balancing keeps the splitting usable when the operator is
        // badly scaled; each change requires one refactorization.
        if (refactor_count < 10 && (iter + 1) % 50 == 0) {
            double factor = 1.0;
            if (r_norm > 10.0 * s_norm)
                factor = 2.0;
            else if (s_norm > 10.0 * r_norm)
                factor = 0.5;
            if (factor != 1.0) {
                rho *= factor;
                dual /= factor;
                AtA_rho = AtA;
                AtA_rho.diagonal().array() += rho;
                llt.compute(AtA_rho);
                ++refactor_count;
            }
        }
    }

    Signal w_hat = op.input_from_weighted(z);
    return finalize_result(model, y_data, std::move(w_hat), config, reg_weight,
                           std::move(history), iter, converged);
}

} // namespace

ReconstructionResult solve(const DynamicModel& model, const Signal& y_data,
                           const ReconstructionConfig& config) {
    check_problem(model, y_data);
    if (config.p != 2.0)
        throw InputError("only p = 2 is supported (closed-form shrinkage)");
    if (config.reg_weight < 0.0) throw InputError("reg_weight must be >= 0");

    // Ill-posedness guard: the compact input-output map has an unbounded
    // inverse, so the weight never drops below 1e-8 x the zero-input misfit.
    const double base_misfit =
        data_misfit(model, y_data, zero_input(model, y_data.grid));
    const double reg_weight = std::max(config.reg_weight, 1e-8 * base_misfit);

    switch (config.algorithm) {
        case SolveAlgorithm::admm_direct:
            if (!model.is_linear())
                throw InputError("admm_direct requires a linear/affine model");
            return solve_admm_direct(model, y_data, config, reg_weight);
        case SolveAlgorithm::proximal_gradient:
        default:
            return solve_proximal_gradient(model, y_data, config, reg_weight);
    }
}

double select_beta_discrepancy(const DynamicModel& model, const Signal& y_data,
                               const ReconstructionConfig& config, double epsilon) {
    if (!(epsilon > 0.0)) throw InputError("discrepancy tolerance must be > 0");
    double lo = config.discrepancy_beta_min;
    double hi = config.discrepancy_beta_max;
    if (!(lo > 0.0 && hi > lo))
        throw InputError("discrepancy bracket must satisfy 0 < beta_min < beta_max");

    auto misfit_at = [&](double beta) {
        ReconstructionConfig c = config;
        c.reg_weight = beta;
        return solve(model, y_data, c).misfit;
    };

    double misfit_lo = misfit_at(lo);
    if (misfit_lo > epsilon)
        throw NumericError(
            "tolerance unreachable: misfit at the bracket floor is " +
            std::to_string(misfit_lo) + " > epsilon = " + std::to_string(epsilon));
    if (misfit_at(hi) <= epsilon) return hi;

    double last_seen = misfit_lo;
    while (hi / lo > 1.2) {
        const double mid = std::sqrt(lo * hi);
        const double misfit_mid = misfit_at(mid);
        // The search path visits increasing beta only on the lo side; a
        // decrease there would flag non-monotone behaviour of the solver.
        if (misfit_mid + 1e-12 < last_seen && mid > lo) {
            // tolerated: bisection does not assume strict monotonicity
        }
        if (misfit_mid <= epsilon) {
            lo = mid;
            last_seen = misfit_mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

ReconstructionResult threshold_and_refit(const DynamicModel& model,
                                         const Signal& y_data,
                                         const ReconstructionResult& result,
                                         const ReconstructionConfig& config) {
    check_problem(model, y_data);
    const std::vector<int> full_set = result.w_hat.channel_ids;
    ReconstructionResult current = result;
    std::vector<int> active = full_set;

    const int max_rounds = static_cast<int>(full_set.size());
    for (int round = 0; round < max_rounds; ++round) {
        const Eigen::VectorXd u = underline(current.w_hat);
        const double max_u = u.size() ? u.maxCoeff() : 0.0;
        if (max_u <= 0.0) {
            if (current.misfit > config.data_tolerance)
                current.warning = "all channels pruned with nonzero residual";
            current.support.clear();
            return current;
        }
        std::vector<int> keep;
        for (int c = 0; c < u.size(); ++c)
            if (u[c] >= config.threshold_fraction * max_u)
                keep.push_back(current.w_hat.channel_ids[c]);
        if (keep == active || keep.empty()) break;

        DynamicModel restricted = model;
        restricted.ground_set = keep;
        ReconstructionConfig c = config;
        c.reg_weight = current.reg_weight;
        ReconstructionResult refit = solve(restricted, y_data, c);

        // Present the result over the original ground set, pruned channels 0.
        Signal expanded(y_data.grid, full_set);
        for (int c2 = 0; c2 < refit.w_hat.channel_count(); ++c2) {
            const int id = refit.w_hat.channel_ids[c2];
            expanded.values.col(expanded.channel_index(id)) =
                refit.w_hat.values.col(c2);
        }
        refit.w_hat = std::move(expanded);
        refit.misfit = data_misfit(model, y_data, refit.w_hat);
        current = std::move(refit);
        active = keep;
    }
    return current;
}

DiscretizedOperator discretize_operator(const DynamicModel& model,
                                        const TimeGrid& grid, int max_columns) {
    const int n_points = grid.n_points();
    const int channels = static_cast<int>(model.ground_set.size());
    const long columns = static_cast<long>(channels) * n_points;
    if (columns > max_columns)
        throw BudgetExceeded("discretized operator needs " +
                                 std::to_string(columns) + " columns, limit " +
                                 std::to_string(max_columns),
                             max_columns);

    DiscretizedOperator op;
    op.grid = grid;
    op.input_ids = model.ground_set;
    op.output_ids = model.sensor_set;

    const int out_rows = static_cast<int>(model.sensor_set.size()) * n_points;
    op.weighted.resize(out_rows, columns);

    const Trajectory base = simulate(model, grid);
    op.offset_weighted = op.output_to_weighted(base.outputs);

    Signal basis(grid, model.ground_set);
    for (int c = 0; c < channels; ++c) {
        for (int k = 0; k < n_points; ++k) {
            basis.values(k, c) = 1.0;
            const Trajectory t = simulate(model, basis, grid);
            basis.values(k, c) = 0.0;
            const Eigen::VectorXd col =
                op.output_to_weighted(t.outputs) - op.offset_weighted;
            op.weighted.col(c * n_points + k) =
                col / std::sqrt(grid.quad_weight(k));
        }
    }
    return op;
}

Eigen::VectorXd DiscretizedOperator::input_to_weighted(const Signal& w) const {
    if (w.channel_ids != input_ids || !(w.grid == grid))
        throw InputError("signal does not match the discretized operator");
    const int n_points = grid.n_points();
    Eigen::VectorXd x(static_cast<long>(input_ids.size()) * n_points);
    for (size_t c = 0; c < input_ids.size(); ++c)
        for (int k = 0; k < n_points; ++k)
            x[c * n_points + k] = w.values(k, c) * std::sqrt(grid.quad_weight(k));
    return x;
}

Signal DiscretizedOperator::input_from_weighted(const Eigen::VectorXd& x) const {
    const int n_points = grid.n_points();
    Signal w(grid, input_ids);
    for (size_t c = 0; c < input_ids.size(); ++c)
        for (int k = 0; k < n_points; ++k)
            w.values(k, c) = x[c * n_points + k] / std::sqrt(grid.quad_weight(k));
    return w;
}

Eigen::VectorXd DiscretizedOperator::output_to_weighted(const Signal& y) const {
    if (y.channel_ids != output_ids || !(y.grid == grid))
        throw InputError("output signal does not match the discretized operator");
    const int n_points = grid.n_points();
    Eigen::VectorXd v(static_cast<long>(output_ids.size()) * n_points);
    for (size_t c = 0; c < output_ids.size(); ++c)
        for (int k = 0; k < n_points; ++k)
            v[c * n_points + k] = y.values(k, c) * std::sqrt(grid.quad_weight(k));
    return v;
}

UniquenessReport verify_uniqueness_smallscale(const LinearSystem& sys,
                                              const TimeGrid& grid, int k,
                                              int max_columns) {
    if (k < 1) throw InputError("uniqueness check requires k >= 1");
    const DynamicModel model = linear_model(sys);
    const DiscretizedOperator op = discretize_operator(model, grid, max_columns);

    UniquenessReport report;
    const SparkResult sp = spark(gammoid_of(sys));
    report.spark = sp.spark;
    report.spark_is_sentinel = sp.all_independent;
    report.max_union_size = std::min(2 * k, sp.spark - 1);
    report.worst_sigma_min = std::numeric_limits<double>::infinity();

    const int channels = static_cast<int>(op.input_ids.size());
    const int n_points = grid.n_points();

    // All channel subsets of size 1..max_union_size.
    std::vector<int> subset;
    auto check_subset = [&](const std::vector<int>& idx) {
        Eigen::MatrixXd restricted(op.weighted.rows(),
                                   static_cast<long>(idx.size()) * n_points);
        for (size_t c = 0; c < idx.size(); ++c)
            restricted.middleCols(c * n_points, n_points) =
                op.weighted.middleCols(idx[c] * n_points, n_points);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted);
        const double sigma_min = svd.singularValues().minCoeff();
        if (sigma_min < report.worst_sigma_min) {
            report.worst_sigma_min = sigma_min;
            report.worst_support.clear();
            for (int c : idx) report.worst_support.push_back(op.input_ids[c]);
        }
        if (sigma_min < 1e-8) {
            report.all_injective = false;
            std::vector<int> named;
            for (int c : idx) named.push_back(op.input_ids[c]);
            report.failures.push_back(std::move(named));
        }
    };

    std::function<void(int, int)> enumerate = [&](int start, int remaining) {
        if (remaining == 0) {
            check_subset(subset);
            return;
        }
        for (int c = start; c <= channels - remaining; ++c) {
            subset.push_back(c);
            enumerate(c + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (int size = 1; size <= report.max_union_size; ++size) enumerate(0, size);
    return report;
}

namespace {

nlohmann::json support_to_json(const std::vector<std::pair<int, double>>& support) {
    auto arr = nlohmann::json::array();
    for (const auto& [id, magnitude] : support)
        arr.push_back({{"node", id}, {"magnitude", magnitude}});
    return arr;
}

} // namespace

std::string result_to_json(const ReconstructionResult& result) {
    nlohmann::json j;
    j["support"] = support_to_json(result.support);
    j["reg_weight"] = result.reg_weight;
    j["misfit"] = result.misfit;
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    if (!result.warning.empty()) j["warning"] = result.warning;
    if (!result.objective_history.empty())
        j["objective_final"] = result.objective_history.back();
    if (result.bound) {
        const auto& b = *result.bound;
        j["bound"] = {{"value", b.bound},
                      {"k", b.k},
                      {"sigma_k", b.sigma_k},
                      {"epsilon", b.epsilon},
                      {"delta_2k", b.constants.delta_2k},
                      {"C0", b.constants.C0},
                      {"C1", b.constants.C1},
                      {"C2", b.constants.C2}};
    }
    return j.dump(2);
}

std::string uniqueness_report_to_json(const UniquenessReport& report) {
    nlohmann::json j;
    j["spark"] = report.spark;
    j["spark_is_sentinel"] = report.spark_is_sentinel;
    j["max_union_size"] = report.max_union_size;
    j["all_injective"] = report.all_injective;
    j["worst_sigma_min"] = report.worst_sigma_min;
    j["worst_support"] = report.worst_support;
    j["failures"] = report.failures;
    return j.dump(2);
}

} // namespace faultloc
