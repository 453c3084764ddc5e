#include "faultloc/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "faultloc/errors.hpp"

namespace faultloc {

double component_p_norm(const Eigen::VectorXd& channel, const TimeGrid& grid,
                        double p) {
    if (!(p >= 1.0)) throw InputError("p-norm requires p >= 1");
    if (channel.size() != grid.n_points())
        throw InputError("channel length does not match grid");
    double integral = 0.0;
    for (int k = 0; k < grid.n_points(); ++k)
        integral += grid.quad_weight(k) * std::pow(std::abs(channel[k]), p);
    return std::pow(integral, 1.0 / p);
}

Eigen::VectorXd underline(const Signal& sig, double p) {
    Eigen::VectorXd result(sig.channel_count());
    for (int c = 0; c < sig.channel_count(); ++c)
        result[c] = component_p_norm(sig.values.col(c), sig.grid, p);
    return result;
}

double pq_norm(const Signal& sig, double p, double q) {
    if (!(q >= 1.0)) throw InputError("p-q norm requires q >= 1");
    const Eigen::VectorXd u = underline(sig, p);
    double sum = 0.0;
    for (int c = 0; c < u.size(); ++c) sum += std::pow(u[c], q);
    return std::pow(sum, 1.0 / q);
}

int zero_norm(const Signal& sig, double p, double atol) {
    const Eigen::VectorXd u = underline(sig, p);
    if (atol < 0.0) atol = u.size() ? 1e-6 * u.maxCoeff() : 0.0;
    int count = 0;
    for (int c = 0; c < u.size(); ++c)
        if (u[c] > atol) ++count;
    return count;
}

std::pair<Signal, double> best_k_sparse(const Signal& sig, int k, double p,
                                        double q) {
    const int channels = sig.channel_count();
    if (k < 0 || k > channels)
        throw InputError("best_k_sparse: k must be in [0, channel count]");
    const Eigen::VectorXd u = underline(sig, p);
    std::vector<int> order(channels);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&u](int a, int b) { return u[a] > u[b]; });

    Signal truncated = sig;
    double dropped = 0.0;
    for (int r = k; r < channels; ++r) {
        truncated.values.col(order[r]).setZero();
        dropped += std::pow(u[order[r]], q);
    }
    return {std::move(truncated), std::pow(dropped, 1.0 / q)};
}

Signal block_soft_threshold(const Signal& sig, double tau, double p) {
    if (p != 2.0)
        throw InputError("block_soft_threshold has a closed form only for p = 2");
    if (tau < 0.0) throw InputError("threshold tau must be >= 0");
    Signal result = sig;
    for (int c = 0; c < sig.channel_count(); ++c) {
        const double norm = component_p_norm(sig.values.col(c), sig.grid, 2.0);
        if (norm <= tau)
            result.values.col(c).setZero();
        else
            result.values.col(c) *= 1.0 - tau / norm;
    }
    return result;
}

double signal_inner(const Signal& a, const Signal& b) {
    if (!(a.grid == b.grid) || a.channel_ids != b.channel_ids)
        throw InputError("signal_inner: mismatched grids or channels");
    double sum = 0.0;
    for (int k = 0; k < a.grid.n_points(); ++k)
        sum += a.grid.quad_weight(k) * a.values.row(k).dot(b.values.row(k));
    return sum;
}

double signal_l2(const Signal& sig) {
    return std::sqrt(std::max(0.0, signal_inner(sig, sig)));
}

} // namespace faultloc
