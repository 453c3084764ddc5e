#include "faultloc/rip.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "faultloc/errors.hpp"
#include "faultloc/norms.hpp"
#include "faultloc/rng.hpp"

namespace faultloc {

RecoveryBoundReport recovery_bound(double delta_2k, int k, double sigma_k,
                                   double epsilon) {
    const double limit = std::sqrt(2.0) - 1.0;
    if (!(delta_2k >= 0.0 && delta_2k < limit))
        throw InputError("recovery bound requires 0 <= delta_2k < sqrt(2) - 1");
    if (k < 1) throw InputError("recovery bound requires k >= 1");

    RecoveryBoundConstants c;
    c.delta_2k = delta_2k;
    c.alpha = std::sqrt(2.0) * delta_2k / (1.0 - delta_2k);
    c.beta_const = 1.0 / (1.0 - delta_2k);
    c.C0 = 4.0 * c.alpha / (1.0 - c.alpha) + 2.0;
    c.C1 = 2.0 * c.beta_const / (1.0 - c.alpha);
    c.C2 = std::sqrt(1.0 + delta_2k) * c.C1;

    RecoveryBoundReport report;
    report.constants = c;
    report.k = k;
    report.sigma_k = sigma_k;
    report.epsilon = epsilon;
    report.bound = c.C0 * sigma_k / std::sqrt(static_cast<double>(k)) + c.C2 * epsilon;
    return report;
}

namespace {

// Smooth random channel: sum of three Gaussian bumps.
Eigen::VectorXd random_bump_channel(const TimeGrid& grid, Rng& rng) {
    Eigen::VectorXd channel = Eigen::VectorXd::Zero(grid.n_points());
    for (int b = 0; b < 3; ++b) {
        const double center = rng.uniform(0.1, 0.9) * grid.horizon;
        const double width = rng.uniform(0.05, 0.2) * grid.horizon;
        const double amplitude = rng.uniform(-1.0, 1.0);
        for (int k = 0; k < grid.n_points(); ++k) {
            const double z = (grid.time_at(k) - center) / width;
            channel[k] += amplitude * std::exp(-0.5 * z * z);
        }
    }
    return channel;
}

Signal random_sparse_signal(const TimeGrid& grid, const std::vector<int>& ids,
                            int sparsity, Rng& rng) {
    Signal sig(grid, ids);
    std::vector<int> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    // Fisher-Yates from the substream
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_index(i + 1)]);
    for (int c = 0; c < sparsity; ++c)
        sig.values.col(order[c]) = random_bump_channel(grid, rng);
    return sig;
}

} // namespace

RipEstimate estimate_rip_constant(
    const std::function<Signal(const Signal&)>& phi,
    const std::vector<int>& channel_ids, const TimeGrid& grid, int k,
    int n_samples, uint64_t seed) {
    const int m = static_cast<int>(channel_ids.size());
    if (k < 1 || 2 * k > m)
        throw InputError("RIP order requires 1 <= k <= channel_count/2");
    if (n_samples < 1) throw InputError("need at least one RIP sample");

    const Rng root(seed);

    // Median single-channel gain normalizes the operator; the defining
    // inequalities presume a scaling with constants near 1.
    std::vector<double> gains;
    for (int c = 0; c < m; ++c) {
        Rng stream = root.child(0x67A1 + c);
        Signal probe(grid, channel_ids);
        probe.values.col(c) = random_bump_channel(grid, stream);
        const double in_norm = underline(probe).norm();
        if (in_norm <= 0.0) continue;
        gains.push_back(underline(phi(probe)).norm() / in_norm);
    }
    if (gains.empty()) throw NumericError("operator has no responsive channel");
    std::sort(gains.begin(), gains.end());
    const double gain = gains[gains.size() / 2];
    if (!(gain > 0.0)) throw NumericError("median operator gain is zero");

    RipEstimate estimate;
    estimate.normalization = gain;

    // Sparsities 1..k all belong to the order-2k sample class; including all
    // of them makes delta_hat(k) nondecreasing in k by construction.
    double worst = 0.0;
    for (int sparsity = 1; sparsity <= k; ++sparsity) {
        for (int sample = 0; sample < n_samples; ++sample) {
            const uint64_t tag =
                0x52495000ULL + 1000003ULL * sparsity + static_cast<uint64_t>(sample);
            bool accepted = false;
            for (int retry = 0; retry < 10 && !accepted; ++retry) {
                Rng stream = root.child(tag * 31 + retry);
                const Signal u = random_sparse_signal(grid, channel_ids, sparsity, stream);
                const Signal v = random_sparse_signal(grid, channel_ids, sparsity, stream);
                const Eigen::VectorXd uu = underline(u);
                const Eigen::VectorXd uv = underline(v);
                const Eigen::VectorXd pu = underline(phi(u)) / gain;
                const Eigen::VectorXd pv = underline(phi(v)) / gain;

                const double diff_den = (uu - uv).squaredNorm();
                const double sum_den = (uu + uv).squaredNorm();
                if (diff_den <= 1e-24 || sum_den <= 1e-24) continue;  // degenerate

                const double diff_ratio = (pu - pv).squaredNorm() / diff_den;
                const double sum_ratio = (pu + pv).squaredNorm() / sum_den;
                worst = std::max({worst, std::abs(diff_ratio - 1.0),
                                  std::abs(sum_ratio - 1.0)});
                accepted = true;
            }
            if (accepted)
                ++estimate.samples_used;
            else
                ++estimate.samples_skipped;
        }
    }

    estimate.delta_hat = worst;
    estimate.premise_violated = worst >= std::sqrt(2.0) - 1.0;
    return estimate;
}

std::string rip_estimate_to_json(const RipEstimate& estimate, int k,
                                 int n_samples, uint64_t seed) {
    nlohmann::json j;
    j["delta_hat"] = estimate.delta_hat;
    j["k"] = k;
    j["n_samples"] = n_samples;
    j["seed"] = seed;
    j["normalization"] = estimate.normalization;
    j["premise_violated"] = estimate.premise_violated;
    j["samples_used"] = estimate.samples_used;
    j["samples_skipped"] = estimate.samples_skipped;
    j["note"] = "sampled lower-bound estimate of delta_2k; not a certificate";
    return j.dump(2);
}

} // namespace faultloc
