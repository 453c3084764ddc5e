#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "faultloc/signal.hpp"

namespace faultloc {

/// Constants of the recovery error bound, all derived from delta = delta_2k:
///   alpha      = sqrt(2) delta / (1 - delta)
///   beta_const = 1 / (1 - delta)
///   C0         = 4 alpha / (1 - alpha) + 2
///   C1         = 2 beta_const / (1 - alpha)
///   C2         = sqrt(1 + delta) C1
/// Finite and positive whenever delta < sqrt(2) - 1.
struct RecoveryBoundConstants {
    double delta_2k = 0.0;
    double alpha = 0.0;
    double beta_const = 1.0;
    double C0 = 2.0;
    double C1 = 2.0;
    double C2 = 2.0;
};

struct RecoveryBoundReport {
    RecoveryBoundConstants constants;
    double bound = 0.0;  // C0 * sigma_k / sqrt(k) + C2 * epsilon
    int k = 0;
    double sigma_k = 0.0;
    double epsilon = 0.0;
};

/// Throws InputError unless 0 <= delta_2k < sqrt(2) - 1 (the premise of the
/// error bound) and k >= 1.
RecoveryBoundReport recovery_bound(double delta_2k, int k, double sigma_k,
                                   double epsilon);

struct RipEstimate {
    double delta_hat = 0.0;
    double normalization = 1.0;      // median single-channel gain of phi
    bool premise_violated = false;   // delta_hat >= sqrt(2) - 1
    int samples_used = 0;
    int samples_skipped = 0;
};

/// Sampled lower-bound estimate of the order-2k restricted-isometry constant
/// of a linear map phi over signals with the given channel ids. Draws random
/// pairs of at-most-k-sparse smooth inputs and records the worst deviation of
/// the two defining ratios from 1, after normalizing phi by its median
/// single-channel gain. Samples cover every sparsity 1..k from seed-derived
/// substreams, so the estimate is nondecreasing in k for a fixed seed.
RipEstimate estimate_rip_constant(
    const std::function<Signal(const Signal&)>& phi,
    const std::vector<int>& channel_ids, const TimeGrid& grid, int k,
    int n_samples, uint64_t seed);

std::string rip_estimate_to_json(const RipEstimate& estimate, int k,
                                 int n_samples, uint64_t seed);

} // namespace faultloc
