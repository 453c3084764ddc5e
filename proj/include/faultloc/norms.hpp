#pragma once

#include <utility>

#include "faultloc/signal.hpp"

namespace faultloc {

/// Trapezoid approximation of (integral of |w|^p dt)^(1/p) over the grid.
double component_p_norm(const Eigen::VectorXd& channel, const TimeGrid& grid,
                        double p);

/// Vector of per-channel p-norms (one entry per channel, in channel order).
Eigen::VectorXd underline(const Signal& sig, double p = 2.0);

/// q-norm of the underline vector.
double pq_norm(const Signal& sig, double p = 2.0, double q = 1.0);

/// Number of underline entries above atol. atol < 0 selects the default
/// relative tolerance 1e-6 * max underline entry.
int zero_norm(const Signal& sig, double p = 2.0, double atol = -1.0);

/// Keep the k channels with largest underline entries, zero the rest.
/// Returns the truncated signal and the q-norm of the dropped entries.
std::pair<Signal, double> best_k_sparse(const Signal& sig, int k, double p = 2.0,
                                        double q = 1.0);

/// Channel-wise shrinkage w_i -> max(0, 1 - tau/|w_i|_2) * w_i with the
/// trapezoid L2 channel norm. Proximal map of tau * (sum of channel 2-norms).
/// Only p = 2 has this closed form.
Signal block_soft_threshold(const Signal& sig, double tau, double p = 2.0);

/// Trapezoid inner product of two signals (sum over channels of the
/// per-channel L2 pairing). Signals must share grid and channels.
double signal_inner(const Signal& a, const Signal& b);

/// sqrt(signal_inner(s, s)); the p=2, q=2 norm.
double signal_l2(const Signal& sig);

} // namespace faultloc
