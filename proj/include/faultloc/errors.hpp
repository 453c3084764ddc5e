#pragma once

#include <stdexcept>
#include <string>

namespace faultloc {

/// Invalid user-supplied data: bad node ids, mismatched grids, malformed files.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numerical failure: blow-up, singular solve, unreachable tolerance.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was stopped by a configured budget. Carries the part of the
/// answer that was verified before the stop (e.g. a spark lower bound).
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& msg, long verified_bound)
        : std::runtime_error(msg), verified_bound(verified_bound) {}
    long verified_bound;
};

} // namespace faultloc
