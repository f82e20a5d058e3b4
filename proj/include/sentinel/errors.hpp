#pragma once

#include <stdexcept>

namespace sentinel {

// A series is too short for the requested statistic.
class insufficient_data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training window shorter than the configured minimum length.
class insufficient_training_error : public insufficient_data_error {
public:
    using insufficient_data_error::insufficient_data_error;
};

// Long-run variance of a window is numerically zero (constant input).
class degenerate_variance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sentinel
