#pragma once

#include <stdexcept>
#include <string>

namespace magna {

// Error taxonomy. The CLI maps these onto exit codes:
// ConfigError -> 2, DataError -> 3, NumericError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration: bad flag combinations, out-of-range hyperparameters,
// infeasible injection specs.
struct ConfigError : Error {
    using Error::Error;
};

// Problems in user-supplied data files: parse failures, ids out of range,
// inconsistent shapes. Messages name the file and line where possible.
struct DataError : Error {
    using Error::Error;
};

// Shape contract violation in a tensor operation. Names the operation and
// the offending shapes.
struct ShapeError : Error {
    using Error::Error;
};

// Non-finite values where finite ones are required: training divergence,
// gradient checks hitting NaN/Inf.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace magna
