#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bkm {

/// Two or more knots coincide (closer than the duplicate threshold).
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver was asked for a configuration it does not support, e.g. a
/// nonlinear remaining operator together with unknown knot values.
class UnsupportedConfigurationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// LU factorization met a pivot whose magnitude is below the singularity
/// threshold. The pivot index is the elimination step (0-based).
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t pivot)
        : std::runtime_error("singular matrix: zero pivot at index " + std::to_string(pivot)),
          pivot_(pivot) {}

    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

} // namespace bkm
