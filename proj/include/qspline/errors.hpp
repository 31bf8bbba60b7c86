#ifndef QSPLINE_ERRORS_HPP
#define QSPLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qspline {

// Inversion of a zero divisor in the complex quaternion algebra.
struct NonInvertibleError : std::domain_error {
    explicit NonInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// Argument outside a function's stated domain (e.g. Re s <= 1 for the zeta sum).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// 0^q with Sc q <= 0.
struct ZeroBaseError : std::domain_error {
    explicit ZeroBaseError(const std::string& what) : std::domain_error(what) {}
};

// Mixing axial elements that live on different axes.
struct AxisMismatchError : std::invalid_argument {
    explicit AxisMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Interpolation filter too close to zero for a reliable inverse.
struct ZeroFilterError : std::runtime_error {
    explicit ZeroFilterError(const std::string& what) : std::runtime_error(what) {}
};

// Binary grid operation on grids with different start/step/length.
struct GridMismatchError : std::invalid_argument {
    explicit GridMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qspline

#endif
