#pragma once

#include <stdexcept>
#include <string>

namespace hcs {

/// Raised when an iterative scheme (series, contour, quadrature) cannot
/// reach its accuracy target within its budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a least-squares fit is fed data it cannot model
/// (e.g. a non-monotone spectrum).
class fit_error : public std::runtime_error {
public:
    explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hcs
