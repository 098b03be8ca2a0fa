#pragma once

#include <stdexcept>

namespace coulscat {

/// Thrown when an iterative scheme (series, quadrature refinement) fails to
/// reach its tolerance within the evaluation budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace coulscat
