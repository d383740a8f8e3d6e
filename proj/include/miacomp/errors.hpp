#pragma once

#include <stdexcept>
#include <string>

namespace miacomp {

// Raised when a numeric routine cannot reach its accuracy target
// (series cap exceeded, quadrature refinement exhausted).
class AccuracyError : public std::runtime_error {
public:
    explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace miacomp
