#pragma once

#include <stdexcept>
#include <string>

namespace pinchperf {

// Adaptive integration or an iterative solver ran out of refinement budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A root/target search could not bracket the requested value.
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pinchperf
