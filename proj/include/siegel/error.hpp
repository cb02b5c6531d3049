#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Bad user input: unparseable weight, parity violation, out-of-range index.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation was refused because it exceeds a size budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical assertion failed (counterexample to a claim, rank mismatch).
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace siegel
