#pragma once

#include <stdexcept>
#include <string>

namespace latva {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lattice validation
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& w) : Error(w) {}
};
struct NotEven : Error {
    explicit NotEven(const std::string& w) : Error(w) {}
};
struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error(w) {}
};
struct NotInDual : Error {
    explicit NotInDual(const std::string& w) : Error(w) {}
};

// Truncated-calculus guards
struct WindowOverflow : Error {
    explicit WindowOverflow(const std::string& w) : Error(w) {}
};

// Checker diagnostics
struct NonScalarDefect : Error {
    explicit NonScalarDefect(const std::string& w) : Error(w) {}
};
struct InsufficientSample : Error {
    explicit InsufficientSample(const std::string& w) : Error(w) {}
};
struct NotDecomposableAtWindow : Error {
    explicit NotDecomposableAtWindow(const std::string& w) : Error(w) {}
};

}  // namespace latva
