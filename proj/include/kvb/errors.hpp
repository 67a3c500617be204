#pragma once

#include <stdexcept>
#include <string>

namespace kvb {

// Malformed input, unknown variables, dimension mismatches.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A root of a kernel or theta product became trivial, e.g. (1 - 1)^-1.
class DegenerateKernelError : public StructuralError {
public:
    DegenerateKernelError(const std::string& what, std::string root)
        : StructuralError(what), root_(std::move(root)) {}
    const std::string& root() const { return root_; }

private:
    std::string root_;
};

// A truncated expansion cannot represent the requested quantity.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A division that was required to be exact left a remainder.
class CancellationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kvb
