#pragma once

#include <stdexcept>
#include <string>

namespace bigvol {

// Domain errors. CLI maps these to exit status 1; usage errors are exit 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyRegion : DomainError {
    explicit EmptyRegion(const std::string& what = "region is empty: no point of the simplex is nef")
        : DomainError(what) {}
};

struct NotBig : DomainError {
    explicit NotBig(const std::string& what = "divisor is not big") : DomainError(what) {}
};

struct StepUnderflow : DomainError {
    explicit StepUnderflow(const std::string& what = "volume degenerates before the smallest probe step; shrink h")
        : DomainError(what) {}
};

struct DegenerateThreshold : DomainError {
    explicit DegenerateThreshold(const std::string& what = "thresholds degenerate: p too small")
        : DomainError(what) {}
};

}  // namespace bigvol
