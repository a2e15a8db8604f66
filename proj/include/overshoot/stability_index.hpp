#pragma once

#include <string>

#include "overshoot/error.hpp"

namespace overshoot {

/// Stability exponent of a symmetric stable law, in the open interval (0,2).
class StabilityIndex {
public:
    explicit StabilityIndex(double value) : value_(value)
    {
        if (!(value > 0.0 && value < 2.0)) {
            throw DomainError("stability index must lie in (0,2), got " + std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

    friend bool operator==(StabilityIndex, StabilityIndex) = default;

private:
    double value_;
};

}  // namespace overshoot
