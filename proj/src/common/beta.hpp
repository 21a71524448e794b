#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "common/error.hpp"

namespace janus {

/// Inverse temperature. The zero-temperature limit is a distinguished state,
/// never an IEEE infinity smuggled through `value()`.
class Beta {
public:
    constexpr Beta() = default;

    explicit Beta(double value) : value_(value) {
        if (!std::isfinite(value) || value < 0.0)
            throw DomainError("beta must be finite and non-negative, got " + std::to_string(value));
    }

    static Beta infinite() {
        Beta b;
        b.infinite_ = true;
        return b;
    }

    bool is_infinite() const noexcept { return infinite_; }

    /// +inf for the zero-temperature limit.
    double value() const noexcept {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    std::string to_string() const;

    friend bool operator==(const Beta& a, const Beta& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

/// Accepts a decimal number or "inf".
Beta parse_beta(const std::string& text);

}  // namespace janus
