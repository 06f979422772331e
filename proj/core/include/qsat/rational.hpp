#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsat {

// Non-negative rational with 64-bit parts, always kept in lowest terms.
// Enough for r / 2^n with n well beyond the enumeration cap.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        const auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace qsat
