#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rank1 {

/// Exact non-negative-denominator rational used for thresholds and weights.
/// Always stored reduced with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Accepts "7", "-3", "7/2" and finite decimals such as "3.5".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Largest integer not exceeding the value.
    std::int64_t floor() const noexcept;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace rank1
