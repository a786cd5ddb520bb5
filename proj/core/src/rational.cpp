#include "rank1/rational.hpp"
#include "rank1/modular.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rank1 {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.size() > 15)
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        const bool negative = !int_part.empty() && int_part.front() == '-';
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        const std::int64_t whole =
            (int_part.empty() || int_part == "-") ? 0 : parse_int(int_part, text);
        const std::int64_t frac = parse_int(frac_part, text);
        if (frac < 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        std::int64_t num = 0;
        if (__builtin_mul_overflow(whole < 0 ? -whole : whole, scale, &num) ||
            __builtin_add_overflow(num, frac, &num))
            throw std::invalid_argument("rational out of range: '" + std::string(text) + "'");
        return Rational(negative ? -num : num, scale);
    }
    return Rational(parse_int(text, text));
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

}  // namespace rank1
