#pragma once

// Finite frequency sets I in Z^d and the generators for the standard
// test families (cube, axis cross, two-dimensional superposition set,
// weighted hyperbolic cross).
//
// A FrequencySet is immutable once built. Construction deduplicates the
// frequencies and orders them lexicographically (first coordinate most
// significant), so two sets holding the same frequencies compare equal and
// iterate identically.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rank1/rational.hpp"

namespace rank1 {

/// Largest admissible |k_t|. Keeps every residue computation in range.
inline constexpr std::int64_t kMaxComponent = 2147483647;

/// Default bound on generated sizes (items, or coordinates for the cube).
inline constexpr std::size_t kDefaultSizeCap = 100'000'000;

class FrequencySet {
public:
    /// Builds a set from row-major coordinates (coords.size() == dim * n).
    /// Sorts and deduplicates. Throws std::invalid_argument on an empty
    /// set, dim == 0, ragged input, or a component outside +-kMaxComponent.
    static FrequencySet from_flat(std::size_t dim, std::vector<std::int64_t> coords);
    static FrequencySet from_rows(std::size_t dim,
                                  const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size() / dim_; }

    std::span<const std::int64_t> operator[](std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const std::int64_t> flat() const noexcept { return coords_; }

    /// t-th coordinate (0-based) of every frequency, in set order.
    std::vector<std::int64_t> column(std::size_t t) const;

    bool contains(std::span<const std::int64_t> k) const;

    /// Projection onto the first `prefix` coordinates, deduplicated.
    FrequencySet project(std::size_t prefix) const;

    friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

private:
    FrequencySet(std::size_t dim, std::vector<std::int64_t> coords)
        : dim_(dim), coords_(std::move(coords)) {}

    std::size_t dim_ = 1;
    std::vector<std::int64_t> coords_;
};

/// Product weights gamma_j for the weighted hyperbolic cross.
class WeightSpec {
public:
    enum class Kind { inverse_square, explicit_list };

    /// gamma_j = j^-2, j = 1, 2, ...
    static WeightSpec inverse_square() { return WeightSpec{Kind::inverse_square, {}}; }
    /// Positive, non-increasing weights; throws std::invalid_argument otherwise.
    static WeightSpec explicit_list(std::vector<Rational> gammas);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Rational>& gammas() const noexcept { return gammas_; }

    /// gamma_j for 1-based j. Throws std::out_of_range past an explicit list.
    Rational gamma(std::size_t j) const;

private:
    WeightSpec(Kind kind, std::vector<Rational> gammas) : kind_(kind), gammas_(std::move(gammas)) {}

    Kind kind_;
    std::vector<Rational> gammas_;
};

/// All k with |k_t| <= n. Requires d * (2n+1)^d <= cap.
FrequencySet gen_cube(std::size_t d, std::int64_t n, std::size_t cap = kDefaultSizeCap);

/// Axis cross: at most one nonzero coordinate, of magnitude <= n. |I| = 2dn + 1.
FrequencySet gen_axis_cross(std::size_t d, std::int64_t n, std::size_t cap = kDefaultSizeCap);

/// Union of all two-axis coordinate planes inside [-n, n]^d (d >= 2).
/// |I| = 2nd(1 + (d-1)n) + 1.
FrequencySet gen_superposition2(std::size_t d, std::int64_t n, std::size_t cap = kDefaultSizeCap);

/// {k : prod_j max(1, |k_j| / gamma_j) <= threshold} over the first dmax
/// coordinates. Membership is decided in exact rational arithmetic.
FrequencySet gen_weighted_hyperbolic(const WeightSpec& weights, const Rational& threshold,
                                     std::size_t dmax, std::size_t cap = kDefaultSizeCap);

/// D(I) = {h - k : h, k in I}. Requires |I|^2 <= cap.
FrequencySet difference_set(const FrequencySet& set, std::size_t cap = kDefaultSizeCap);

/// max_t (max k_t - min k_t).
std::uint64_t expansion(const FrequencySet& set);

/// max ||k||_inf over the set.
std::uint64_t max_abs(const FrequencySet& set);

/// Text format: one frequency per line, d whitespace-separated integers,
/// '#' lines and blank lines skipped. Errors throw std::runtime_error with
/// the offending line number.
FrequencySet read_set(std::istream& in);
FrequencySet read_set(const std::filesystem::path& path);
void write_set(const FrequencySet& set, std::ostream& out);
void write_set(const FrequencySet& set, const std::filesystem::path& path);

}  // namespace rank1
