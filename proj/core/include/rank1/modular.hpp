#pragma once

// Exact residue arithmetic shared by the verifiers and the CBC kernels.
// All residues live in [0, m); products are widened to 128 bits once the
// modulus no longer fits in 32 bits.

#include <cstdint>
#include <span>

namespace rank1 {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

/// Canonical residue of a signed integer in [0, m). Requires m >= 1.
constexpr std::uint64_t residue(std::int64_t k, std::uint64_t m) noexcept {
    if (k >= 0) return static_cast<std::uint64_t>(k) % m;
    // -(k+1) avoids negating INT64_MIN
    const std::uint64_t mag = static_cast<std::uint64_t>(-(k + 1)) + 1u;
    const std::uint64_t r = mag % m;
    return r == 0 ? 0 : m - r;
}

constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    // a, b < m; the subtraction form cannot overflow
    return a >= m - b ? a - (m - b) : a + b;
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    if (m <= (std::uint64_t{1} << 32)) return (a * b) % m;
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

/// k . z mod m with every term reduced before accumulation.
inline std::uint64_t inner_product_mod(std::span<const std::int64_t> k,
                                       std::span<const std::uint64_t> z,
                                       std::uint64_t m) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < k.size(); ++t)
        acc = add_mod(acc, mul_mod(residue(k[t], m), z[t] % m, m), m);
    return acc;
}

}  // namespace rank1
