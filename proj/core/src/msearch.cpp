#include "rank1/msearch.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "rank1/modular.hpp"

namespace rank1 {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// n - 1 = d * 2^s with d odd
bool is_strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) noexcept {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

double elapsed(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    // these witnesses decide primality for every n < 3.3e24
    static constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (auto p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return std::ranges::all_of(witnesses, [&](std::uint64_t a) { return is_strong_probable_prime(n, a, d, s); });
}

std::uint64_t next_prime(std::uint64_t n) {
    // largest 64-bit prime is 2^64 - 59
    constexpr std::uint64_t largest = 18446744073709551557ull;
    if (n >= largest) throw std::overflow_error("next_prime: no 64-bit prime above input");
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    if (c % 2 == 0 && c != 2) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

std::uint64_t next_prime(const Rational& x) {
    if (x.num() < 0) return 2;
    // p > x  <=>  p > floor(x) for integer p
    return next_prime(static_cast<std::uint64_t>(x.floor()));
}

std::uint64_t initial_size(const FrequencySet& set, Mode mode) {
    const std::uint64_t n = set.size();
    if (mode == Mode::integration) return next_prime(2 * std::max(n + 1, max_abs(set)));
    std::uint64_t sq = 0;
    if (__builtin_mul_overflow(n, n, &sq)) throw std::overflow_error("initial_size: |I|^2 overflows");
    return next_prime(std::max(sq, 2 * expansion(set)));
}

SearchOutcome heuristic_search(const FrequencySet& set, unsigned retries, std::uint64_t budget,
                               Mode mode, Rng& rng) {
    if (retries == 0) throw std::invalid_argument("retry count K must be >= 1");
    if (budget == 0) throw std::invalid_argument("candidate budget T must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.mode = mode;

    std::uint64_t size = initial_size(set, mode);
    for (;;) {
        const auto size_start = std::chrono::steady_clock::now();
        SizeAttempt entry{.lattice_size = size};
        const CbcConfig config{.lattice_size = size,
                               .candidate_budget = std::min(budget, size),
                               .mode = mode,
                               .seed = 0};
        while (entry.attempts < retries) {
            ++entry.attempts;
            auto r = cbc_construct(set, config, rng);
            if (r.success()) {
                entry.succeeded = true;
                out.status = Status::success;
                out.lattice_size = size;
                out.generator = std::move(r.generator);
                break;
            }
        }
        entry.seconds = elapsed(size_start);
        out.trail.push_back(entry);
        if (!entry.succeeded || size == 2) break;
        size = next_prime(size / 2);
    }
    out.seconds = elapsed(start);
    return out;
}

SearchOutcome heuristic_search(const FrequencySet& set, unsigned retries, std::uint64_t budget,
                               Mode mode, std::uint64_t seed) {
    Rng rng(seed);
    return heuristic_search(set, retries, budget, mode, rng);
}

}  // namespace rank1
