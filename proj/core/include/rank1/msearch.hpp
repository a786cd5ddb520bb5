#pragma once

// Prime utilities and the lattice-size halving search.
//
// heuristic_search starts from a prime that is large enough for cbc_construct
// to succeed with overwhelming probability, and keeps halving it
// (M <- nextprime(M/2)) while cbc_construct succeeds. A size is abandoned
// after K failed attempts; the last size that succeeded is returned.

#include <cstdint>
#include <vector>

#include "rank1/cbc_check.hpp"
#include "rank1/cbc_search.hpp"
#include "rank1/freqset.hpp"
#include "rank1/rational.hpp"

namespace rank1 {

/// Exact for every 64-bit input (deterministic Miller-Rabin).
bool is_prime(std::uint64_t n) noexcept;

/// Smallest prime strictly greater than n. Throws std::overflow_error if
/// that prime does not fit in 64 bits.
std::uint64_t next_prime(std::uint64_t n);
/// Smallest prime strictly greater than x (x >= 0).
std::uint64_t next_prime(const Rational& x);

/// Starting size of the halving search:
///   integration:    nextprime(2 max(|I| + 1, max(I)))
///   reconstruction: nextprime(max(|I|^2, 2 N_I))
std::uint64_t initial_size(const FrequencySet& set, Mode mode);

struct SizeAttempt {
    std::uint64_t lattice_size = 0;
    unsigned attempts = 0;
    bool succeeded = false;
    double seconds = 0.0;  // wallclock, not reproducible
};

struct SearchOutcome {
    Status status = Status::failed;
    std::uint64_t lattice_size = 0;
    std::vector<std::uint64_t> generator;
    std::vector<SizeAttempt> trail;  // strictly decreasing sizes
    Mode mode = Mode::reconstruction;
    double seconds = 0.0;

    bool success() const noexcept { return status == Status::success; }
    Rank1Lattice lattice() const { return Rank1Lattice(lattice_size, generator); }
};

inline constexpr unsigned kDefaultRetries = 5;
inline constexpr std::uint64_t kDefaultBudget = 100;

/// Requires retries >= 1 and budget >= 1. The budget is clamped to the
/// current size, which drops below T near the end of the descent.
SearchOutcome heuristic_search(const FrequencySet& set, unsigned retries, std::uint64_t budget,
                               Mode mode, Rng& rng);
SearchOutcome heuristic_search(const FrequencySet& set, unsigned retries, std::uint64_t budget,
                               Mode mode, std::uint64_t seed);

}  // namespace rank1
