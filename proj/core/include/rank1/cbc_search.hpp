#pragma once

// Randomized component-by-component construction of generating vectors.
//
// Every driver fixes z_1 = 1 and then, for l = 2..d, tests candidate values
// for z_l in some order, accepting the first that keeps the mode's property
// (see cbc_check.hpp). The drivers differ only in the candidate order:
//
//  - cbc_construct: T distinct values drawn uniformly (Floyd), shuffled
//    (Fisher-Yates). Fails if none of the T is admissible.
//  - cbc_construct_basic: the same T values first, then a uniformly shuffled
//    order of the remaining M - T values, generated lazily. Fails only if no
//    value in [0, M) is admissible.
//  - cbc_exhaustive: y = 0, 1, ..., M - 1. Deterministic oracle.
//
// Search failure is reported through CbcResult::status, never by throwing.
//
// Randomness comes from std::mt19937_64. Bounded draws use uniform_below
// (plain rejection sampling), so a seed fixes the whole candidate stream
// independently of the standard library's distribution implementations.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "rank1/cbc_check.hpp"
#include "rank1/freqset.hpp"
#include "rank1/lattice.hpp"

namespace rank1 {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Requires bound >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform random `count`-subset of [0, universe), sorted ascending (Floyd).
/// Throws std::invalid_argument if count > universe.
std::vector<std::uint64_t> sample_distinct(std::uint64_t count, std::uint64_t universe, Rng& rng);

/// Fisher-Yates.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// Candidate order for one CBC step: a shuffled uniform T-subset of [0, M),
/// optionally followed by a uniform permutation of the complement. The tail
/// is produced one element at a time on demand, in O(1) memory per element
/// drawn, so an early acceptance never pays for the full permutation.
class CandidateStream {
public:
    CandidateStream(std::uint64_t modulus, std::uint64_t budget, Rng& rng);

    /// First `budget` candidates, in test order.
    std::span<const std::uint64_t> head() const noexcept { return head_; }

    /// Next element of the tail. Requires !tail_exhausted().
    std::uint64_t next_tail();
    bool tail_exhausted() const noexcept { return tail_drawn_ == tail_size(); }
    std::uint64_t tail_size() const noexcept { return modulus_ - head_.size(); }

private:
    std::uint64_t complement_at(std::uint64_t index) const;

    std::uint64_t modulus_;
    Rng* rng_;
    std::vector<std::uint64_t> head_;
    std::vector<std::uint64_t> sorted_head_;
    std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
    std::uint64_t tail_drawn_ = 0;
};

/// Full two-step permutation of [0, M): head of length T, then the tail.
std::vector<std::uint64_t> two_step_permutation(std::uint64_t modulus, std::uint64_t budget, Rng& rng);

struct CbcConfig {
    std::uint64_t lattice_size = 0;
    std::uint64_t candidate_budget = 100;  // T
    Mode mode = Mode::reconstruction;
    std::uint64_t seed = 0;
};

enum class Status { success, failed };

struct CbcResult {
    Status status = Status::failed;
    std::vector<std::uint64_t> generator;           // z; empty on failure
    std::vector<std::uint64_t> candidates_tested;   // one count per step l = 2..d reached
    Mode mode = Mode::reconstruction;
    std::uint64_t lattice_size = 0;
    std::uint64_t seed = 0;

    bool success() const noexcept { return status == Status::success; }
    /// Requires success().
    Rank1Lattice lattice() const { return Rank1Lattice(lattice_size, generator); }

    friend bool operator==(const CbcResult&, const CbcResult&) = default;
};

/// Probabilistic CBC with at most T candidates per step.
/// Requires M >= 2 and 1 <= T <= M.
CbcResult cbc_construct(const FrequencySet& set, const CbcConfig& config, Rng& rng);
/// As above with Rng(config.seed).
CbcResult cbc_construct(const FrequencySet& set, const CbcConfig& config);

/// Probabilistic CBC that falls back to the remaining M - T values.
CbcResult cbc_construct_basic(const FrequencySet& set, std::uint64_t lattice_size,
                              std::uint64_t budget, Mode mode, Rng& rng);

/// Deterministic scan y = 0..M-1 per step.
CbcResult cbc_exhaustive(const FrequencySet& set, std::uint64_t lattice_size, Mode mode);

/// Union bound min(1, (d-1) c^-T) on the failure probability of cbc_construct
/// when every step has at most M/c failing candidates. Requires c > 1.
double estimate_failure_bound(std::size_t dim, double c, std::uint64_t budget);

}  // namespace rank1
