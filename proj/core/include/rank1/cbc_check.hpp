#pragma once

// Incremental per-step exactness checks for component-by-component
// construction.
//
// A CBC search carries the residue vector nu_j = k_j . (z_1..z_{l-1}, 0..) mod M
// from step to step. Deciding whether a candidate y for component l keeps the
// property only needs nu and the l-th coordinates of the frequencies:
//
//  - integration: every frequency with k_{j,l} != 0 must satisfy
//    nu_j + y k_{j,l} != 0 (mod M). O(|I|).
//  - reconstruction: the distinct pairs (nu_j, k_{j,l}) must map to distinct
//    residues nu_j + y k_{j,l} (mod M). O(|I| log |I|).
//
// Both assume the prefix (z_1..z_{l-1}) already has the property for the
// projection of I onto its first l-1 coordinates.
//
// The free functions are pure and return the candidate's residue state. The
// Step classes precompute the y-independent part once per CBC step and are
// what the drivers use; every member is const and safe to call concurrently.
// A Step keeps views of its column and residue state, which must outlive it.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rank1/freqset.hpp"

namespace rank1 {

enum class Mode { integration, reconstruction };

std::string_view to_string(Mode mode) noexcept;
/// Accepts "integration" / "reconstruction"; throws std::invalid_argument.
Mode parse_mode(std::string_view text);

/// nu(I, z, M): one residue in [0, M) per frequency, in set order.
class ResidueState {
public:
    ResidueState(std::uint64_t modulus, std::vector<std::uint64_t> values);

    std::uint64_t modulus() const noexcept { return modulus_; }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    friend bool operator==(const ResidueState&, const ResidueState&) = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> values_;
};

struct StepCheck {
    bool exact;
    ResidueState residues;
};

/// First CBC step with z_1 = 1: nu_j = k_{j,1} mod M. `exact` reports
/// whether the first coordinate alone already has the mode's property.
/// Requires M >= 2.
StepCheck init_residues(const FrequencySet& set, std::uint64_t modulus, Mode mode);

/// Returns the updated residues nu + y k (mod M) whatever the outcome.
StepCheck check_exactness_integration(std::span<const std::int64_t> column,
                                      const ResidueState& nu, std::uint64_t y);

/// Returns the updated residues on success and nu unchanged on failure.
StepCheck check_exactness_reconstruction(std::span<const std::int64_t> column,
                                         const ResidueState& nu, std::uint64_t y);

/// nu + y k (mod M), coordinatewise.
ResidueState advance(std::span<const std::int64_t> column, const ResidueState& nu, std::uint64_t y);

class IntegrationStep {
public:
    IntegrationStep(std::span<const std::int64_t> column, const ResidueState& nu);

    bool admits(std::uint64_t y) const;
    ResidueState commit(std::uint64_t y) const;

private:
    std::span<const std::int64_t> column_;
    const ResidueState* nu_;
    // rows with k_{j,l} != 0: (nu_j, k_{j,l} mod M)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> active_;
};

class ReconstructionStep {
public:
    ReconstructionStep(std::span<const std::int64_t> column, const ResidueState& nu);

    bool admits(std::uint64_t y) const;
    ResidueState commit(std::uint64_t y) const;

    /// Number of distinct (nu_j, k_{j,l}) pairs.
    std::size_t distinct_pairs() const noexcept { return pairs_.size(); }

private:
    std::span<const std::int64_t> column_;
    const ResidueState* nu_;
    // distinct (nu_j, k_{j,l} mod M); deduplicated on the raw k_{j,l}
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
};

}  // namespace rank1
