#include "rank1/cbc_check.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rank1/modular.hpp"

namespace rank1 {

namespace {

void require_same_length(std::span<const std::int64_t> column, const ResidueState& nu) {
    if (column.size() != nu.size())
        throw std::invalid_argument("column length " + std::to_string(column.size()) +
                                    " does not match residue count " + std::to_string(nu.size()));
}

bool all_distinct(std::vector<std::uint64_t>& values) {
    std::ranges::sort(values);
    return std::ranges::adjacent_find(values) == values.end();
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::integration ? "integration" : "reconstruction";
}

Mode parse_mode(std::string_view text) {
    if (text == "integration") return Mode::integration;
    if (text == "reconstruction") return Mode::reconstruction;
    throw std::invalid_argument("unknown mode '" + std::string(text) +
                                "' (expected integration or reconstruction)");
}

ResidueState::ResidueState(std::uint64_t modulus, std::vector<std::uint64_t> values)
    : modulus_(modulus), values_(std::move(values)) {
    if (modulus_ == 0) throw std::invalid_argument("modulus must be >= 1");
    for (auto v : values_)
        if (v >= modulus_) throw std::invalid_argument("residue out of range");
}

StepCheck init_residues(const FrequencySet& set, std::uint64_t modulus, Mode mode) {
    if (modulus < 2) throw std::invalid_argument("lattice size must be >= 2");
    std::vector<std::uint64_t> nu(set.size());
    bool exact = true;
    for (std::size_t j = 0; j < set.size(); ++j) {
        const std::int64_t k1 = set[j][0];
        nu[j] = residue(k1, modulus);
        if (mode == Mode::integration && k1 != 0 && nu[j] == 0) exact = false;
    }
    if (mode == Mode::reconstruction) {
        // distinct first components must have distinct residues
        std::vector<std::int64_t> firsts = set.column(0);
        std::ranges::sort(firsts);
        firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
        std::vector<std::uint64_t> r(firsts.size());
        std::ranges::transform(firsts, r.begin(), [&](std::int64_t k) { return residue(k, modulus); });
        exact = all_distinct(r);
    }
    return {exact, ResidueState(modulus, std::move(nu))};
}

ResidueState advance(std::span<const std::int64_t> column, const ResidueState& nu, std::uint64_t y) {
    require_same_length(column, nu);
    const std::uint64_t m = nu.modulus();
    if (y >= m) throw std::invalid_argument("candidate must lie in [0, M)");
    std::vector<std::uint64_t> out(nu.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = add_mod(nu.values()[j], mul_mod(y, residue(column[j], m), m), m);
    return ResidueState(m, std::move(out));
}

StepCheck check_exactness_integration(std::span<const std::int64_t> column,
                                      const ResidueState& nu, std::uint64_t y) {
    auto next = advance(column, nu, y);
    bool exact = true;
    for (std::size_t j = 0; j < column.size() && exact; ++j)
        if (column[j] != 0 && next.values()[j] == 0) exact = false;
    return {exact, std::move(next)};
}

StepCheck check_exactness_reconstruction(std::span<const std::int64_t> column,
                                         const ResidueState& nu, std::uint64_t y) {
    const ReconstructionStep step(column, nu);
    if (y >= nu.modulus()) throw std::invalid_argument("candidate must lie in [0, M)");
    if (!step.admits(y)) return {false, nu};
    return {true, step.commit(y)};
}

IntegrationStep::IntegrationStep(std::span<const std::int64_t> column, const ResidueState& nu)
    : column_(column), nu_(&nu) {
    require_same_length(column, nu);
    const std::uint64_t m = nu.modulus();
    for (std::size_t j = 0; j < column.size(); ++j)
        if (column[j] != 0) active_.emplace_back(nu.values()[j], residue(column[j], m));
}

bool IntegrationStep::admits(std::uint64_t y) const {
    const std::uint64_t m = nu_->modulus();
    return std::ranges::none_of(active_, [&](const auto& a) {
        return add_mod(a.first, mul_mod(y, a.second, m), m) == 0;
    });
}

ResidueState IntegrationStep::commit(std::uint64_t y) const { return advance(column_, *nu_, y); }

ReconstructionStep::ReconstructionStep(std::span<const std::int64_t> column, const ResidueState& nu)
    : column_(column), nu_(&nu) {
    require_same_length(column, nu);
    std::vector<std::pair<std::uint64_t, std::int64_t>> raw(column.size());
    for (std::size_t j = 0; j < column.size(); ++j) raw[j] = {nu.values()[j], column[j]};
    std::ranges::sort(raw);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    const std::uint64_t m = nu.modulus();
    pairs_.reserve(raw.size());
    for (const auto& [v, k] : raw) pairs_.emplace_back(v, residue(k, m));
}

bool ReconstructionStep::admits(std::uint64_t y) const {
    const std::uint64_t m = nu_->modulus();
    std::vector<std::uint64_t> r(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        r[i] = add_mod(pairs_[i].first, mul_mod(y, pairs_[i].second, m), m);
    return all_distinct(r);
}

ResidueState ReconstructionStep::commit(std::uint64_t y) const { return advance(column_, *nu_, y); }

}  // namespace rank1
