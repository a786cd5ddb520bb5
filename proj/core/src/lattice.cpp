#include "rank1/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rank1/modular.hpp"

namespace rank1 {

namespace {

void require_dims(const Rank1Lattice& lattice, const FrequencySet& set) {
    if (lattice.dim() != set.dim())
        throw std::invalid_argument("lattice dimension " + std::to_string(lattice.dim()) +
                                    " does not match frequency set dimension " +
                                    std::to_string(set.dim()));
}

// exp(2 pi i r / M) for an exact residue r in [0, M)
std::complex<double> unit_root(std::uint64_t r, std::uint64_t m) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(m));
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Rank1Lattice::Rank1Lattice(std::uint64_t size, std::vector<std::uint64_t> generator)
    : size_(size), generator_(std::move(generator)) {
    if (size_ == 0) throw std::invalid_argument("lattice size must be >= 1");
    if (generator_.empty()) throw std::invalid_argument("generating vector must not be empty");
    for (auto z : generator_)
        if (z >= size_)
            throw std::invalid_argument("generating vector component " + std::to_string(z) +
                                        " not in [0, " + std::to_string(size_) + ")");
}

TrigPolynomial::TrigPolynomial(FrequencySet support_, std::vector<std::complex<double>> coeffs_)
    : support(std::move(support_)), coeffs(std::move(coeffs_)) {
    if (coeffs.size() != support.size())
        throw std::invalid_argument("coefficient count does not match support size");
}

std::vector<double> nodes(const Rank1Lattice& lattice) {
    const std::uint64_t m = lattice.size();
    const std::size_t d = lattice.dim();
    std::vector<double> out(static_cast<std::size_t>(m) * d);
    for (std::uint64_t j = 0; j < m; ++j)
        for (std::size_t t = 0; t < d; ++t)
            out[j * d + t] = static_cast<double>(mul_mod(j, lattice.generator()[t], m)) /
                             static_cast<double>(m);
    return out;
}

std::complex<double> cubature(const Rank1Lattice& lattice,
                              std::span<const std::complex<double>> samples) {
    if (samples.size() != lattice.size())
        throw std::invalid_argument("cubature needs exactly M samples");
    std::complex<double> sum{};
    for (const auto& s : samples) sum += s;
    return sum / static_cast<double>(lattice.size());
}

std::vector<std::uint64_t> residues(const Rank1Lattice& lattice, const FrequencySet& set) {
    require_dims(lattice, set);
    std::vector<std::uint64_t> out(set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        out[i] = inner_product_mod(set[i], lattice.generator(), lattice.size());
    return out;
}

bool verify_integration(const Rank1Lattice& lattice, const FrequencySet& set) {
    require_dims(lattice, set);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto k = set[i];
        if (std::ranges::all_of(k, [](std::int64_t v) { return v == 0; })) continue;
        if (inner_product_mod(k, lattice.generator(), lattice.size()) == 0) return false;
    }
    return true;
}

bool verify_reconstruction(const Rank1Lattice& lattice, const FrequencySet& set) {
    auto r = residues(lattice, set);
    std::ranges::sort(r);
    return std::ranges::adjacent_find(r) == r.end();
}

std::complex<double> eval_poly(const TrigPolynomial& p, std::span<const double> x) {
    if (x.size() != p.support.dim()) throw std::invalid_argument("point has wrong dimension");
    std::complex<double> sum{};
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        const auto k = p.support[i];
        double phase = 0.0;
        for (std::size_t t = 0; t < x.size(); ++t) phase += static_cast<double>(k[t]) * x[t];
        const double angle = 2.0 * std::numbers::pi * phase;
        sum += p.coeffs[i] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::vector<std::complex<double>> sample_on_lattice(const TrigPolynomial& p,
                                                    const Rank1Lattice& lattice) {
    const std::uint64_t m = lattice.size();
    const auto r = residues(lattice, p.support);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
    for (std::uint64_t j = 0; j < m; ++j) {
        std::complex<double> sum{};
        for (std::size_t i = 0; i < r.size(); ++i) sum += p.coeffs[i] * unit_root(mul_mod(j, r[i], m), m);
        out[j] = sum;
    }
    return out;
}

std::vector<std::complex<double>> reconstruct_coeffs(const Rank1Lattice& lattice,
                                                     const FrequencySet& set,
                                                     std::span<const std::complex<double>> samples) {
    const std::uint64_t m = lattice.size();
    if (samples.size() != m) throw std::invalid_argument("reconstruction needs exactly M samples");
    const auto r = residues(lattice, set);
    std::vector<std::complex<double>> out(set.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::complex<double> sum{};
        for (std::uint64_t j = 0; j < m; ++j) sum += samples[j] * std::conj(unit_root(mul_mod(j, r[i], m), m));
        out[i] = sum / static_cast<double>(m);
    }
    return out;
}

}  // namespace rank1
