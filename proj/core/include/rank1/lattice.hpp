#pragma once

// Rank-1 lattices Lambda(z, M) = { (j/M) z mod 1 : j = 0..M-1 },
// the equal-weight lattice rule, and the direct (non-incremental)
// verifiers for the exact integration and reconstruction properties.
//
// The verifiers work in exact residue arithmetic and serve as ground truth
// for the incremental CBC kernels. Trigonometric polynomial sampling and
// coefficient recovery use the direct O(M |I|) transform.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rank1/freqset.hpp"

namespace rank1 {

class Rank1Lattice {
public:
    /// Requires size >= 1, a non-empty generator, and 0 <= z_t < size.
    Rank1Lattice(std::uint64_t size, std::vector<std::uint64_t> generator);

    std::uint64_t size() const noexcept { return size_; }
    std::size_t dim() const noexcept { return generator_.size(); }
    const std::vector<std::uint64_t>& generator() const noexcept { return generator_; }

    friend bool operator==(const Rank1Lattice&, const Rank1Lattice&) = default;

private:
    std::uint64_t size_;
    std::vector<std::uint64_t> generator_;
};

/// p(x) = sum_k c_k exp(2 pi i k.x), coefficients aligned with support order.
struct TrigPolynomial {
    FrequencySet support;
    std::vector<std::complex<double>> coeffs;

    TrigPolynomial(FrequencySet support, std::vector<std::complex<double>> coeffs);
};

/// The M nodes, row-major (node j occupies [j*d, (j+1)*d)). x_0 = 0.
std::vector<double> nodes(const Rank1Lattice& lattice);

/// M^-1 * sum of samples. Throws std::invalid_argument unless |samples| == M.
std::complex<double> cubature(const Rank1Lattice& lattice,
                              std::span<const std::complex<double>> samples);

/// k . z mod M for every k in the set, in set order.
std::vector<std::uint64_t> residues(const Rank1Lattice& lattice, const FrequencySet& set);

/// k.z != 0 (mod M) for every nonzero k in the set.
bool verify_integration(const Rank1Lattice& lattice, const FrequencySet& set);

/// The residues k.z mod M are pairwise distinct over the set.
bool verify_reconstruction(const Rank1Lattice& lattice, const FrequencySet& set);

std::complex<double> eval_poly(const TrigPolynomial& p, std::span<const double> x);

/// p at every lattice node. Phases are taken from exact integer residues,
/// so no rounding accumulates from forming (j/M) z mod 1 in floating point.
std::vector<std::complex<double>> sample_on_lattice(const TrigPolynomial& p,
                                                    const Rank1Lattice& lattice);

/// c_k = M^-1 sum_j samples_j exp(-2 pi i j (k.z mod M) / M) for k in the set.
/// Exact for polynomials supported on the set when the lattice has the
/// reconstruction property; that precondition is not checked here.
std::vector<std::complex<double>> reconstruct_coeffs(const Rank1Lattice& lattice,
                                                     const FrequencySet& set,
                                                     std::span<const std::complex<double>> samples);

}  // namespace rank1
