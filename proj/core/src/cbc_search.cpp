#include "rank1/cbc_search.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rank1 {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
    // reject the lowest 2^64 mod bound outputs so the rest split evenly
    const std::uint64_t reject_below = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= reject_below) return x % bound;
    }
}

std::vector<std::uint64_t> sample_distinct(std::uint64_t count, std::uint64_t universe, Rng& rng) {
    if (count > universe)
        throw std::invalid_argument("cannot draw " + std::to_string(count) + " distinct values from " +
                                    std::to_string(universe));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t j = universe - count; j < universe; ++j) {
        std::uint64_t t = uniform_below(rng, j + 1);
        if (chosen.contains(t)) t = j;
        chosen.insert(t);
        out.push_back(t);
    }
    std::ranges::sort(out);
    return out;
}

CandidateStream::CandidateStream(std::uint64_t modulus, std::uint64_t budget, Rng& rng)
    : modulus_(modulus), rng_(&rng) {
    if (budget == 0 || budget > modulus)
        throw std::invalid_argument("candidate budget must lie in [1, M]");
    sorted_head_ = sample_distinct(budget, modulus, rng);
    head_ = sorted_head_;
    shuffle(std::span<std::uint64_t>(head_), rng);
}

std::uint64_t CandidateStream::complement_at(std::uint64_t index) const {
    // sorted_head_[i] - i is non-decreasing; count head values below the answer
    std::size_t lo = 0, hi = sorted_head_.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (sorted_head_[mid] - mid <= index)
            lo = mid + 1;
        else
            hi = mid;
    }
    return index + lo;
}

std::uint64_t CandidateStream::next_tail() {
    if (tail_exhausted()) throw std::logic_error("candidate tail exhausted");
    // forward Fisher-Yates over tail positions, storing only displaced entries
    const std::uint64_t n = tail_size();
    const std::uint64_t s = tail_drawn_++;
    const std::uint64_t r = s + uniform_below(*rng_, n - s);
    auto at = [&](std::uint64_t pos) {
        auto it = displaced_.find(pos);
        return it == displaced_.end() ? pos : it->second;
    };
    const std::uint64_t picked = at(r);
    displaced_[r] = at(s);
    displaced_.erase(s);
    return complement_at(picked);
}

std::vector<std::uint64_t> two_step_permutation(std::uint64_t modulus, std::uint64_t budget, Rng& rng) {
    CandidateStream stream(modulus, budget, rng);
    std::vector<std::uint64_t> out(stream.head().begin(), stream.head().end());
    out.reserve(static_cast<std::size_t>(modulus));
    while (!stream.tail_exhausted()) out.push_back(stream.next_tail());
    return out;
}

namespace {

void validate(const FrequencySet&, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("lattice size must be >= 2");
}

// Runs the CBC steps, asking `order(step)` for a generator that yields the
// candidates of one step as std::optional (nullopt once exhausted).
template <typename MakeOrder>
CbcResult run_cbc(const FrequencySet& set, std::uint64_t m, Mode mode, MakeOrder&& make_order) {
    CbcResult result;
    result.mode = mode;
    result.lattice_size = m;

    auto init = init_residues(set, m, mode);
    if (!init.exact) return result;

    ResidueState nu = std::move(init.residues);
    std::vector<std::uint64_t> z{1};
    z.reserve(set.dim());

    for (std::size_t l = 1; l < set.dim(); ++l) {
        const auto column = set.column(l);
        auto next = make_order();
        std::uint64_t tested = 0;
        std::optional<std::uint64_t> accepted;

        auto scan = [&](const auto& step) {
            while (auto y = next()) {
                ++tested;
                if (step.admits(*y)) {
                    accepted = *y;
                    nu = step.commit(*y);
                    return;
                }
            }
        };
        if (mode == Mode::integration)
            scan(IntegrationStep(column, nu));
        else
            scan(ReconstructionStep(column, nu));

        result.candidates_tested.push_back(tested);
        if (!accepted) return result;
        z.push_back(*accepted);
    }

    result.status = Status::success;
    result.generator = std::move(z);
    return result;
}

}  // namespace

CbcResult cbc_construct(const FrequencySet& set, const CbcConfig& config, Rng& rng) {
    validate(set, config.lattice_size);
    const std::uint64_t m = config.lattice_size;
    const std::uint64_t budget = config.candidate_budget;
    if (budget == 0 || budget > m) throw std::invalid_argument("candidate budget must lie in [1, M]");

    auto result = run_cbc(set, m, config.mode, [&] {
        auto head = sample_distinct(budget, m, rng);
        shuffle(std::span<std::uint64_t>(head), rng);
        return [head = std::move(head), i = std::size_t{0}]() mutable -> std::optional<std::uint64_t> {
            if (i == head.size()) return std::nullopt;
            return head[i++];
        };
    });
    result.seed = config.seed;
    return result;
}

CbcResult cbc_construct(const FrequencySet& set, const CbcConfig& config) {
    Rng rng(config.seed);
    return cbc_construct(set, config, rng);
}

CbcResult cbc_construct_basic(const FrequencySet& set, std::uint64_t lattice_size,
                              std::uint64_t budget, Mode mode, Rng& rng) {
    validate(set, lattice_size);
    if (budget == 0 || budget > lattice_size)
        throw std::invalid_argument("candidate budget must lie in [1, M]");

    return run_cbc(set, lattice_size, mode, [&] {
        return [stream = CandidateStream(lattice_size, budget, rng),
                i = std::size_t{0}]() mutable -> std::optional<std::uint64_t> {
            if (i < stream.head().size()) return stream.head()[i++];
            if (stream.tail_exhausted()) return std::nullopt;
            return stream.next_tail();
        };
    });
}

CbcResult cbc_exhaustive(const FrequencySet& set, std::uint64_t lattice_size, Mode mode) {
    validate(set, lattice_size);
    return run_cbc(set, lattice_size, mode, [&] {
        return [y = std::uint64_t{0}, m = lattice_size]() mutable -> std::optional<std::uint64_t> {
            if (y == m) return std::nullopt;
            return y++;
        };
    });
}

double estimate_failure_bound(std::size_t dim, double c, std::uint64_t budget) {
    if (!(c > 1.0)) throw std::invalid_argument("failure bound needs c > 1");
    if (dim <= 1) return 0.0;
    const double bound = static_cast<double>(dim - 1) * std::pow(c, -static_cast<double>(budget));
    return std::min(1.0, bound);
}

}  // namespace rank1
