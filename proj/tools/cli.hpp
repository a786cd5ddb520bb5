#pragma once

// Command-line front end: set generation, construction, search, verification,
// a reconstruction round trip and a benchmark sweep writing CSV/JSON tables.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 search failure (also a
// negative verdict from `verify` or an out-of-tolerance round trip).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rank1/cbc_search.hpp"
#include "rank1/freqset.hpp"
#include "rank1/msearch.hpp"

namespace rank1::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSearchFailed = 2;

inline constexpr double kRoundTripTolerance = 1e-10;

/// Where a frequency set comes from: a file, or a generator family.
struct SetSource {
    std::string file;
    std::string family;  // cube | axiscross | anova2 | whc
    std::size_t d = 0;
    std::int64_t n = -1;
    std::string threshold;  // whc only, any Rational::parse form
    std::string gamma = "j^-2";
    std::size_t dmax = 0;  // whc only; 0 picks a default
};

/// "j^-2" or a comma-separated list of rationals ("1,1/4,1/9").
WeightSpec parse_gamma(std::string_view text);

/// Without an explicit dmax, j^-2 weights use floor(sqrt(threshold)): a
/// coordinate j with j^2 > threshold cannot be nonzero. Explicit lists use
/// their length.
std::size_t default_dmax(const WeightSpec& weights, const Rational& threshold);

FrequencySet build_set(const SetSource& source);

/// "2..6" or "2,3,5".
std::vector<std::size_t> parse_dim_list(std::string_view text);

/// Result document for `construct`. `trail` holds the single attempt.
std::string result_json(const CbcResult& result, std::size_t dim, bool verified, double seconds);
/// Result document for `search`.
std::string result_json(const SearchOutcome& outcome, std::size_t dim, std::uint64_t seed,
                        bool verified);

/// One benchmark repetition.
struct RunRecord {
    std::string experiment;  // e.g. "axiscross-d4-N64"
    std::string family;
    std::size_t d = 0;
    std::int64_t n = -1;     // -1 for whc
    std::string threshold;   // empty unless whc
    std::string gamma;       // empty unless whc
    Mode mode = Mode::reconstruction;
    unsigned retries = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::size_t rep = 0;
    std::size_t set_size = 0;
    Status status = Status::failed;
    std::uint64_t lattice_size = 0;
    bool verified = false;
    double seconds = 0.0;
};

struct BenchSweep {
    std::string family;
    std::vector<std::size_t> dims;         // ignored for whc
    std::int64_t n = -1;
    std::vector<std::string> thresholds;   // whc only
    std::string gamma = "j^-2";
    std::size_t dmax = 0;
    Mode mode = Mode::reconstruction;
    unsigned retries = kDefaultRetries;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::size_t reps = 1;
};

/// Runs every point of the sweep `reps` times with seeds seed + rep. Each
/// success is re-checked by the direct verifier before it is recorded.
std::vector<RunRecord> run_bench(const BenchSweep& sweep);

/// Header, one row per record, then mean/min/max rows per experiment.
void write_bench_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_bench_json(const std::vector<RunRecord>& records, std::ostream& out);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rank1::cli
