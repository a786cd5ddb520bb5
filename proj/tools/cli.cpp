#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rank1/lattice.hpp"
#include "rank1/serialize.hpp"

namespace rank1::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    for (;;) {
        const auto next = text.find(sep, pos);
        parts.push_back(trim(text.substr(pos, next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::size_t parse_size(std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
    return value;
}

bool verify(const Rank1Lattice& lattice, const FrequencySet& set, Mode mode) {
    return mode == Mode::integration ? verify_integration(lattice, set) : verify_reconstruction(lattice, set);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

std::string experiment_id(const std::string& family, std::size_t d, std::int64_t n,
                          const std::string& threshold) {
    if (family == "whc") return "whc-t" + threshold + "-d" + std::to_string(d);
    return family + "-d" + std::to_string(d) + "-N" + std::to_string(n);
}

}  // namespace

WeightSpec parse_gamma(std::string_view text) {
    text = trim(text);
    if (text == "j^-2") return WeightSpec::inverse_square();
    std::vector<Rational> gammas;
    for (auto part : split(text, ',')) gammas.push_back(Rational::parse(part));
    return WeightSpec::explicit_list(std::move(gammas));
}

std::size_t default_dmax(const WeightSpec& weights, const Rational& threshold) {
    if (weights.kind() == WeightSpec::Kind::explicit_list) return weights.gammas().size();
    std::size_t j = 1;
    while (Rational(static_cast<std::int64_t>((j + 1) * (j + 1))) <= threshold) ++j;
    return j;
}

FrequencySet build_set(const SetSource& source) {
    if (!source.file.empty()) {
        if (!source.family.empty()) throw std::invalid_argument("give either a set file or --set, not both");
        return read_set(std::filesystem::path(source.file));
    }
    if (source.family.empty()) throw std::invalid_argument("no frequency set: give a set file or --set");

    if (source.family == "whc") {
        if (source.threshold.empty()) throw std::invalid_argument("--set whc needs --threshold");
        const auto weights = parse_gamma(source.gamma);
        const auto threshold = Rational::parse(source.threshold);
        const auto dmax = source.dmax > 0 ? source.dmax : default_dmax(weights, threshold);
        return gen_weighted_hyperbolic(weights, threshold, dmax);
    }
    if (source.d == 0) throw std::invalid_argument("--set " + source.family + " needs --d >= 1");
    if (source.n < 0) throw std::invalid_argument("--set " + source.family + " needs --N >= 0");
    if (source.family == "cube") return gen_cube(source.d, source.n);
    if (source.family == "axiscross") return gen_axis_cross(source.d, source.n);
    if (source.family == "anova2") return gen_superposition2(source.d, source.n);
    throw std::invalid_argument("unknown set family '" + source.family + "'");
}

std::vector<std::size_t> parse_dim_list(std::string_view text) {
    text = trim(text);
    std::vector<std::size_t> dims;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_size(trim(text.substr(0, dots)));
        const auto hi = parse_size(trim(text.substr(dots + 2)));
        if (lo > hi) throw std::invalid_argument("empty dimension range '" + std::string(text) + "'");
        for (auto d = lo; d <= hi; ++d) dims.push_back(d);
        return dims;
    }
    for (auto part : split(text, ',')) dims.push_back(parse_size(part));
    return dims;
}

std::string result_json(const CbcResult& result, std::size_t dim, bool verified, double seconds) {
    ordered_json j;
    j["status"] = result.success() ? "success" : "failed";
    j["d"] = dim;
    j["M"] = result.lattice_size;
    j["z"] = result.generator;
    j["mode"] = std::string(to_string(result.mode));
    j["seed"] = result.seed;
    j["verified"] = verified;
    ordered_json attempt;
    attempt["Mtilde"] = result.lattice_size;
    attempt["attempts"] = 1;
    attempt["ok"] = result.success();
    j["trail"] = ordered_json::array({attempt});
    j["seconds"] = seconds;
    return j.dump();
}

std::string result_json(const SearchOutcome& outcome, std::size_t dim, std::uint64_t seed,
                        bool verified) {
    ordered_json j;
    j["status"] = outcome.success() ? "success" : "failed";
    j["d"] = dim;
    // a failed search reports the size it gave up on
    j["M"] = outcome.success() || outcome.trail.empty() ? outcome.lattice_size
                                                        : outcome.trail.back().lattice_size;
    j["z"] = outcome.generator;
    j["mode"] = std::string(to_string(outcome.mode));
    j["seed"] = seed;
    j["verified"] = verified;
    auto trail = ordered_json::array();
    for (const auto& step : outcome.trail) {
        ordered_json t;
        t["Mtilde"] = step.lattice_size;
        t["attempts"] = step.attempts;
        t["ok"] = step.succeeded;
        trail.push_back(std::move(t));
    }
    j["trail"] = std::move(trail);
    j["seconds"] = outcome.seconds;
    return j.dump();
}

std::vector<RunRecord> run_bench(const BenchSweep& sweep) {
    struct Point {
        FrequencySet set;
        std::int64_t n;
        std::string threshold;
    };
    std::vector<Point> points;
    if (sweep.family == "whc") {
        if (sweep.thresholds.empty()) throw std::invalid_argument("bench --set whc needs --threshold");
        for (const auto& t : sweep.thresholds) {
            SetSource src;
            src.family = "whc";
            src.threshold = t;
            src.gamma = sweep.gamma;
            src.dmax = sweep.dmax;
            points.push_back({build_set(src), -1, t});
        }
    } else {
        if (sweep.dims.empty()) throw std::invalid_argument("bench needs --d");
        for (auto d : sweep.dims) {
            SetSource src;
            src.family = sweep.family;
            src.d = d;
            src.n = sweep.n;
            points.push_back({build_set(src), sweep.n, ""});
        }
    }

    std::vector<RunRecord> records;
    for (const auto& point : points) {
        const auto& set = point.set;
        for (std::size_t rep = 0; rep < sweep.reps; ++rep) {
            RunRecord r;
            r.experiment = experiment_id(sweep.family, set.dim(), point.n, point.threshold);
            r.family = sweep.family;
            r.d = set.dim();
            r.n = point.n;
            r.threshold = point.threshold;
            r.gamma = sweep.family == "whc" ? sweep.gamma : "";
            r.mode = sweep.mode;
            r.retries = sweep.retries;
            r.budget = sweep.budget;
            r.seed = sweep.seed + rep;
            r.rep = rep;
            r.set_size = set.size();

            const auto outcome = heuristic_search(set, sweep.retries, sweep.budget, sweep.mode, r.seed);
            r.seconds = outcome.seconds;
            if (outcome.success()) {
                r.lattice_size = outcome.lattice_size;
                r.verified = verify(outcome.lattice(), set, sweep.mode);
                // never persist an unverified success
                r.status = r.verified ? Status::success : Status::failed;
            }
            records.push_back(std::move(r));
        }
    }
    return records;
}

namespace {

constexpr const char* kCsvHeader =
    "kind,experiment,family,d,N,threshold,gamma,mode,K,T,seed,rep,set_size,status,M,verified,seconds";

std::string csv_prefix(const RunRecord& r, std::string_view kind) {
    std::string row(kind);
    row += ',' + r.experiment + ',' + r.family + ',' + std::to_string(r.d) + ',';
    if (r.n >= 0) row += std::to_string(r.n);
    row += ',' + r.threshold + ',' + r.gamma + ',' + std::string(to_string(r.mode)) + ',' +
           std::to_string(r.retries) + ',' + std::to_string(r.budget) + ',';
    return row;
}

struct Aggregate {
    std::size_t runs = 0;
    std::size_t successes = 0;
    bool all_verified = true;
    std::vector<std::uint64_t> sizes;
    std::vector<double> seconds;
    std::uint64_t base_seed = 0;
};

// records of one experiment, in input order
std::vector<std::pair<std::string, std::vector<const RunRecord*>>> group(const std::vector<RunRecord>& records) {
    std::vector<std::pair<std::string, std::vector<const RunRecord*>>> groups;
    for (const auto& r : records) {
        auto it = std::ranges::find(groups, r.experiment, [](const auto& g) { return g.first; });
        if (it == groups.end()) {
            groups.push_back({r.experiment, {}});
            it = groups.end() - 1;
        }
        it->second.push_back(&r);
    }
    return groups;
}

Aggregate aggregate(const std::vector<const RunRecord*>& runs) {
    Aggregate a;
    a.runs = runs.size();
    a.base_seed = runs.front()->seed - runs.front()->rep;
    for (const auto* r : runs) {
        a.seconds.push_back(r->seconds);
        if (r->status != Status::success) continue;
        ++a.successes;
        a.all_verified = a.all_verified && r->verified;
        a.sizes.push_back(r->lattice_size);
    }
    return a;
}

double mean(const auto& values) {
    double sum = 0.0;
    for (auto v : values) sum += static_cast<double>(v);
    return sum / static_cast<double>(values.size());
}

}  // namespace

void write_bench_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& [id, runs] : group(records)) {
        for (const auto* r : runs) {
            out << csv_prefix(*r, "run") << r->seed << ',' << r->rep << ',' << r->set_size << ','
                << (r->status == Status::success ? "success" : "failed") << ',';
            if (r->status == Status::success) out << r->lattice_size;
            out << ',' << (r->verified ? "true" : "false") << ',' << fixed(r->seconds, 6) << '\n';
        }
        const auto a = aggregate(runs);
        const auto& first = *runs.front();
        const std::string status = std::to_string(a.successes) + "/" + std::to_string(a.runs);
        for (const std::string_view kind : {"mean", "min", "max"}) {
            std::string m;
            std::string secs;
            if (!a.sizes.empty()) {
                if (kind == "mean") m = fixed(mean(a.sizes), 3);
                if (kind == "min") m = std::to_string(std::ranges::min(a.sizes));
                if (kind == "max") m = std::to_string(std::ranges::max(a.sizes));
            }
            if (kind == "mean") secs = fixed(mean(a.seconds), 6);
            if (kind == "min") secs = fixed(std::ranges::min(a.seconds), 6);
            if (kind == "max") secs = fixed(std::ranges::max(a.seconds), 6);
            out << csv_prefix(first, kind) << a.base_seed << ",," << first.set_size << ',' << status << ','
                << m << ',' << (a.all_verified ? "true" : "false") << ',' << secs << '\n';
        }
    }
}

void write_bench_json(const std::vector<RunRecord>& records, std::ostream& out) {
    auto runs = ordered_json::array();
    auto aggregates = ordered_json::array();
    for (const auto& [id, group_runs] : group(records)) {
        for (const auto* r : group_runs) {
            ordered_json j;
            j["experiment"] = r->experiment;
            j["family"] = r->family;
            j["d"] = r->d;
            j["N"] = r->n >= 0 ? ordered_json(r->n) : ordered_json(nullptr);
            j["threshold"] = r->threshold.empty() ? ordered_json(nullptr) : ordered_json(r->threshold);
            j["gamma"] = r->gamma.empty() ? ordered_json(nullptr) : ordered_json(r->gamma);
            j["mode"] = std::string(to_string(r->mode));
            j["K"] = r->retries;
            j["T"] = r->budget;
            j["seed"] = r->seed;
            j["rep"] = r->rep;
            j["set_size"] = r->set_size;
            j["status"] = r->status == Status::success ? "success" : "failed";
            j["M"] = r->status == Status::success ? ordered_json(r->lattice_size) : ordered_json(nullptr);
            j["verified"] = r->verified;
            j["seconds"] = r->seconds;
            runs.push_back(std::move(j));
        }
        const auto a = aggregate(group_runs);
        ordered_json j;
        j["experiment"] = id;
        j["runs"] = a.runs;
        j["successes"] = a.successes;
        if (a.sizes.empty()) {
            j["M_mean"] = nullptr;
            j["M_min"] = nullptr;
            j["M_max"] = nullptr;
        } else {
            j["M_mean"] = mean(a.sizes);
            j["M_min"] = std::ranges::min(a.sizes);
            j["M_max"] = std::ranges::max(a.sizes);
        }
        j["seconds_mean"] = mean(a.seconds);
        j["seconds_min"] = std::ranges::min(a.seconds);
        j["seconds_max"] = std::ranges::max(a.seconds);
        aggregates.push_back(std::move(j));
    }
    ordered_json doc;
    doc["runs"] = std::move(runs);
    doc["aggregates"] = std::move(aggregates);
    out << doc.dump(2) << '\n';
}

namespace {

void add_set_options(CLI::App* sub, SetSource& src) {
    sub->add_option("setfile", src.file, "Frequency set file (one frequency per line)");
    sub->add_option("--set", src.family, "Generate the set instead: cube, axiscross, anova2, whc")
        ->check(CLI::IsMember({"cube", "axiscross", "anova2", "whc"}));
    sub->add_option("--d", src.d, "Dimension");
    sub->add_option("--N", src.n, "Refinement (max |k_t|)");
    sub->add_option("--threshold", src.threshold, "Hyperbolic cross threshold (whc)");
    sub->add_option("--gamma", src.gamma, "Weights: j^-2 or a list like 1,1/4,1/9 (whc)");
    sub->add_option("--dmax", src.dmax, "Number of coordinates (whc); default from the weights");
}

CLI::Option* add_mode_option(CLI::App* sub, std::string& mode) {
    return sub->add_option("--mode", mode, "integration or reconstruction")
        ->check(CLI::IsMember({"integration", "reconstruction"}))
        ->capture_default_str();
}

int cmd_gen(const SetSource& src, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto set = build_set(src);
    if (out_path.empty()) {
        write_set(set, out);
        err << set.size() << '\n';
    } else {
        write_set(set, std::filesystem::path(out_path));
        out << set.size() << '\n';
    }
    return kExitOk;
}

int cmd_construct(const SetSource& src, std::uint64_t m, std::uint64_t budget, Mode mode,
                  std::uint64_t seed, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto set = build_set(src);
    if (m < 2) throw std::invalid_argument("--M must be >= 2");
    if (!is_prime(m)) err << "warning: M=" << m << " is not prime\n";

    const auto start = Clock::now();
    const CbcConfig config{.lattice_size = m, .candidate_budget = std::min(budget, m), .mode = mode, .seed = seed};
    const auto result = cbc_construct(set, config);
    const double secs = seconds_since(start);
    const bool verified = result.success() && verify(result.lattice(), set, mode);
    emit(result_json(result, set.dim(), verified, secs), out_path, out);
    return result.success() ? kExitOk : kExitSearchFailed;
}

int cmd_search(const SetSource& src, unsigned retries, std::uint64_t budget, Mode mode,
               std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    const auto set = build_set(src);
    const auto outcome = heuristic_search(set, retries, budget, mode, seed);
    const bool verified = outcome.success() && verify(outcome.lattice(), set, mode);
    emit(result_json(outcome, set.dim(), seed, verified), out_path, out);
    return outcome.success() ? kExitOk : kExitSearchFailed;
}

int cmd_verify(const SetSource& src, const std::string& lattice_path, Mode mode, std::ostream& out) {
    const auto set = build_set(src);
    const auto lattice = lattice_from_json(read_file(lattice_path));
    if (lattice.dim() != set.dim())
        throw std::invalid_argument("lattice dimension " + std::to_string(lattice.dim()) +
                                    " does not match set dimension " + std::to_string(set.dim()));
    const bool ok = verify(lattice, set, mode);
    out << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitSearchFailed;
}

int cmd_reconstruct_demo(const SetSource& src, unsigned retries, std::uint64_t budget, std::uint64_t seed,
                         const std::string& poly, const std::string& out_path, std::ostream& out) {
    const auto set = build_set(src);
    Rng rng(seed);
    const auto outcome = heuristic_search(set, retries, budget, Mode::reconstruction, rng);

    ordered_json j;
    j["status"] = outcome.success() ? "success" : "failed";
    j["d"] = set.dim();
    j["set_size"] = set.size();
    j["poly"] = poly;
    if (!outcome.success()) {
        j["M"] = nullptr;
        j["seconds"] = outcome.seconds;
        emit(j.dump(), out_path, out);
        return kExitSearchFailed;
    }

    const auto start = Clock::now();
    std::vector<std::complex<double>> coeffs(set.size());
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    if (poly == "random") {
        for (auto& c : coeffs) {
            const double re = unit();
            c = {re, unit()};
        }
    } else if (poly == "monomial") {
        coeffs[uniform_below(rng, coeffs.size())] = 1.0;
    }
    const auto lattice = outcome.lattice();
    const TrigPolynomial p(set, coeffs);
    const auto samples = sample_on_lattice(p, lattice);
    const auto recovered = reconstruct_coeffs(lattice, set, samples);

    double max_error = 0.0;
    double norm1 = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        max_error = std::max(max_error, std::abs(recovered[i] - coeffs[i]));
        norm1 += std::abs(coeffs[i]);
    }
    const double relative = norm1 > 0.0 ? max_error / norm1 : max_error;
    const bool ok = relative <= kRoundTripTolerance;

    j["M"] = lattice.size();
    j["z"] = lattice.generator();
    j["max_error"] = max_error;
    j["relative_error"] = relative;
    j["within_tolerance"] = ok;
    j["seconds"] = outcome.seconds + seconds_since(start);
    emit(j.dump(), out_path, out);
    return ok ? kExitOk : kExitSearchFailed;
}

int cmd_bench(const BenchSweep& sweep, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    const auto records = run_bench(sweep);
    std::ostringstream buf;
    if (format == "json")
        write_bench_json(records, buf);
    else
        write_bench_csv(records, buf);
    std::string text = buf.str();
    text.pop_back();  // emit adds the final newline
    emit(text, out_path, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-1 lattice construction by randomized component-by-component search", "rank1"};
    app.require_subcommand(1);

    SetSource src;
    std::string mode_text = "reconstruction";
    std::uint64_t m = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned retries = kDefaultRetries;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string lattice_path;
    std::string poly = "random";
    std::string format = "csv";
    std::string dims_text;
    std::string thresholds_text;
    std::size_t reps = 1;

    auto* gen = app.add_subcommand("gen", "Write a frequency set and print its cardinality");
    add_set_options(gen, src);
    gen->add_option("--out", out_path, "Output file (default: stdout, count on stderr)");

    auto* construct = app.add_subcommand("construct", "One randomized CBC run for a fixed lattice size");
    add_set_options(construct, src);
    construct->add_option("--M", m, "Lattice size (should be prime)")->required();
    construct->add_option("--T", budget, "Candidates per component")->capture_default_str();
    add_mode_option(construct, mode_text);
    construct->add_option("--seed", seed)->capture_default_str();
    construct->add_option("--out", out_path, "Result JSON file (default: stdout)");

    auto* search = app.add_subcommand("search", "Halving search for a small lattice size");
    add_set_options(search, src);
    search->add_option("--K", retries, "Attempts per lattice size")->capture_default_str()->check(CLI::PositiveNumber);
    search->add_option("--T", budget, "Candidates per component")->capture_default_str();
    add_mode_option(search, mode_text);
    search->add_option("--seed", seed)->capture_default_str();
    search->add_option("--out", out_path, "Result JSON file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a lattice against a set directly");
    add_set_options(verify_cmd, src);
    verify_cmd->add_option("--lattice", lattice_path, "Lattice JSON ({\"M\", \"z\"}, e.g. a result file)")
        ->required();
    add_mode_option(verify_cmd, mode_text);

    auto* demo = app.add_subcommand("reconstruct-demo", "Search, sample a polynomial, reconstruct, report the error");
    add_set_options(demo, src);
    demo->add_option("--K", retries)->capture_default_str()->check(CLI::PositiveNumber);
    demo->add_option("--T", budget)->capture_default_str();
    demo->add_option("--seed", seed)->capture_default_str();
    demo->add_option("--poly", poly, "random, zero or monomial")
        ->check(CLI::IsMember({"random", "zero", "monomial"}))
        ->capture_default_str();
    demo->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "Repeated searches over a family sweep");
    bench->add_option("--set", src.family, "cube, axiscross, anova2 or whc")
        ->check(CLI::IsMember({"cube", "axiscross", "anova2", "whc"}))
        ->required();
    bench->add_option("--d", dims_text, "Dimensions: 2..6 or 2,3,5");
    bench->add_option("--N", src.n);
    bench->add_option("--threshold", thresholds_text, "Thresholds for whc: 100,400");
    bench->add_option("--gamma", src.gamma)->capture_default_str();
    bench->add_option("--dmax", src.dmax);
    bench->add_option("--K", retries)->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_option("--T", budget)->capture_default_str();
    add_mode_option(bench, mode_text);
    bench->add_option("--seed", seed, "Repetition r uses seed + r")->capture_default_str();
    bench->add_option("--reps", reps)->capture_default_str();
    bench->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    bench->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (budget == 0) throw std::invalid_argument("--T must be >= 1");
        const Mode mode = parse_mode(mode_text);
        if (gen->parsed()) return cmd_gen(src, out_path, out, err);
        if (construct->parsed()) return cmd_construct(src, m, budget, mode, seed, out_path, out, err);
        if (search->parsed()) return cmd_search(src, retries, budget, mode, seed, out_path, out);
        if (verify_cmd->parsed()) return cmd_verify(src, lattice_path, mode, out);
        if (demo->parsed()) return cmd_reconstruct_demo(src, retries, budget, seed, poly, out_path, out);

        BenchSweep sweep;
        sweep.family = src.family;
        sweep.n = src.n;
        sweep.gamma = src.gamma;
        sweep.dmax = src.dmax;
        sweep.mode = mode;
        sweep.retries = retries;
        sweep.budget = budget;
        sweep.seed = seed;
        sweep.reps = reps;
        if (!dims_text.empty()) sweep.dims = parse_dim_list(dims_text);
        if (!thresholds_text.empty())
            for (auto t : split(thresholds_text, ',')) sweep.thresholds.emplace_back(t);
        return cmd_bench(sweep, format, out_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace rank1::cli
