#include "rank1/freqset.hpp"
#include "rank1/modular.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rank1 {

namespace {


void check_component(std::int64_t v) {
    if (v > kMaxComponent || v < -kMaxComponent)
        throw std::invalid_argument("frequency component " + std::to_string(v) +
                                    " exceeds +-2^31-1");
}

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
    std::size_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::length_error(std::string(what) + ": size overflows");
    return r;
}

void check_cap(std::size_t needed, std::size_t cap, const char* what) {
    if (needed > cap)
        throw std::length_error(std::string(what) + ": " + std::to_string(needed) +
                                " exceeds size cap " + std::to_string(cap));
}

void check_order(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("N must be non-negative");
    check_component(n);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 mul128(u128 a, u128 b) {
    u128 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("weighted hyperbolic cross: weight product overflows");
    return r;
}

// Non-negative rational with 128-bit parts, kept reduced.
struct Ratio {
    u128 num = 1;
    u128 den = 1;

    void reduce() {
        const u128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

struct HyperbolicEnumerator {
    std::vector<Rational> gammas;  // gammas[j] is gamma_{j+1}
    u128 thr_num;
    u128 thr_den;
    std::size_t cap;
    std::vector<std::int64_t> prefix;
    std::vector<std::int64_t> out;
    std::size_t count = 0;

    // max(1, a / gamma) as a reduced ratio; gamma = p/q so a/gamma = a*q/p
    Ratio factor(std::size_t j, std::uint64_t a) const {
        const auto& g = gammas[j];
        Ratio f{mul128(a, static_cast<u128>(g.den())), static_cast<u128>(g.num())};
        if (f.num <= f.den) return {};
        f.reduce();
        return f;
    }

    bool within(const Ratio& p) const {
        return mul128(p.num, thr_den) <= mul128(thr_num, p.den);
    }

    void emit() {
        if (++count > cap)
            throw std::length_error("weighted hyperbolic cross exceeds size cap " + std::to_string(cap));
        out.insert(out.end(), prefix.begin(), prefix.end());
    }

    void walk(std::size_t j, const Ratio& so_far) {
        if (j == gammas.size()) {
            emit();
            return;
        }
        prefix[j] = 0;
        walk(j + 1, so_far);
        // every factor is >= 1 and grows with |k_j|, so stop at the first miss
        for (std::uint64_t a = 1;; ++a) {
            const Ratio f = factor(j, a);
            Ratio next{mul128(so_far.num, f.num), mul128(so_far.den, f.den)};
            next.reduce();
            if (!within(next)) break;
            if (a > static_cast<std::uint64_t>(kMaxComponent))
                throw std::overflow_error("weighted hyperbolic cross: component exceeds 2^31-1");
            for (std::int64_t sign : {1, -1}) {
                prefix[j] = sign * static_cast<std::int64_t>(a);
                walk(j + 1, next);
            }
        }
        prefix[j] = 0;
    }
};

}  // namespace

FrequencySet FrequencySet::from_flat(std::size_t dim, std::vector<std::int64_t> coords) {
    if (dim == 0) throw std::invalid_argument("frequency set dimension must be >= 1");
    if (coords.empty()) throw std::invalid_argument("frequency set must not be empty");
    if (coords.size() % dim != 0)
        throw std::invalid_argument("coordinate count is not a multiple of the dimension");
    for (auto v : coords) check_component(v);

    const std::size_t n = coords.size() / dim;
    auto row = [&](std::size_t i) { return coords.begin() + static_cast<std::ptrdiff_t>(i * dim); };
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(dim),
                                            row(b), row(b) + static_cast<std::ptrdiff_t>(dim));
    };
    auto equal = [&](std::size_t a, std::size_t b) {
        return std::equal(row(a), row(a) + static_cast<std::ptrdiff_t>(dim), row(b));
    };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), equal), order.end());

    std::vector<std::int64_t> sorted;
    sorted.reserve(order.size() * dim);
    for (auto i : order) sorted.insert(sorted.end(), row(i), row(i) + static_cast<std::ptrdiff_t>(dim));
    return FrequencySet(dim, std::move(sorted));
}

FrequencySet FrequencySet::from_rows(std::size_t dim,
                                     const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> flat;
    flat.reserve(rows.size() * dim);
    for (const auto& r : rows) {
        if (r.size() != dim) throw std::invalid_argument("frequency has wrong dimension");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_flat(dim, std::move(flat));
}

std::vector<std::int64_t> FrequencySet::column(std::size_t t) const {
    if (t >= dim_) throw std::out_of_range("column index out of range");
    std::vector<std::int64_t> col(size());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = coords_[i * dim_ + t];
    return col;
}

bool FrequencySet::contains(std::span<const std::int64_t> k) const {
    if (k.size() != dim_) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto row = (*this)[mid];
        if (std::lexicographical_compare(row.begin(), row.end(), k.begin(), k.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::ranges::equal((*this)[lo], k);
}

FrequencySet FrequencySet::project(std::size_t prefix) const {
    if (prefix == 0 || prefix > dim_) throw std::out_of_range("projection length out of range");
    std::vector<std::int64_t> flat;
    flat.reserve(size() * prefix);
    for (std::size_t i = 0; i < size(); ++i) {
        const auto row = (*this)[i];
        flat.insert(flat.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(prefix));
    }
    return from_flat(prefix, std::move(flat));
}

WeightSpec WeightSpec::explicit_list(std::vector<Rational> gammas) {
    if (gammas.empty()) throw std::invalid_argument("weight list must not be empty");
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        if (gammas[j].num() <= 0) throw std::invalid_argument("weights must be positive");
        if (j > 0 && gammas[j - 1] < gammas[j])
            throw std::invalid_argument("weights must be non-increasing");
    }
    return WeightSpec{Kind::explicit_list, std::move(gammas)};
}

Rational WeightSpec::gamma(std::size_t j) const {
    if (j == 0) throw std::out_of_range("weights are indexed from 1");
    if (kind_ == Kind::inverse_square) {
        const auto jj = static_cast<std::int64_t>(j);
        return Rational(1, jj * jj);
    }
    if (j > gammas_.size()) throw std::out_of_range("weight list shorter than requested dimension");
    return gammas_[j - 1];
}

FrequencySet gen_cube(std::size_t d, std::int64_t n, std::size_t cap) {
    if (d == 0) throw std::invalid_argument("dimension must be >= 1");
    check_order(n);
    const auto side = static_cast<std::size_t>(2 * n + 1);
    std::size_t items = 1;
    for (std::size_t t = 0; t < d; ++t) items = checked_mul(items, side, "cube");
    check_cap(checked_mul(items, d, "cube"), cap, "cube");

    std::vector<std::int64_t> flat;
    flat.reserve(items * d);
    std::vector<std::int64_t> k(d, -n);
    for (std::size_t i = 0; i < items; ++i) {
        flat.insert(flat.end(), k.begin(), k.end());
        for (std::size_t t = d; t-- > 0;) {
            if (k[t] < n) {
                ++k[t];
                break;
            }
            k[t] = -n;
        }
    }
    return FrequencySet::from_flat(d, std::move(flat));
}

FrequencySet gen_axis_cross(std::size_t d, std::int64_t n, std::size_t cap) {
    if (d == 0) throw std::invalid_argument("dimension must be >= 1");
    check_order(n);
    const std::size_t items = checked_mul(2 * d, static_cast<std::size_t>(n), "axis cross") + 1;
    check_cap(items, cap, "axis cross");

    std::vector<std::int64_t> flat(d, 0);
    flat.reserve(items * d);
    for (std::size_t t = 0; t < d; ++t)
        for (std::int64_t a = 1; a <= n; ++a)
            for (std::int64_t v : {a, -a}) {
                std::vector<std::int64_t> k(d, 0);
                k[t] = v;
                flat.insert(flat.end(), k.begin(), k.end());
            }
    return FrequencySet::from_flat(d, std::move(flat));
}

FrequencySet gen_superposition2(std::size_t d, std::int64_t n, std::size_t cap) {
    if (d < 2) throw std::invalid_argument("superposition set needs dimension >= 2");
    check_order(n);
    const auto un = static_cast<std::size_t>(n);
    // 2nd(1 + (d-1)n) + 1
    const std::size_t items =
        checked_mul(checked_mul(2 * un, d, "superposition set"), 1 + checked_mul(d - 1, un, "superposition set"),
                    "superposition set") + 1;
    check_cap(items, cap, "superposition set");

    std::vector<std::int64_t> flat(d, 0);
    flat.reserve(items * d);
    std::vector<std::int64_t> k(d, 0);
    auto push = [&] { flat.insert(flat.end(), k.begin(), k.end()); };
    for (std::size_t j = 0; j < d; ++j) {
        for (std::int64_t a = -n; a <= n; ++a) {
            if (a == 0) continue;
            k[j] = a;
            push();
            for (std::size_t l = j + 1; l < d; ++l) {
                for (std::int64_t b = -n; b <= n; ++b) {
                    if (b == 0) continue;
                    k[l] = b;
                    push();
                }
                k[l] = 0;
            }
        }
        k[j] = 0;
    }
    return FrequencySet::from_flat(d, std::move(flat));
}

FrequencySet gen_weighted_hyperbolic(const WeightSpec& weights, const Rational& threshold,
                                     std::size_t dmax, std::size_t cap) {
    if (threshold.num() <= 0) throw std::invalid_argument("threshold must be positive");
    // threshold < 1 admits nothing, not even the origin
    if (threshold < Rational(1)) throw std::invalid_argument("threshold must be >= 1");
    if (dmax == 0) throw std::invalid_argument("dmax must be >= 1");

    HyperbolicEnumerator e{.gammas = {},
                           .thr_num = static_cast<u128>(threshold.num()),
                           .thr_den = static_cast<u128>(threshold.den()),
                           .cap = cap,
                           .prefix = std::vector<std::int64_t>(dmax, 0),
                           .out = {}};
    e.gammas.reserve(dmax);
    for (std::size_t j = 1; j <= dmax; ++j) e.gammas.push_back(weights.gamma(j));

    e.walk(0, Ratio{});
    return FrequencySet::from_flat(dmax, std::move(e.out));
}

FrequencySet difference_set(const FrequencySet& set, std::size_t cap) {
    const std::size_t n = set.size();
    const std::size_t d = set.dim();
    check_cap(checked_mul(n, n, "difference set"), cap, "difference set");

    std::vector<std::int64_t> flat;
    flat.reserve(n * n * d);
    for (std::size_t i = 0; i < n; ++i) {
        const auto h = set[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto k = set[j];
            for (std::size_t t = 0; t < d; ++t) {
                const std::int64_t v = h[t] - k[t];
                if (v > kMaxComponent || v < -kMaxComponent)
                    throw std::overflow_error("difference set component exceeds 2^31-1");
                flat.push_back(v);
            }
        }
    }
    return FrequencySet::from_flat(d, std::move(flat));
}

std::uint64_t expansion(const FrequencySet& set) {
    std::uint64_t best = 0;
    for (std::size_t t = 0; t < set.dim(); ++t) {
        std::int64_t lo = set[0][t], hi = set[0][t];
        for (std::size_t i = 1; i < set.size(); ++i) {
            lo = std::min(lo, set[i][t]);
            hi = std::max(hi, set[i][t]);
        }
        best = std::max(best, static_cast<std::uint64_t>(hi - lo));
    }
    return best;
}

std::uint64_t max_abs(const FrequencySet& set) {
    std::uint64_t best = 0;
    for (auto v : set.flat()) best = std::max(best, static_cast<std::uint64_t>(v < 0 ? -v : v));
    return best;
}

FrequencySet read_set(std::istream& in) {
    std::vector<std::int64_t> flat;
    std::size_t dim = 0;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("frequency set line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::size_t cols = 0;
        std::size_t pos = first;
        while (pos < line.size()) {
            const auto end = std::min(line.find_first_of(" \t", pos), line.size());
            const std::string_view tok(line.data() + pos, end - pos);
            std::int64_t v = 0;
            const char* b = tok.data();
            if (!tok.empty() && tok.front() == '+') ++b;
            auto [ptr, ec] = std::from_chars(b, tok.data() + tok.size(), v);
            if (ec == std::errc::result_out_of_range) fail("integer overflow in '" + std::string(tok) + "'");
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                fail("malformed integer '" + std::string(tok) + "'");
            if (v > kMaxComponent || v < -kMaxComponent) fail("component exceeds 2^31-1");
            flat.push_back(v);
            ++cols;
            pos = line.find_first_not_of(" \t", end);
            if (pos == std::string::npos) break;
        }
        if (dim == 0)
            dim = cols;
        else if (cols != dim)
            fail("expected " + std::to_string(dim) + " columns, found " + std::to_string(cols));
    }
    if (dim == 0) throw std::runtime_error("frequency set file contains no frequencies");
    return FrequencySet::from_flat(dim, std::move(flat));
}

FrequencySet read_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open frequency set file " + path.string());
    return read_set(in);
}

void write_set(const FrequencySet& set, std::ostream& out) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto row = set[i];
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (t) out << ' ';
            out << row[t];
        }
        out << '\n';
    }
}

void write_set(const FrequencySet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write frequency set file " + path.string());
    write_set(set, out);
    if (!out) throw std::runtime_error("error writing frequency set file " + path.string());
}

}  // namespace rank1
