#include "rank1/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rank1 {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Rank1Lattice& lattice) {
    ordered_json j;
    j["d"] = lattice.dim();
    j["M"] = lattice.size();
    j["z"] = lattice.generator();
    return j.dump();
}

Rank1Lattice lattice_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        auto lattice = Rank1Lattice(j.at("M").get<std::uint64_t>(),
                                    j.at("z").get<std::vector<std::uint64_t>>());
        if (j.contains("d") && j.at("d").get<std::size_t>() != lattice.dim())
            throw std::runtime_error("lattice JSON: \"d\" does not match length of \"z\"");
        return lattice;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("lattice JSON: ") + e.what());
    }
}

std::string to_json(const TrigPolynomial& poly) {
    ordered_json j;
    auto support = ordered_json::array();
    for (std::size_t i = 0; i < poly.support.size(); ++i) {
        const auto k = poly.support[i];
        support.push_back(std::vector<std::int64_t>(k.begin(), k.end()));
    }
    auto coeffs = ordered_json::array();
    for (const auto& c : poly.coeffs) coeffs.push_back({c.real(), c.imag()});
    j["support"] = std::move(support);
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

TrigPolynomial polynomial_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto rows = j.at("support").get<std::vector<std::vector<std::int64_t>>>();
        const auto pairs = j.at("coeffs").get<std::vector<std::array<double, 2>>>();
        if (rows.empty()) throw std::runtime_error("polynomial JSON: empty support");
        if (rows.size() != pairs.size())
            throw std::runtime_error("polynomial JSON: support and coeffs differ in length");

        // the set is normalized on construction, so carry coefficients along by frequency
        auto support = FrequencySet::from_rows(rows.front().size(), rows);
        if (support.size() != rows.size())
            throw std::runtime_error("polynomial JSON: duplicate frequencies in support");
        std::vector<std::complex<double>> coeffs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::size_t lo = 0, hi = support.size();
            while (lo + 1 < hi) {
                const std::size_t mid = (lo + hi) / 2;
                const auto row = support[mid];
                if (std::lexicographical_compare(rows[i].begin(), rows[i].end(), row.begin(), row.end()))
                    hi = mid;
                else
                    lo = mid;
            }
            coeffs[lo] = {pairs[i][0], pairs[i][1]};
        }
        return TrigPolynomial(std::move(support), std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("polynomial JSON: ") + e.what());
    }
}

}  // namespace rank1
