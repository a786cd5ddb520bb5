#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rank1/lattice.hpp"
#include "rank1/msearch.hpp"

using namespace rank1;

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_TRUE(is_prime(8329));
    EXPECT_FALSE(is_prime(561));
}

TEST(IsPrime, MatchesSieve) {
    const auto prime = oracle::sieve(200000);
    for (std::uint64_t n = 0; n < prime.size(); ++n) ASSERT_EQ(is_prime(n), prime[n]) << n;
}

TEST(IsPrime, LargeValues) {
    EXPECT_TRUE(is_prime(18446744073709551557ull));        // 2^64 - 59
    EXPECT_FALSE(is_prime(18446744073709551559ull));
    EXPECT_TRUE(is_prime(1000000007));
    EXPECT_FALSE(is_prime(3215031751ull));                 // strong pseudoprime to 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ull));        // strong pseudoprime to bases up to 23
    EXPECT_FALSE(is_prime(4294967297ull));                 // 641 * 6700417
    for (std::uint64_t n = 4294967000ull; n < 4294968000ull; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(NextPrime, Examples) {
    EXPECT_EQ(next_prime(Rational(7, 2)), 5u);
    EXPECT_EQ(next_prime(std::uint64_t{2}), 3u);
    EXPECT_EQ(next_prime(Rational(17, 2)), 11u);
    EXPECT_EQ(next_prime(std::uint64_t{0}), 2u);
    EXPECT_EQ(next_prime(std::uint64_t{1}), 2u);
    EXPECT_EQ(next_prime(Rational(3, 2)), 2u);
    EXPECT_EQ(next_prime(std::uint64_t{164}), 167u);
    EXPECT_THROW(next_prime(std::uint64_t{18446744073709551557ull}), std::overflow_error);
}

TEST(NextPrime, HalvingTable) {
    // p1 -> nextprime(p1 / 2)
    const std::pair<std::uint64_t, std::uint64_t> table[] = {{3, 2}, {5, 3}, {7, 5}, {11, 7}, {13, 7}, {17, 11}};
    for (auto [p1, p2] : table) EXPECT_EQ(next_prime(Rational(static_cast<std::int64_t>(p1), 2)), p2) << p1;
}

TEST(NextPrime, HalvingBound) {
    const auto prime = oracle::sieve(100000);
    for (std::uint64_t p = 3; p <= 100000; ++p) {
        if (!prime[p]) continue;
        const auto q = next_prime(Rational(static_cast<std::int64_t>(p), 2));
        ASSERT_GT(2 * q, p);
        ASSERT_LE(7 * q, 5 * p) << p;
    }
}

TEST(InitialSize, Examples) {
    EXPECT_EQ(initial_size(gen_cube(2, 4), Mode::integration), 167u);
    EXPECT_EQ(initial_size(gen_cube(2, 8), Mode::integration), 587u);
    const auto square = FrequencySet::from_rows(2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(expansion(square), 2u);
    EXPECT_EQ(initial_size(square, Mode::reconstruction), 17u);
    EXPECT_EQ(initial_size(FrequencySet::from_rows(3, {{0, 0, 0}}), Mode::integration), 5u);
    // max(I) dominates for a sparse wide set
    EXPECT_EQ(initial_size(FrequencySet::from_rows(1, {{0}, {100}}), Mode::integration), 211u);
    EXPECT_EQ(initial_size(FrequencySet::from_rows(1, {{-50}, {50}}), Mode::reconstruction), 211u);
}

TEST(HeuristicSearch, OneDimensionalHalvingChain) {
    const auto set = FrequencySet::from_rows(1, {{0}, {1}});
    const auto out = heuristic_search(set, 5, 100, Mode::reconstruction, 0);
    ASSERT_TRUE(out.success());
    EXPECT_EQ(out.lattice_size, 2u);
    ASSERT_EQ(out.trail.size(), 3u);
    EXPECT_EQ(out.trail[0].lattice_size, 5u);
    EXPECT_EQ(out.trail[1].lattice_size, 3u);
    EXPECT_EQ(out.trail[2].lattice_size, 2u);
    for (const auto& t : out.trail) {
        EXPECT_TRUE(t.succeeded);
        EXPECT_EQ(t.attempts, 1u);
    }
}

TEST(HeuristicSearch, StopsAfterKFailures) {
    const auto set = gen_axis_cross(3, 6);
    for (unsigned k : {1u, 3u, 5u}) {
        const auto out = heuristic_search(set, k, 10, Mode::reconstruction, 7);
        ASSERT_TRUE(out.success());
        ASSERT_GE(out.trail.size(), 2u);
        for (std::size_t i = 0; i + 1 < out.trail.size(); ++i) {
            EXPECT_TRUE(out.trail[i].succeeded);
            EXPECT_LE(out.trail[i].attempts, k);
            EXPECT_EQ(out.trail[i + 1].lattice_size, next_prime(out.trail[i].lattice_size / 2));
        }
        const auto& last = out.trail.back();
        if (!last.succeeded) {
            EXPECT_EQ(last.attempts, k);
        }
        // the reported lattice is the last success
        const auto it = std::find_if(out.trail.rbegin(), out.trail.rend(), [](const auto& t) { return t.succeeded; });
        EXPECT_EQ(out.lattice_size, it->lattice_size);
        EXPECT_TRUE(verify_reconstruction(out.lattice(), set));
    }
}

TEST(HeuristicSearch, FirstSizeAlwaysWorksForSmallSets) {
    std::mt19937_64 pick(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Mode mode = trial % 2 ? Mode::integration : Mode::reconstruction;
        const auto set = oracle::random_set(pick, 1 + trial % 5, 6, 25);
        const auto out = heuristic_search(set, 3, 50, mode, trial);
        ASSERT_TRUE(out.success());
        EXPECT_EQ(out.trail.front().lattice_size, initial_size(set, mode));
        const auto rows = oracle::rows(set);
        const auto& z = out.generator;
        EXPECT_TRUE(mode == Mode::integration ? oracle::integrates(rows, z, out.lattice_size)
                                              : oracle::reconstructs(rows, z, out.lattice_size));
    }
}

TEST(HeuristicSearch, IntegrationOnSuperpositionSet) {
    const auto set = gen_superposition2(2, 64);
    const auto out = heuristic_search(set, 5, 100, Mode::integration, 1);
    ASSERT_TRUE(out.success());
    EXPECT_GE(out.lattice_size, 129u);
    EXPECT_LE(out.lattice_size, 32776u);
    EXPECT_TRUE(verify_integration(out.lattice(), set));
}

TEST(HeuristicSearch, Deterministic) {
    const auto set = gen_axis_cross(5, 16);
    auto a = heuristic_search(set, 5, 100, Mode::reconstruction, 42);
    auto b = heuristic_search(set, 5, 100, Mode::reconstruction, 42);
    EXPECT_EQ(a.lattice_size, b.lattice_size);
    EXPECT_EQ(a.generator, b.generator);
    ASSERT_EQ(a.trail.size(), b.trail.size());
    for (std::size_t i = 0; i < a.trail.size(); ++i) {
        EXPECT_EQ(a.trail[i].lattice_size, b.trail[i].lattice_size);
        EXPECT_EQ(a.trail[i].attempts, b.trail[i].attempts);
        EXPECT_EQ(a.trail[i].succeeded, b.trail[i].succeeded);
    }
}

TEST(HeuristicSearch, RejectsBadParameters) {
    const auto set = gen_cube(1, 1);
    EXPECT_THROW(heuristic_search(set, 0, 10, Mode::integration, 0), std::invalid_argument);
    EXPECT_THROW(heuristic_search(set, 1, 0, Mode::integration, 0), std::invalid_argument);
}
