#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluster/exchange.hpp"

#include <nlohmann/json.hpp>

using namespace cluster;

namespace {

using Rows = std::vector<std::vector<long long>>;

ExtendedExchangeMatrix rank2(long long b, long long c) {
    return ExtendedExchangeMatrix::validate({{0, b}, {-c, 0}}, {0, 1});
}

// The 8x4 matrix whose columns are indexed by ex = {3,4,5,6} (1-based).
const Rows kSl3Matrix = {
    {-1, 0, 0, 0}, {1, -1, 0, 0},  {0, 1, -1, 0}, {-1, 0, 1, -1},
    {1, -1, 0, 1}, {0, 1, -1, 0},  {0, -1, 0, 1}, {0, 0, 0, -1},
};

ExtendedExchangeMatrix sl3() {
    return ExtendedExchangeMatrix::validate(kSl3Matrix, {2, 3, 4, 5});
}

// Random valid B~ built by symmetrizing random sign-consistent data.
ExtendedExchangeMatrix randomMatrix(Rng& rng, std::size_t maxM = 5) {
    while (true) {
        std::size_t m = static_cast<std::size_t>(rng.intIn(1, static_cast<long>(maxM)));
        std::size_t n = static_cast<std::size_t>(rng.intIn(1, static_cast<long>(m)));
        Rows rows(m, std::vector<long long>(n, 0));
        // Skew-symmetric principal part keeps validity trivial.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                long long v = rng.intIn(-2, 2);
                rows[i][j] = v;
                rows[j][i] = -v;
            }
        for (std::size_t i = n; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = rng.intIn(-2, 2);
        std::vector<std::size_t> ex(n);
        for (std::size_t j = 0; j < n; ++j) ex[j] = j;
        try {
            return ExtendedExchangeMatrix::validate(rows, ex);
        } catch (const RankDeficient&) {
            continue;
        }
    }
}

}  // namespace

TEST_CASE("validation finds symmetrizers") {
    auto m1 = ExtendedExchangeMatrix::validate({{0, 1}, {-1, 0}}, {0, 1});
    CHECK(m1.skewSymmetrizer() == std::vector<Int>{1, 1});
    auto m2 = ExtendedExchangeMatrix::validate({{0, 2}, {-1, 0}}, {0, 1});
    CHECK(m2.skewSymmetrizer() == std::vector<Int>{1, 2});
    CHECK_THROWS_AS(ExtendedExchangeMatrix::validate({{0, 1}, {1, 0}}, {0, 1}),
                    NotSkewSymmetrizable);
    CHECK_THROWS_AS(ExtendedExchangeMatrix::validate({{0, 0}, {0, 0}}, {0, 1}),
                    RankDeficient);
}

TEST_CASE("matrix mutation basics") {
    auto m = rank2(1, 1);
    auto mu = m.mutate(0);
    CHECK(mu.entry(0, 1) == -1);
    CHECK(mu.entry(1, 0) == 1);
    CHECK(mu.mutate(0) == m);
}

TEST_CASE("mutation of the SL3 double-cell matrix at direction 3") {
    auto m = sl3();
    auto mu = m.mutate(2);
    // Hand oracle: row/column 3 flips, entries (p,j) with b_p3*b_3j > 0
    // pick up b_p3*b_3j.
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            long long expected;
            if (i == 2 || m.ex()[j] == 2) {
                expected = -m.entry(i, j);
            } else {
                long long bik = m.entry(i, 0), bkj = m.entry(2, j);
                expected = m.entry(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
            CHECK(mu.entry(i, j) == expected);
        }
    CHECK(mu.mutate(2) == m);
}

TEST_CASE("matrix mutation is involutive on random inputs") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        auto m = randomMatrix(rng);
        for (std::size_t k : m.ex()) CHECK(m.mutate(k).mutate(k) == m);
    }
}

TEST_CASE("mutation preserves validity along random sequences") {
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        auto m = randomMatrix(rng);
        for (int step = 0; step < 6; ++step) {
            std::size_t k = m.ex()[static_cast<std::size_t>(
                rng.intIn(0, static_cast<long>(m.colCount() - 1)))];
            m = m.mutate(k);
            Rows rows(m.rowCount(), std::vector<long long>(m.colCount()));
            for (std::size_t i = 0; i < m.rowCount(); ++i)
                for (std::size_t j = 0; j < m.colCount(); ++j) rows[i][j] = m.entry(i, j);
            CHECK_NOTHROW(ExtendedExchangeMatrix::validate(rows, m.ex()));
        }
    }
}

TEST_CASE("exchange partner in rank 2") {
    auto a11 = Seed::initial(rank2(1, 1));
    CHECK(exchangePartner(a11, 0) == LaurentPoly::parse("x1^-1*x2 + x1^-1", 2));
    auto abc = Seed::initial(rank2(2, 3));
    // Mutation at 1 uses column 1 = (0,-3): numerator x2^3 + 1.
    CHECK(exchangePartner(abc, 0) == LaurentPoly::parse("x1^-1*x2^3 + x1^-1", 2));
    CHECK(exchangePartner(abc, 1) == LaurentPoly::parse("x1^2*x2^-1 + x2^-1", 2));
}

TEST_CASE("degenerate matrices survive a JSON round trip") {
    auto m = ExtendedExchangeMatrix::validate({{0}}, {0}, false);
    auto j = m.toJson();
    CHECK(j.value("degenerate", false));
    CHECK(ExtendedExchangeMatrix::fromJson(j) == m);
    j.erase("degenerate");
    CHECK_THROWS_AS(ExtendedExchangeMatrix::fromJson(j), RankDeficient);
}

TEST_CASE("empty-column exchange gives 2/x") {
    // The 1x1 zero matrix is rank deficient but still mutates; both
    // monomials in the exchange relation are empty products.
    auto m = ExtendedExchangeMatrix::validate({{0}}, {0}, false);
    auto s = Seed::initial(m);
    CHECK(exchangePartner(s, 0) == LaurentPoly::parse("2*x1^-1", 1));
    CHECK(seedMutate(seedMutate(s, 0), 0) == s);
}

TEST_CASE("seed mutation is involutive and has period 5 for A(1,1)") {
    auto s0 = Seed::initial(rank2(1, 1));
    CHECK(seedMutate(seedMutate(s0, 0), 0) == s0);

    // Mutate 1,2,1,2,1: the cluster returns as {y2, y1}.
    Seed s = s0;
    for (std::size_t k : {0u, 1u, 0u, 1u, 0u}) s = seedMutate(s, k);
    CHECK(s.variables[0] == s0.variables[1]);
    CHECK(s.variables[1] == s0.variables[0]);
}

TEST_CASE("frozen variables never change") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        auto m = randomMatrix(rng);
        Seed s = Seed::initial(m);
        Seed s0 = s;
        for (int step = 0; step < 4; ++step) {
            std::size_t k = m.ex()[static_cast<std::size_t>(
                rng.intIn(0, static_cast<long>(m.colCount() - 1)))];
            s = seedMutate(s, k);
        }
        for (std::size_t i = 0; i < s.matrix.rowCount(); ++i)
            if (!s.matrix.isExchangeable(i)) CHECK(s.variables[i] == s0.variables[i]);
    }
}

TEST_CASE("laurent phenomenon along random mutation paths") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        auto m = randomMatrix(rng);
        Seed s = Seed::initial(m);
        for (int step = 0; step < 6; ++step) {
            std::size_t k = m.ex()[static_cast<std::size_t>(
                rng.intIn(0, static_cast<long>(m.colCount() - 1)))];
            CHECK_NOTHROW(s = seedMutate(s, k));
        }
    }
}

TEST_CASE("seed JSON round-trip") {
    auto s = seedMutate(Seed::initial(sl3()), 2);
    auto j = s.toJson();
    CHECK(Seed::fromJson(j) == s);
    CHECK(j.at("m") == 8);
    CHECK(j.at("n") == 4);
    CHECK(j.at("ex") == nlohmann::json::array({3, 4, 5, 6}));
}
