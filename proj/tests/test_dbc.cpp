#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluster/dbc.hpp"
#include "cluster/exchange_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace cluster;

namespace {

const std::vector<int> kSl3Word{1, 2, 1, 2, 1, -1, -2, -1};

// Exchange matrix of the standard order-3 double word, columns at
// positions 3..6.
const std::vector<std::vector<long long>> kSl3Matrix = {
    {-1, 0, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0},  {-1, 0, 1, -1},
    {1, -1, 0, 1}, {0, 1, -1, 0}, {0, -1, 0, 1}, {0, 0, 0, -1},
};

std::vector<MinorIndex> sortedUnique(std::vector<MinorIndex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// All reduced words of a permutation in one-line notation, each as the
// sequence of reflection letters read left to right.
std::vector<std::vector<int>> reducedWords(std::vector<int> oneLine) {
    std::vector<std::vector<int>> out;
    bool isId = std::is_sorted(oneLine.begin(), oneLine.end());
    if (isId) return {{}};
    for (int t = 1; t + 1 <= static_cast<int>(oneLine.size()); ++t) {
        if (oneLine[t - 1] <= oneLine[t]) continue;
        std::swap(oneLine[t - 1], oneLine[t]);
        for (auto w : reducedWords(oneLine)) {
            w.push_back(t);
            out.push_back(std::move(w));
        }
        std::swap(oneLine[t - 1], oneLine[t]);
    }
    return out;
}

std::vector<std::vector<int>> allPermutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RatMatrix identity3() {
    RatMatrix x(3, 3);
    for (std::size_t i = 0; i < 3; ++i) x.at(i, i) = 1;
    return x;
}

// Every minor index of an n x n matrix of size 1..n.
std::vector<MinorIndex> allMinors(int n) {
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        subsets.push_back(s);
    }
    std::vector<MinorIndex> out;
    for (const auto& r : subsets)
        for (const auto& c : subsets)
            if (r.size() == c.size()) out.push_back({r, c});
    return out;
}

}  // namespace

TEST_CASE("word validation and combinatorics") {
    auto w = buildWord(2, kSl3Word);
    CHECK(w.m() == 8);
    CHECK(w.u == std::vector<int>{3, 2, 1});
    CHECK(w.v == std::vector<int>{3, 2, 1});
    CHECK(w.ex == std::vector<std::size_t>{3, 4, 5, 6});
    CHECK(w.kPlus == std::vector<std::size_t>{3, 4, 5, 7, 6, 8, 9, 9});
    CHECK(w.kMinus == std::vector<std::size_t>{0, 0, 1, 2, 3, 5, 4, 6});

    auto s = buildWord(1, {1, 1, -1});
    CHECK(s.m() == 3);
    CHECK(s.u == std::vector<int>{2, 1});
    CHECK(s.v == std::vector<int>{2, 1});
    CHECK(s.ex == std::vector<std::size_t>{2});

    CHECK_THROWS_AS(buildWord(2, {1, 2, 1, 1}), NotReduced);
    CHECK_THROWS_AS(buildWord(2, {1, 2, -1, -1}), NotReduced);
    CHECK_THROWS_AS(buildWord(2, {2, 1}), BadPrefix);
    CHECK_THROWS_AS(buildWord(3, {1, 2}), BadPrefix);
    CHECK_THROWS_AS(buildWord(2, {1, 2, 3}), IndexOutOfRange);
    CHECK_THROWS_AS(buildWord(2, {1, 2, 0}), IndexOutOfRange);
}

TEST_CASE("minor family of the standard order-3 word") {
    auto w = buildWord(2, kSl3Word);
    std::vector<std::string> names;
    for (const auto& idx : minorFamily(w)) names.push_back(idx.toString());
    CHECK(names == std::vector<std::string>{"D(1,3)", "D(12,23)", "D(1,2)",
                                            "D(12,12)", "D(1,1)", "D(2,1)",
                                            "D(23,12)", "D(3,1)"});
    // Prefix positions with no earlier negative letters keep their rows.
    CHECK(gammaDelta(w, 1).rows == std::vector<int>{1});
    CHECK(gammaDelta(w, 2).rows == std::vector<int>{1, 2});
    CHECK_THROWS_AS(gammaDelta(w, 0), IndexOutOfRange);
    CHECK_THROWS_AS(gammaDelta(w, 9), IndexOutOfRange);
}

TEST_CASE("frozen minors and the closed form") {
    auto w = buildWord(2, kSl3Word);
    std::vector<std::string> names;
    for (const auto& idx : frozenSet(w)) names.push_back(idx.toString());
    CHECK(names == std::vector<std::string>{"D(1,3)", "D(12,23)", "D(23,12)",
                                            "D(3,1)"});
    CHECK(sortedUnique(frozenSet(w)) == frozenSetClosedForm(w));

    auto s = buildWord(1, {1, 1, -1});
    CHECK(sortedUnique(frozenSet(s)) == frozenSetClosedForm(s));
    CHECK(frozenSet(s).size() == 2);

    // Another reduced word for the same pair of permutations gives the
    // same frozen minors.
    auto w2 = buildWord(2, {1, 2, 2, 1, 2, -2, -1, -2});
    CHECK(w2.u == w.u);
    CHECK(w2.v == w.v);
    CHECK(frozenSetClosedForm(w2) == frozenSetClosedForm(w));
    CHECK(sortedUnique(frozenSet(w2)) == sortedUnique(frozenSet(w)));
}

TEST_CASE("frozen minors match the closed form for every double word of S3 and S4") {
    for (int n : {3, 4}) {
        const int r = n - 1;
        for (const auto& uPerm : allPermutations(n)) {
            auto uWords = reducedWords(uPerm);
            for (const auto& vPerm : allPermutations(n)) {
                auto vWords = reducedWords(vPerm);
                std::vector<MinorIndex> closed;
                bool first = true;
                for (const auto& uw : uWords)
                    for (const auto& vw : vWords) {
                        // Every interleaving of the two words.
                        std::vector<int> pick(uw.size() + vw.size(), 0);
                        std::fill(pick.begin(), pick.begin() + uw.size(), 1);
                        std::sort(pick.begin(), pick.end(),
                                  std::greater<int>());
                        do {
                            std::vector<int> entries;
                            for (int j = 1; j <= r; ++j) entries.push_back(j);
                            std::size_t a = 0, b = 0;
                            for (int fromU : pick)
                                entries.push_back(fromU ? -uw[a++] : vw[b++]);
                            auto w = buildWord(r, entries);
                            CHECK(w.u == uPerm);
                            CHECK(w.v == vPerm);
                            auto frozen = frozenSet(w);
                            CHECK(frozen.size() == w.m() - w.ex.size());
                            if (first) {
                                closed = frozenSetClosedForm(w);
                                first = false;
                            }
                            CHECK(sortedUnique(frozen) == closed);
                        } while (std::prev_permutation(pick.begin(),
                                                       pick.end()));
                    }
            }
        }
    }
}

TEST_CASE("exchange matrix of a word") {
    auto w = buildWord(2, kSl3Word);
    auto b = bFromWord(w);
    CHECK(b.rowCount() == 8);
    CHECK(b.colCount() == 4);
    CHECK(b.ex() == std::vector<std::size_t>{2, 3, 4, 5});
    for (std::size_t p = 0; p < 8; ++p)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(b.entry(p, c) == kSl3Matrix[p][c]);

    std::vector<std::vector<long long>> principal(4, std::vector<long long>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) principal[i][j] = b.principal(i, j);
    auto res = classifyFiniteType(principal);
    CHECK(res.verdict == ClassificationResult::Verdict::FiniteType);
    CHECK(res.type == "D4");

    auto s = bFromWord(buildWord(1, {1, 1, -1}));
    CHECK(s.rowCount() == 3);
    CHECK(s.colCount() == 1);
    CHECK(s.entry(0, 0) == -1);
    CHECK(s.entry(1, 0) == 0);
    CHECK(s.entry(2, 0) == -1);
    CHECK(s.mutate(1).mutate(1) == s);
}

TEST_CASE("minor evaluation") {
    auto id = identity3();
    CHECK(evalMinor({{1}, {3}}, id) == 0);
    CHECK(evalMinor({{1, 2}, {1, 2}}, id) == 1);
    RatMatrix x(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        x.at(i, i) = 1;
        if (i + 1 < 3) x.at(i, i + 1) = 1;
    }
    CHECK(evalMinor({{1, 2}, {2, 3}}, x) == 1);
    CHECK_THROWS_AS(evalMinor({{1, 2}, {1}}, id), SizeMismatch);
    CHECK_THROWS_AS(evalMinor({{1}, {4}}, id), SizeMismatch);
}

TEST_CASE("total positivity criterion") {
    auto w = buildWord(2, kSl3Word);
    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        auto x = totallyPositiveSample(2, rng);
        CHECK(x.determinant() == 1);
        CHECK(tpTest(w, x));
        // The eight criterion minors certify all nineteen.
        for (const auto& idx : allMinors(3)) CHECK(evalMinor(idx, x) > 0);
    }
    CHECK_FALSE(tpTest(w, identity3()));
    RatMatrix two(3, 3);
    for (std::size_t i = 0; i < 3; ++i) two.at(i, i) = 2;
    CHECK_THROWS_AS(tpTest(w, two), NotUnimodular);
}

TEST_CASE("rejection-sampled matrices passing the criterion are totally positive") {
    auto w = buildWord(2, kSl3Word);
    Rng rng(13);
    int found = 0;
    for (int attempt = 0; attempt < 50000 && found < 3; ++attempt) {
        RatMatrix x(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                x.at(i, j) = Rat(rng.intIn(1, 9), rng.intIn(1, 9));
        Rat det = x.determinant();
        if (det == 0) continue;
        for (std::size_t j = 0; j < 3; ++j) {
            Rat scaled = x.at(0, j) / det;
            x.at(0, j) = scaled;
        }
        bool criterion = true;
        for (const auto& idx : minorFamily(w))
            criterion = criterion && evalMinor(idx, x) > 0;
        if (!criterion) continue;
        ++found;
        for (const auto& idx : allMinors(3)) CHECK(evalMinor(idx, x) > 0);
    }
    CHECK(found == 3);
}

TEST_CASE("exchange identities hold exactly") {
    auto w = buildWord(2, kSl3Word);
    Rng rng(7);
    auto report = exchangeIdentityCheck(w, 100, rng);
    CHECK(report.trials == 100);
    CHECK(report.verified + report.skipped == 100);
    CHECK(report.verified >= 90);

    // A vanishing exchanged minor is skipped, not failed.
    CHECK_FALSE(exchangeIdentityAt(w, identity3()));
    CHECK_THROWS_AS(exchangeIdentityAt(buildWord(1, {1, 1, -1}), identity3()),
                    WrongType);
}

TEST_CASE("the order-3 double cell has 16 cluster variables in 50 clusters") {
    auto w = buildWord(2, kSl3Word);
    auto g = explore(Seed::initial(bFromWord(w)));
    REQUIRE(g.complete);
    CHECK(g.nodes.size() == 50);
    auto vars = clusterVariables(g);
    REQUIRE(vars.size() == 16);

    // Identify each cluster variable, through its minor-evaluation
    // values at random totally positive points, with its closed form:
    // the 14 minors that are neither frozen nor the determinant, plus
    // the two cubics.
    auto family = minorFamily(w);
    auto frozen = frozenSetClosedForm(w);
    std::vector<MinorIndex> minorCandidates;
    for (const auto& idx : allMinors(3)) {
        if (idx.rows.size() == 3) continue;  // the determinant
        if (std::binary_search(frozen.begin(), frozen.end(), idx)) continue;
        minorCandidates.push_back(idx);
    }
    REQUIRE(minorCandidates.size() == 14);

    auto e = [](const RatMatrix& x, int i, int j) { return x.at(i - 1, j - 1); };
    auto cubicA = [&](const RatMatrix& x) {
        return e(x, 1, 2) * e(x, 2, 1) * e(x, 3, 3) -
               e(x, 1, 2) * e(x, 2, 3) * e(x, 3, 1) -
               e(x, 1, 3) * e(x, 2, 1) * e(x, 3, 2) +
               e(x, 1, 3) * e(x, 2, 2) * e(x, 3, 1);
    };
    auto cubicB = [&](const RatMatrix& x) {
        return e(x, 1, 1) * e(x, 2, 3) * e(x, 3, 2) -
               e(x, 1, 2) * e(x, 2, 3) * e(x, 3, 1) -
               e(x, 1, 3) * e(x, 2, 1) * e(x, 3, 2) +
               e(x, 1, 3) * e(x, 2, 2) * e(x, 3, 1);
    };

    Rng rng(17);
    const std::size_t points = 8;
    std::vector<std::vector<Rat>> varValues(vars.size());
    std::map<std::vector<Rat>, std::string> candidateValues;
    std::vector<std::vector<Rat>> minorVals(minorCandidates.size());
    std::vector<Rat> cubicAVals, cubicBVals;
    for (std::size_t t = 0; t < points; ++t) {
        auto x = totallyPositiveSample(2, rng);
        std::vector<Rat> f;
        for (const auto& idx : family) f.push_back(evalMinor(idx, x));
        for (std::size_t i = 0; i < vars.size(); ++i)
            varValues[i].push_back(vars[i].evalRational(f));
        for (std::size_t i = 0; i < minorCandidates.size(); ++i)
            minorVals[i].push_back(evalMinor(minorCandidates[i], x));
        cubicAVals.push_back(cubicA(x));
        cubicBVals.push_back(cubicB(x));
    }
    for (std::size_t i = 0; i < minorCandidates.size(); ++i)
        candidateValues[minorVals[i]] = minorCandidates[i].toString();
    candidateValues[cubicAVals] = "cubicA";
    candidateValues[cubicBVals] = "cubicB";
    REQUIRE(candidateValues.size() == 16);  // candidates are distinct

    std::set<std::string> matched;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        REQUIRE(candidateValues.count(varValues[i]));
        matched.insert(candidateValues[varValues[i]]);
    }
    CHECK(matched.size() == 16);  // bijective
    CHECK(matched.count("cubicA"));
    CHECK(matched.count("cubicB"));
}
