#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluster/exchange_graph.hpp"
#include "cluster/root_system.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cluster;

namespace {

using Rows = std::vector<std::vector<long long>>;

Seed rank2Seed(long long b, long long c) {
    return Seed::initial(ExtendedExchangeMatrix::validate({{0, b}, {-c, 0}}, {0, 1}));
}

Seed bipartiteSeed(const std::string& type) {
    auto rs = buildRootSystem(type);
    std::vector<std::size_t> ex(rs.rank());
    std::iota(ex.begin(), ex.end(), 0);
    return Seed::initial(
        ExtendedExchangeMatrix::validate(bFromCartan(rs), ex, false));
}

const Rows kSl3Matrix = {
    {-1, 0, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, 0, 1, -1},
    {1, -1, 0, 1}, {0, 1, -1, 0}, {0, -1, 0, 1}, {0, 0, 0, -1},
};

std::vector<std::size_t> degrees(const ExchangeGraph& g) {
    std::vector<std::size_t> deg(g.nodes.size(), 0);
    for (const auto& e : g.edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

}  // namespace

TEST_CASE("rank-2 exploration periods") {
    auto g11 = explore(rank2Seed(1, 1));
    CHECK(g11.complete);
    CHECK(g11.nodes.size() == 5);
    CHECK(g11.edges.size() == 5);
    for (std::size_t d : degrees(g11)) CHECK(d == 2);
    CHECK(clusterVariables(g11).size() == 5);

    auto g13 = explore(rank2Seed(1, 3));
    CHECK(g13.complete);
    CHECK(g13.nodes.size() == 8);

    auto g22 = explore(rank2Seed(2, 2), ExploreBounds{100, 100000});
    CHECK_FALSE(g22.complete);
    CHECK(g22.nodes.size() == 100);
    CHECK_THROWS_AS(clusterVariables(g22), IncompleteGraph);
}

TEST_CASE("canonicalization is relabeling-invariant") {
    Seed s = bipartiteSeed("A3");
    s = seedMutate(seedMutate(s, 0), 1);
    // Relabel the exchangeable positions by the cycle 0 -> 1 -> 2 -> 0.
    std::vector<std::size_t> perm{1, 2, 0};
    Rows rows(3, std::vector<long long>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            rows[i][j] = s.matrix.entry(perm[i], perm[j]);
    Seed relabeled{.variables = {s.variables[perm[0]], s.variables[perm[1]],
                                 s.variables[perm[2]]},
                   .matrix = ExtendedExchangeMatrix::validate(rows, {0, 1, 2}, false)};
    CHECK(seedKey(canonicalSeed(s)) == seedKey(canonicalSeed(relabeled)));
    CHECK(canonicalSeed(s) == canonicalSeed(relabeled));
}

TEST_CASE("finite type classification") {
    auto g2 = classifyFiniteType({{0, 1}, {-3, 0}});
    CHECK(g2.verdict == ClassificationResult::Verdict::FiniteType);
    CHECK(g2.type == "G2");

    auto inf = classifyFiniteType({{0, 2}, {-2, 0}});
    CHECK(inf.verdict == ClassificationResult::Verdict::InfiniteType);

    Rows principal(4, std::vector<long long>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) principal[i][j] = kSl3Matrix[2 + i][j];
    auto d4 = classifyFiniteType(principal);
    CHECK(d4.verdict == ClassificationResult::Verdict::FiniteType);
    CHECK(d4.type == "D4");
    // The witness is reachable from the input by the reported path.
    auto m = ExtendedExchangeMatrix::validate(principal, {0, 1, 2, 3}, false);
    for (std::size_t k : d4.path) m = m.mutate(k);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m.entry(i, j) == d4.witness[i][j]);

    auto markov = classifyFiniteType({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, 50);
    CHECK(markov.verdict == ClassificationResult::Verdict::InfiniteType);
}

TEST_CASE("variable harvest counts") {
    CHECK(clusterVariables(explore(bipartiteSeed("A3"))).size() == 9);
    auto sl3 = Seed::initial(ExtendedExchangeMatrix::validate(kSl3Matrix, {2, 3, 4, 5}));
    auto g = explore(sl3);
    CHECK(g.complete);
    CHECK(g.nodes.size() == 50);
    CHECK(clusterVariables(g).size() == 16);
}

TEST_CASE("seed counts equal the cluster count of the root system") {
    for (const auto& t : {"A2", "A3", "B2", "B3", "D4"}) {
        auto g = explore(bipartiteSeed(t));
        CHECK(g.complete);
        CHECK(Int(g.nodes.size()) == countClusters(buildRootSystem(t)));
        CHECK(clusterDeterminesSeed(g));
        // n-regular; adjacent seeds share all but one variable.
        std::size_t n = g.directions();
        for (std::size_t d : degrees(g)) CHECK(d == n);
        for (const auto& e : g.edges) {
            std::set<LaurentPoly> a, common;
            for (std::size_t k : g.nodes[e.a].matrix.ex())
                a.insert(g.nodes[e.a].variables[k]);
            for (std::size_t k : g.nodes[e.b].matrix.ex())
                if (a.count(g.nodes[e.b].variables[k]))
                    common.insert(g.nodes[e.b].variables[k]);
            CHECK(common.size() == n - 1);
        }
    }
}

TEST_CASE("denominator vectors hit the almost positive roots") {
    for (const auto& t : {"A2", "B2"}) {
        auto rs = buildRootSystem(t);
        auto g = explore(bipartiteSeed(t));
        auto table = denominatorTable(g);
        CHECK(table.size() == rs.almostPositiveRoots().size());
        std::set<std::vector<int>> got;
        for (const auto& [v, d] : table) got.insert(d.entries);
        std::set<std::vector<int>> expected;
        for (const auto& r : rs.almostPositiveRoots())
            expected.insert(std::vector<int>(r.begin(), r.end()));
        CHECK(got == expected);
    }
    // The initial variables have the negated unit vectors.
    auto g = explore(bipartiteSeed("A2"));
    auto x1 = LaurentPoly::variable(2, 0);
    CHECK(denominatorVector(x1, g.baseCluster).entries == std::vector<int>{-1, 0});
}

TEST_CASE("conjecture checks pass on desk-scale graphs") {
    Rng rng(31);
    auto r1 = conjectureChecks(explore(rank2Seed(1, 1)), 3, rng);
    CHECK(r1.allPassed());
    auto r2 = conjectureChecks(explore(bipartiteSeed("A3")), 2, rng);
    CHECK(r2.allPassed());

    auto degenerate =
        Seed::initial(ExtendedExchangeMatrix::validate({{0}}, {0}, false));
    auto gd = explore(degenerate);
    CHECK(gd.nodes.size() == 2);
    auto r3 = conjectureChecks(gd, 2, rng);
    CHECK(r3.allPassed());
}

TEST_CASE("parallel exploration is deterministic") {
    auto a = explore(bipartiteSeed("A3"), {}, 1);
    auto b = explore(bipartiteSeed("A3"), {}, 4);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        CHECK(a.nodes[i] == b.nodes[i]);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].a == b.edges[i].a);
        CHECK(a.edges[i].b == b.edges[i].b);
    }
}

TEST_CASE("graph exports") {
    auto g = explore(rank2Seed(1, 1));
    auto dot = toDot(g);
    CHECK(dot.find("graph exchange {") == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 5 + 5);
    auto j = g.toJson();
    CHECK(j.at("complete") == true);
    CHECK(j.at("nodes").size() == 5);
    CHECK(j.at("edges").size() == 5);
}
