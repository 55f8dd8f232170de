#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cluster/associahedron.hpp"
#include "cluster/exchange_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace cluster;

namespace {

Seed bipartiteSeed(const std::string& type) {
    auto rs = buildRootSystem(type);
    std::vector<std::size_t> ex(rs.rank());
    std::iota(ex.begin(), ex.end(), 0);
    return Seed::initial(
        ExtendedExchangeMatrix::validate(bFromCartan(rs), ex, false));
}

}  // namespace

TEST_CASE("default support function in A3 matches the textbook bounds") {
    auto rs = buildRootSystem("A3");
    auto f = buildSupportFunction(rs);
    RootCoords na1{-1, 0, 0}, na2{0, -1, 0}, na3{0, 0, -1};
    CHECK(f.at(rs, na1) == Rat(3, 2));
    CHECK(f.at(rs, na2) == Rat(2));
    CHECK(f.at(rs, na3) == Rat(3, 2));
    // The full propagated family: max(-z1,-z3,z1,z3,z1+z2,z2+z3) <= 3/2
    // and max(-z2,z2,z1+z2+z3) <= 2.
    for (RootCoords r : {RootCoords{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}})
        CHECK(f.at(rs, r) == Rat(3, 2));
    for (RootCoords r : {RootCoords{0, 1, 0}, {1, 1, 1}})
        CHECK(f.at(rs, r) == Rat(2));
    // Forced by -w0 symmetry, which swaps the outer simple roots.
    CHECK(f.at(rs, na1) == f.at(rs, na3));
}

TEST_CASE("default support function in A2") {
    auto rs = buildRootSystem("A2");
    auto f = buildSupportFunction(rs);
    CHECK(f.at(rs, {-1, 0}) == Rat(1));
    CHECK(f.at(rs, {0, -1}) == Rat(1));
}

TEST_CASE("inadmissible support data is rejected") {
    auto rs = buildRootSystem("A3");
    CHECK_THROWS_AS(supportFromNegativeSimples(rs, {Rat(1), Rat(2), Rat(3)}),
                    HypothesisViolated);  // not -w0 invariant
    CHECK_THROWS_AS(
        supportFromNegativeSimples(rs, {Rat(0), Rat(0), Rat(0)}),
        HypothesisViolated);  // positivity hypothesis fails
    // A scaled admissible choice is accepted.
    CHECK_NOTHROW(supportFromNegativeSimples(rs, {Rat(3), Rat(4), Rat(3)}));
}

TEST_CASE("pentagon, associahedron, and cyclohedron sizes") {
    auto a2 = buildRootSystem("A2");
    auto p2 = buildPolytope(a2, buildSupportFunction(a2));
    CHECK(p2.vertices.size() == 5);
    CHECK(p2.edges.size() == 5);

    auto a3 = buildRootSystem("A3");
    auto p3 = buildPolytope(a3, buildSupportFunction(a3));
    CHECK(p3.vertices.size() == 14);
    CHECK(p3.edges.size() == 21);
    CHECK(p3.normals.size() == 9);  // facets

    auto b3 = buildRootSystem("B3");
    auto pb = buildPolytope(b3, buildSupportFunction(b3));
    CHECK(pb.vertices.size() == 20);
}

TEST_CASE("Euler relation holds for the rank-3 polytopes") {
    for (const auto& t : {"A3", "B3", "C3"}) {
        auto rs = buildRootSystem(t);
        auto p = buildPolytope(rs, buildSupportFunction(rs));
        long long v = static_cast<long long>(p.vertices.size());
        long long e = static_cast<long long>(p.edges.size());
        long long f = static_cast<long long>(p.normals.size());
        CHECK(v - e + f == 2);
    }
}

TEST_CASE("the skeleton is the exchange graph of the bipartite seed") {
    for (const auto& t : {"A2", "A3"}) {
        auto rs = buildRootSystem(t);
        const std::size_t n = rs.rank();
        auto p = buildPolytope(rs, buildSupportFunction(rs));
        auto g = explore(bipartiteSeed(t));
        REQUIRE(g.nodes.size() == p.vertices.size());

        // Identify each seed with a cluster through denominator vectors.
        std::map<std::vector<RootCoords>, std::size_t> clusterIndex;
        for (std::size_t i = 0; i < p.clusters.size(); ++i)
            clusterIndex[p.clusters[i]] = i;
        std::vector<std::size_t> toCluster(g.nodes.size());
        std::set<std::size_t> hit;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            std::vector<RootCoords> roots;
            for (std::size_t k : g.nodes[i].matrix.ex()) {
                auto d = denominatorVector(g.nodes[i].variables[k], g.baseCluster);
                roots.push_back(RootCoords(d.entries.begin(), d.entries.end()));
            }
            std::sort(roots.begin(), roots.end());
            REQUIRE(clusterIndex.count(roots));
            toCluster[i] = clusterIndex[roots];
            hit.insert(toCluster[i]);
        }
        CHECK(hit.size() == g.nodes.size());  // bijective

        std::set<std::pair<std::size_t, std::size_t>> skeleton(p.edges.begin(),
                                                               p.edges.end());
        std::set<std::pair<std::size_t, std::size_t>> mapped;
        for (const auto& e : g.edges)
            mapped.insert(std::minmax(toCluster[e.a], toCluster[e.b]));
        CHECK(mapped == skeleton);
        CHECK(n * p.vertices.size() == 2 * p.edges.size());
    }
}

TEST_CASE("text exports") {
    auto rs = buildRootSystem("A3");
    auto p = buildPolytope(rs, buildSupportFunction(rs));
    auto h = p.hRepText();
    CHECK(std::count(h.begin(), h.end(), '\n') == 9);
    CHECK(h.find("<= 3/2") != std::string::npos);
    auto v = p.vRepText();
    CHECK(std::count(v.begin(), v.end(), '\n') == 14);
    CHECK(p.skeletonDot().find("graph skeleton {") == 0);
}
