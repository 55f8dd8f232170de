#pragma once

#include "cluster/exchange.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cluster {

// Canonical representative of a seed under relabeling of exchangeable
// positions: exchangeable variables sorted, matrix rows and columns
// permuted to match.  Frozen rows keep their places.
Seed canonicalSeed(const Seed& s);
// Dedup key covering variables and matrix of a canonical seed.
std::string seedKey(const Seed& canonical);
// Weaker key covering the exchangeable variables only.
std::string clusterKey(const Seed& canonical);

struct ExchangeGraph {
    struct Edge {
        std::size_t a = 0, b = 0;
        LaurentPoly removed, added;  // the exchanged variable pair
    };

    std::vector<Seed> nodes;  // canonical seeds, BFS discovery order
    std::vector<Edge> edges;
    std::vector<std::size_t> baseCluster;  // exchangeable rows of the start seed
    bool complete = false;

    std::size_t directions() const {
        return nodes.empty() ? 0 : nodes.front().matrix.colCount();
    }
    nlohmann::json toJson() const;
};

struct ExploreBounds {
    std::size_t maxSeeds = 100000;
    std::size_t maxDepth = 100000;
};

// Breadth-first closure of the start seed under mutation in every
// direction.  complete=false means a bound cut the search short.
// jobs > 1 expands each BFS layer in parallel; results are merged in a
// fixed order, so output is identical for every job count.
ExchangeGraph explore(const Seed& start, const ExploreBounds& bounds = {},
                      unsigned jobs = 1);

// All distinct exchangeable variables across the graph, sorted.
// Throws IncompleteGraph unless g.complete.
std::vector<LaurentPoly> clusterVariables(const ExchangeGraph& g);

// True when no two nodes share the exchangeable-variable multiset.
bool clusterDeterminesSeed(const ExchangeGraph& g);

struct ClassificationResult {
    enum class Verdict { FiniteType, InfiniteType, Unknown };

    Verdict verdict = Verdict::Unknown;
    std::string type;  // Cartan-Killing label(s), set iff FiniteType
    std::vector<std::vector<long long>> witness;
    std::vector<std::size_t> path;  // mutation directions from the input to the witness
};

// Searches the mutation class of a principal exchange matrix, up to
// simultaneous permutation and global sign, for either a bipartite
// matrix of finite Dynkin shape or a rank-2 obstruction |b_ij b_ji| >= 4.
ClassificationResult classifyFiniteType(const std::vector<std::vector<long long>>& b,
                                        std::size_t maxMatrices = 20000);

// Denominator vector of every cluster variable with respect to the
// initial cluster, sorted by variable.  Throws IncompleteGraph.
std::vector<std::pair<LaurentPoly, DenominatorVector>> denominatorTable(
    const ExchangeGraph& g);

struct ConjectureReport {
    bool seedDeterminedByCluster = false;
    bool monomialsIndependent = false;
    bool distinctDenominators = false;
    bool nonnegativeCoefficients = false;
    std::size_t monomialCount = 0;

    bool allPassed() const {
        return seedDeterminedByCluster && monomialsIndependent &&
               distinctDenominators && nonnegativeCoefficients;
    }
};

// Desk-scale checks on a completed graph: cluster determines seed;
// cluster monomials up to the given total degree are linearly
// independent (exact rank at random rational points) and have pairwise
// distinct denominator vectors; every variable has nonnegative
// coefficients.  Throws IncompleteGraph.
ConjectureReport conjectureChecks(const ExchangeGraph& g, unsigned maxDegree, Rng& rng);

std::string toDot(const ExchangeGraph& g);

}  // namespace cluster
