#pragma once

#include "cluster/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cluster {

// Integer coordinates in the simple-root basis.  Positive roots have all
// entries >= 0; the negative simple root -alpha_i is minus the i-th unit
// vector.  No other vectors occur among the almost positive roots.
using RootCoords = std::vector<int>;

struct CartanMatrix {
    std::vector<std::vector<long long>> a;
    std::string type;

    std::size_t rank() const { return a.size(); }
};

// Cartan matrix of a connected finite type from a label such as "A3",
// "B2" or "E6".  Conventions: a[i][j] = <alpha_j, alpha_i^v>, so the
// reflection s_i subtracts (sum_j a[i][j] v_j) from coordinate i.
CartanMatrix cartanOfType(const std::string& label);

// All positive roots of a finite-type Cartan matrix: close the simple
// roots under the simple reflections, keeping nonnegative vectors.
// Sorted.  Throws UnknownType if the closure fails to terminate quickly
// (the matrix is not of finite type).
std::vector<RootCoords> positiveRootsOfCartan(const std::vector<std::vector<long long>>& a);

struct RootSystem {
    CartanMatrix cartan;
    std::vector<RootCoords> positiveRoots;  // sorted
    std::vector<int> exponents;
    int coxeterNumber = 0;
    // w0(alpha_i) = -alpha_{longestElementPerm[i]}
    std::vector<std::size_t> longestElementPerm;
    std::vector<int> sign;  // eps(i) in {+1,-1}, alternating across edges

    std::size_t rank() const { return cartan.rank(); }
    bool isPositiveRoot(const RootCoords& v) const;
    bool longestElementIsMinusIdentity() const;
    // -alpha_1..-alpha_n first, then the positive roots in sorted order.
    std::vector<RootCoords> almostPositiveRoots() const;

    nlohmann::json toJson() const;
};

RootSystem buildRootSystem(const std::string& label);

// The bipartite seed matrix attached to the Cartan matrix:
// b_ij = eps(i) a_ij off the diagonal, 0 on it.
std::vector<std::vector<long long>> bFromCartan(const RootSystem& rs);

// tau_+ (sgn=+1) or tau_- (sgn=-1) on an almost positive root: fixes
// -alpha_i when eps(i) = -sgn, otherwise acts by the product of the
// commuting simple reflections with eps(i) = sgn, sending -alpha_i to
// alpha_i and alpha_i back to -alpha_i.
RootCoords tau(const RootSystem& rs, int sgn, const RootCoords& alpha);

// Order of tau_- tau_+ as a permutation of the almost positive roots.
long long tauOrbitOrder(const RootSystem& rs);

// Compatibility of two almost positive roots, computed by applying
// tau_- tau_+ until one argument is some -alpha_i and then testing
// whether the other omits alpha_i.  Symmetric; true on equal arguments.
bool compatible(const RootSystem& rs, const RootCoords& alpha, const RootCoords& beta);

// All maximal pairwise-compatible subsets of the almost positive roots.
// Each has size rank(); clusters and their members are sorted.
std::vector<std::vector<RootCoords>> enumerateClusters(const RootSystem& rs);

// Product formula prod_i (e_i + h + 1) / (e_i + 1); throws
// NonIntegerResult if the quotient is not an integer.
Int countClusters(const RootSystem& rs);

// Same count from a label, accepting products such as "A2xA1".
Int countClustersByLabel(const std::string& label);

// Recognizes a (possibly decomposable) finite-type Cartan matrix by its
// Dynkin diagram shape and returns the label, components sorted and
// joined with 'x'; nullopt if the matrix is not of finite type.
std::optional<std::string> finiteCartanLabel(const std::vector<std::vector<long long>>& a);

}  // namespace cluster
