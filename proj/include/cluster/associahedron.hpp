#pragma once

#include "cluster/numeric.hpp"
#include "cluster/root_system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cluster {

// An exact rational bound F(alpha) per almost positive root, indexed in
// the order of rs.almostPositiveRoots(); invariant under both tau
// involutions by construction.
struct SupportFunction {
    std::vector<Rat> values;

    Rat at(const RootSystem& rs, const RootCoords& root) const;
};

// The default admissible choice: F(-alpha_i) is the coefficient of
// alpha_i's simple coroot in the half-sum of all positive coroots,
// extended to every almost positive root along tau orbits.
SupportFunction buildSupportFunction(const RootSystem& rs);

// Same extension from user-supplied values on the negative simple
// roots; throws HypothesisViolated if the values are not invariant
// under -w0 or fail the positivity hypothesis sum_i a_ij F(-alpha_i) > 0.
SupportFunction supportFromNegativeSimples(const RootSystem& rs,
                                           const std::vector<Rat>& onNegSimple);

struct Polytope {
    // H-representation: <z, normals[i]> <= bounds[i].  Normals are the
    // almost positive roots in simple-root coordinates; z lives in the
    // dual fundamental-coweight coordinates, so the pairing is the dot
    // product.
    std::vector<RootCoords> normals;
    std::vector<Rat> bounds;
    // One vertex per cluster, in the order of enumerateClusters.
    std::vector<std::vector<Rat>> vertices;
    std::vector<std::vector<RootCoords>> clusters;
    // 1-skeleton: vertex pairs whose clusters share all but one root.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::string hRepText() const;
    std::string vRepText() const;
    std::string skeletonDot() const;
};

// Solves each cluster's n x n system <z, alpha> = F(alpha) exactly and
// checks that the solution meets every other inequality strictly.
// Throws SingularClusterSystem if a cluster system degenerates and
// HypothesisViolated if a vertex escapes the polytope.
Polytope buildPolytope(const RootSystem& rs, const SupportFunction& f);

}  // namespace cluster
