#pragma once

#include "cluster/exchange.hpp"
#include "cluster/root_system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cluster {

// A chord of the convex (n+3)-gon with vertices labeled 1..n+3
// clockwise; stored with first < second.
using Chord = std::pair<std::size_t, std::size_t>;

// Two chords cross at an interior point iff exactly one endpoint of one
// lies strictly between the endpoints of the other, cyclically.
bool chordsCross(const Chord& x, const Chord& y);

struct Triangulation {
    std::size_t n = 0;
    // All 2n+3 chords in label order: chords[i] carries label i+1.
    std::vector<Chord> chords;
    // Sorted 0-based label indices of the n diagonals.
    std::vector<std::size_t> ex;

    // Default labeling: diagonals first (labels 1..n), then the side
    // [i, i+1 mod n+3] as label n+i.
    static Triangulation fromDiagonals(std::size_t n, std::vector<Chord> diagonals);
    // Explicit labeling of every chord; validates shape.
    static Triangulation withLabels(std::size_t n, std::vector<Chord> chords,
                                    std::vector<std::size_t> ex);

    bool isDiagonal(std::size_t labelIdx) const;
    std::vector<Chord> diagonals() const;

    // Text format "n; d1=[i,j]; d2=[i,j]; ..." with default labeling.
    static Triangulation parse(const std::string& text);
    std::string toString() const;
};

// The m x n exchange matrix of eq-style clockwise triangle adjacency:
// +1 when the column chord follows the row chord in a triangle read
// clockwise, -1 for counter-clockwise.
ExtendedExchangeMatrix bFromTriangulation(const Triangulation& t);

// Replaces the diagonal at label index k by the opposite diagonal of
// its quadrilateral.  Throws NotADiagonal.
Triangulation flip(const Triangulation& t, std::size_t k);

// Whether the flip of the triangulation matches matrix mutation; holds
// for every valid input.
bool flipMutationCommutes(const Triangulation& t, std::size_t k);

// The snake triangulation: diagonal i (1-based) joins vertex
// 2 + floor((i-1)/2) to vertex n+3 - floor(i/2).
Chord snakeDiagonal(std::size_t n, std::size_t i);  // i in [0, n), 0-based
Triangulation snakeTriangulation(std::size_t n);

// Type-A dictionary: -alpha_i is the i-th snake diagonal; the positive
// root alpha_i+...+alpha_j is the unique diagonal crossing exactly the
// snake diagonals i..j.  Throws WrongType for non type-A vectors.
Chord diagonalForRoot(std::size_t n, const RootCoords& root);
RootCoords rootForDiagonal(std::size_t n, const Chord& d);

struct FlipGraph {
    std::vector<Triangulation> nodes;  // BFS order from the snake
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// All triangulations of the (n+3)-gon connected by flips.
FlipGraph flipGraph(std::size_t n);

// The 2x2 minors P_ij of a 2 x (n+3) matrix of points.
class PluckerConfig {
public:
    explicit PluckerConfig(RatMatrix z);

    std::size_t points() const { return z_.cols(); }
    // 1-based column indices.
    Rat minor(std::size_t i, std::size_t j) const;

private:
    RatMatrix z_;
};

// Asserts the three-term quadratic identity
// P_ik P_jl = P_ij P_kl + P_il P_jk for every i<j<k<l; throws
// RelationViolated on failure (holds for every matrix, even degenerate).
void verifyGrassmannRelations(const PluckerConfig& p);

// Randomized end-to-end check: the quadratic identities, plus every
// exchange relation of the snake seed instantiated with x_[i,j] = P_ij.
// Matrices with a vanishing chord minor are resampled.
void pluckerVerify(std::size_t n, int trials, Rng& rng);

}  // namespace cluster
