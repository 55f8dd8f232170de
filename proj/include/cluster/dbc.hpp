#pragma once

#include "cluster/exchange.hpp"
#include "cluster/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cluster {

// Row/column index sets of a minor of an (r+1) x (r+1) matrix, sorted,
// 1-based, with |rows| = |cols|.
struct MinorIndex {
    std::vector<int> rows;
    std::vector<int> cols;

    bool operator==(const MinorIndex& o) const = default;
    bool operator<(const MinorIndex& o) const {
        return rows != o.rows ? rows < o.rows : cols < o.cols;
    }

    // "D(12,23)" for the minor with rows {1,2} and columns {2,3};
    // indices above 9 are dot-separated inside each group.
    std::string toString() const;
};

// A double reduced word for a pair (u, v) of permutations of [1, r+1]:
// entries i_1..i_m from the signed alphabet with i_j = j for j <= r,
// the negative entries spelling a reduced word for u and the positive
// entries past position r one for v.  All positions are 1-based to
// match the combinatorial conventions; m = r + len(u) + len(v).
struct ReducedWord {
    int r = 0;
    std::vector<int> entries;
    std::vector<int> u, v;  // one-line notation, values 1..r+1

    // kPlus[k-1]: smallest l > k with |i_l| = |i_k|, else m+1.
    // kMinus[k-1]: the l with l^+ = k, else 0.
    std::vector<std::size_t> kPlus, kMinus;
    // Exchangeable positions: r < k <= m with a later repeat of |i_k|.
    std::vector<std::size_t> ex;

    std::size_t m() const { return entries.size(); }
};

// Validates the entries, computes u and v with incremental reducedness
// checks, and fills in the word combinatorics.  Throws BadPrefix when
// the first r entries are not 1..r, NotReduced when either factorization
// drops length, IndexOutOfRange for entries outside the signed alphabet.
ReducedWord buildWord(int r, const std::vector<int>& entries);

// The minor at position k (1-based): rows are the image of [1, |i_k|]
// under the product of reflections at the negative entries among
// i_1..i_k, columns under the reflections at the positive entries among
// i_{k+1}..i_m applied right to left.
MinorIndex gammaDelta(const ReducedWord& w, std::size_t k);

// All m minors in position order: the cluster associated with the word.
std::vector<MinorIndex> minorFamily(const ReducedWord& w);

// The minors at the non-exchangeable positions, in position order.
std::vector<MinorIndex> frozenSet(const ReducedWord& w);

// The same set from the closed form that depends only on (u, v):
// D(w_j, v^{-1} w_j) for j <= r and D(u w_i, w_i) at the last
// occurrence of each letter, where w_j is the prefix set [1, j].
// Returned sorted.
std::vector<MinorIndex> frozenSetClosedForm(const ReducedWord& w);

// The m x n exchange matrix of the word, columns indexed by ex.
ExtendedExchangeMatrix bFromWord(const ReducedWord& w);

// Exact determinant of the submatrix picked out by idx.  Throws
// SizeMismatch when idx is malformed or exceeds the matrix.
Rat evalMinor(const MinorIndex& idx, const RatMatrix& x);

// True iff every minor of the word's family is positive at x.  Requires
// det(x) = 1; throws NotUnimodular otherwise.
bool tpTest(const ReducedWord& w, const RatMatrix& x);

// A random totally positive (r+1) x (r+1) matrix of determinant 1:
// a product of lower elementary bidiagonal factors along a longest
// reduced word, a positive diagonal of determinant 1, and the mirrored
// upper factors, all with positive rational parameters.
RatMatrix totallyPositiveSample(int r, Rng& rng);

struct IdentityReport {
    std::size_t trials = 0;
    std::size_t verified = 0;
    std::size_t skipped = 0;  // trials where an exchanged minor vanished
};

// For the standard order-3 double word (1,2,1,2,1,-1,-2,-1): checks at
// one determinant-1 matrix that each exchange at positions 3..6
// produces, exactly, the known regular functions
//   f3' = D(12,13), f4' = D(1,1) D(23,23) - 1, f5' = D(2,2),
//   f6' = D(13,12).
// Returns false (check skipped) when an exchanged minor vanishes at x.
// Throws WrongType for any other word, NotUnimodular when det(x) != 1,
// and IdentityViolated on mismatch.
bool exchangeIdentityAt(const ReducedWord& w, const RatMatrix& x);

// Runs exchangeIdentityAt on random rational determinant-1 matrices.
IdentityReport exchangeIdentityCheck(const ReducedWord& w, std::size_t trials, Rng& rng);

}  // namespace cluster
