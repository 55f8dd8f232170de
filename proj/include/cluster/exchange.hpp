#pragma once

#include "cluster/laurent.hpp"
#include "cluster/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <vector>

namespace cluster {

// The m x n integer matrix B~ of a seed of geometric type.  Rows are
// indexed by [0,m), columns by the sorted exchangeable set ex (|ex| = n).
// Construction goes through validate(), which finds a positive integer
// skew-symmetrizer for the principal part and checks full column rank.
class ExtendedExchangeMatrix {
public:
    // requireFullRank=false admits degenerate desk cases such as the
    // 1x1 zero matrix, whose exchange relation is x*x' = 2.
    static ExtendedExchangeMatrix validate(const std::vector<std::vector<long long>>& entries,
                                           std::vector<std::size_t> ex,
                                           bool requireFullRank = true);

    std::size_t rowCount() const { return m_; }
    std::size_t colCount() const { return n_; }
    const std::vector<std::size_t>& ex() const { return ex_; }
    const std::vector<Int>& skewSymmetrizer() const { return d_; }

    bool isExchangeable(std::size_t row) const;
    // Column position of exchangeable row k; throws NotExchangeable.
    std::size_t colOf(std::size_t row) const;

    long long entry(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }
    // Principal part entry b_{ij}, i and j column positions in [0,n).
    long long principal(std::size_t i, std::size_t j) const { return entry(ex_[i], j); }

    // Matrix mutation in direction k (an exchangeable row index).
    ExtendedExchangeMatrix mutate(std::size_t k) const;

    bool operator==(const ExtendedExchangeMatrix& o) const {
        return m_ == o.m_ && n_ == o.n_ && ex_ == o.ex_ && e_ == o.e_;
    }

    nlohmann::json toJson() const;
    static ExtendedExchangeMatrix fromJson(const nlohmann::json& j);

private:
    ExtendedExchangeMatrix() = default;

    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<std::size_t> ex_;
    std::vector<long long> e_;  // row-major m x n
    std::vector<Int> d_;        // skew-symmetrizer, indexed by column position
    bool degenerate_ = false;   // full-rank requirement was waived
};

// Finds positive integers d with d_i*b_{ik} = -d_k*b_{ki} for a bare
// square matrix; throws NotSkewSymmetrizable.  Least positive integers
// per connected component of the nonzero pattern.
std::vector<Int> findSkewSymmetrizer(const std::vector<std::vector<long long>>& principal);

// A seed (x~, B~): m Laurent polynomials expressed in the initial
// variables, plus the extended exchange matrix.
struct Seed {
    std::vector<LaurentPoly> variables;
    ExtendedExchangeMatrix matrix;

    // The seed whose variables are the m coordinate variables themselves.
    static Seed initial(ExtendedExchangeMatrix m);

    bool operator==(const Seed& o) const {
        return variables == o.variables && matrix == o.matrix;
    }

    nlohmann::json toJson() const;
    static Seed fromJson(const nlohmann::json& j);
};

// x'_k of the exchange relation: (prod_{b_ik>0} x_i^{b_ik} +
// prod_{b_ik<0} x_i^{-b_ik}) / x_k, computed via exactDiv.
LaurentPoly exchangePartner(const Seed& s, std::size_t k);

// Replaces variable k by its exchange partner and mutates the matrix.
Seed seedMutate(const Seed& s, std::size_t k);

}  // namespace cluster
