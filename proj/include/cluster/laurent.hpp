#pragma once

#include "cluster/errors.hpp"
#include "cluster/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cluster {

// Exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

// Integer-coefficient Laurent polynomial in varCount named variables
// x1..xm.  Terms are kept in a map ordered lexicographically on the
// exponent vectors, with zero coefficients erased, so equality and
// hashing are structural.  Values are immutable after construction.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t varCount) : varCount_(varCount) {}

    static LaurentPoly constant(std::size_t varCount, Int c);
    // x_{idx}^power (idx is 0-based).
    static LaurentPoly variable(std::size_t varCount, std::size_t idx, int power = 1);
    static LaurentPoly monomial(Exponents e, Int c);

    std::size_t varCount() const { return varCount_; }
    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    const std::map<Exponents, Int>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(unsigned k) const;

    bool operator==(const LaurentPoly& o) const {
        return varCount_ == o.varCount_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Total order: graded by leading terms in descending lex order.
    bool operator<(const LaurentPoly& o) const;

    Rat evalRational(const std::vector<Rat>& point) const;

    // Componentwise minimum of the exponent vectors over all terms.
    Exponents minExponents() const;

    bool allCoefficientsNonNegative() const;

    // Canonical text form, terms in descending lex order,
    // e.g. "3*x1^2*x2^-1 + -1".
    std::string toString() const;
    static LaurentPoly parse(const std::string& s, std::size_t varCount);

    std::size_t hashValue() const;

private:
    void insertTerm(const Exponents& e, const Int& c);
    static void requireSameVars(const LaurentPoly& a, const LaurentPoly& b);

    std::size_t varCount_ = 0;
    std::map<Exponents, Int> terms_;
};

// Exact division in the Laurent ring: returns q with q*den == num, or
// throws NonExactDivision when no such Laurent polynomial over Z exists.
LaurentPoly exactDiv(const LaurentPoly& num, const LaurentPoly& den);

struct DenominatorVector {
    std::vector<int> entries;

    bool operator==(const DenominatorVector& o) const = default;
    bool operator<(const DenominatorVector& o) const { return entries < o.entries; }
};

// d_i = -(min exponent of cluster variable clusterIdx[i] over terms of y).
// clusterIdx holds 0-based variable indices.
DenominatorVector denominatorVector(const LaurentPoly& y,
                                    const std::vector<std::size_t>& clusterIdx);

}  // namespace cluster
