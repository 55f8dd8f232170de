#pragma once

#include <stdexcept>
#include <string>

namespace cluster {

struct ClusterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VarCountMismatch : ClusterError {
    using ClusterError::ClusterError;
};
struct NonExactDivision : ClusterError {
    using ClusterError::ClusterError;
};
struct DivisionByZero : ClusterError {
    using ClusterError::ClusterError;
};
struct ZeroAtNegativeExponent : ClusterError {
    using ClusterError::ClusterError;
};
struct ZeroPolynomial : ClusterError {
    using ClusterError::ClusterError;
};
struct ParseError : ClusterError {
    using ClusterError::ClusterError;
};

struct NotSkewSymmetrizable : ClusterError {
    using ClusterError::ClusterError;
};
struct RankDeficient : ClusterError {
    using ClusterError::ClusterError;
};
struct NotExchangeable : ClusterError {
    using ClusterError::ClusterError;
};

struct IncompleteGraph : ClusterError {
    using ClusterError::ClusterError;
};

struct UnknownType : ClusterError {
    using ClusterError::ClusterError;
};
struct NonIntegerResult : ClusterError {
    using ClusterError::ClusterError;
};
struct WrongType : ClusterError {
    using ClusterError::ClusterError;
};

struct HypothesisViolated : ClusterError {
    using ClusterError::ClusterError;
};
struct SingularClusterSystem : ClusterError {
    using ClusterError::ClusterError;
};

struct NotADiagonal : ClusterError {
    using ClusterError::ClusterError;
};
struct RelationViolated : ClusterError {
    using ClusterError::ClusterError;
};

struct NotReduced : ClusterError {
    using ClusterError::ClusterError;
};
struct BadPrefix : ClusterError {
    using ClusterError::ClusterError;
};
struct IndexOutOfRange : ClusterError {
    using ClusterError::ClusterError;
};
struct SizeMismatch : ClusterError {
    using ClusterError::ClusterError;
};
struct NotUnimodular : ClusterError {
    using ClusterError::ClusterError;
};
struct IdentityViolated : ClusterError {
    using ClusterError::ClusterError;
};

}  // namespace cluster
