#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluster {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix over the exact rationals, just big enough for the rank /
// solve / determinant needs of the engine.  Row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank() const;
    Rat determinant() const;

    // Solves A x = b for square A.  Throws std::domain_error when singular.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

// Deterministic random source shared by the sampling-based checks.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    // Uniform integer in [lo, hi].
    long intIn(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

    // Nonzero rational with small numerator/denominator.
    Rat smallRational(long maxAbs = 9) {
        long num = 0;
        while (num == 0) num = intIn(-maxAbs, maxAbs);
        long den = intIn(1, maxAbs);
        return Rat(num, den);
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

std::string ratToString(const Rat& r);
Rat ratFromString(const std::string& s);

}  // namespace cluster
