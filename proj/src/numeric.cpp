#include "cluster/numeric.hpp"

#include "cluster/errors.hpp"

namespace cluster {

namespace {

// Row echelon by fraction-aware Gaussian elimination; returns pivot count.
std::size_t echelon(std::vector<Rat>& a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a[pivot * cols + c], a[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r * cols + col] == 0) continue;
            Rat f = a[r * cols + col] / a[rank * cols + col];
            for (std::size_t c = col; c < cols; ++c)
                a[r * cols + c] -= f * a[rank * cols + c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t RatMatrix::rank() const {
    std::vector<Rat> a(data_);
    return echelon(a, rows_, cols_);
}

Rat RatMatrix::determinant() const {
    if (rows_ != cols_) throw SizeMismatch("determinant of non-square matrix");
    std::vector<Rat> a(data_);
    Rat det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && a[pivot * cols_ + col] == 0) ++pivot;
        if (pivot == rows_) return Rat(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(a[pivot * cols_ + c], a[col * cols_ + c]);
            det = -det;
        }
        det *= a[col * cols_ + col];
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (a[r * cols_ + col] == 0) continue;
            Rat f = a[r * cols_ + col] / a[col * cols_ + col];
            for (std::size_t c = col; c < cols_; ++c)
                a[r * cols_ + c] -= f * a[col * cols_ + c];
        }
    }
    return det;
}

std::vector<Rat> RatMatrix::solve(const std::vector<Rat>& b) const {
    if (rows_ != cols_ || b.size() != rows_)
        throw SizeMismatch("solve expects a square system");
    const std::size_t n = rows_;
    const std::size_t w = n + 1;
    std::vector<Rat> a(n * w);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * w + c] = at(r, c);
        a[r * w + n] = b[r];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * w + col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular linear system");
        if (pivot != col)
            for (std::size_t c = 0; c < w; ++c) std::swap(a[pivot * w + c], a[col * w + c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * w + col] == 0) continue;
            Rat f = a[r * w + col] / a[col * w + col];
            for (std::size_t c = col; c < w; ++c) a[r * w + c] -= f * a[col * w + c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = a[r * w + n] / a[r * w + r];
    return x;
}

std::string ratToString(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rat ratFromString(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + s);
    return Rat(num, den);
}

}  // namespace cluster
