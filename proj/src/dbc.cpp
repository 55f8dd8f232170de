#include "cluster/dbc.hpp"

#include "cluster/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cluster {

namespace {

std::string indexGroup(const std::vector<int>& g) {
    bool singleDigit =
        std::all_of(g.begin(), g.end(), [](int i) { return i <= 9; });
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i && !singleDigit) s += '.';
        s += std::to_string(g[i]);
    }
    return s;
}

// Right-multiplies the one-line permutation by the transposition of
// t, t+1 (1-based); a length drop means the factorization is not reduced.
void appendReflection(std::vector<int>& oneLine, int t, const char* side) {
    if (oneLine[t - 1] > oneLine[t])
        throw NotReduced(std::string("the ") + side +
                         " factorization repeats an inversion");
    std::swap(oneLine[t - 1], oneLine[t]);
}

// Swaps t and t+1 in every element of a sorted index set.
void actOnSet(std::vector<int>& set, int t) {
    for (int& x : set) {
        if (x == t)
            x = t + 1;
        else if (x == t + 1)
            x = t;
    }
    std::sort(set.begin(), set.end());
}

long long cartanA(int s, int t) {
    if (s == t) return 2;
    return std::abs(s - t) == 1 ? -1 : 0;
}

RatMatrix matMul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Rat t = a.at(i, k) * b.at(k, j);
                c.at(i, j) += t;
            }
        }
    return c;
}

RatMatrix identityMatrix(std::size_t n) {
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) x.at(i, i) = 1;
    return x;
}

}  // namespace

std::string MinorIndex::toString() const {
    return "D(" + indexGroup(rows) + "," + indexGroup(cols) + ")";
}

ReducedWord buildWord(int r, const std::vector<int>& entries) {
    if (r < 1) throw IndexOutOfRange("rank must be at least 1");
    const std::size_t m = entries.size();
    if (m < static_cast<std::size_t>(r))
        throw BadPrefix("the word must start with the full prefix 1..r");
    for (int j = 0; j < r; ++j)
        if (entries[j] != j + 1)
            throw BadPrefix("entry " + std::to_string(j + 1) + " must be " +
                            std::to_string(j + 1));
    for (int e : entries)
        if (e == 0 || std::abs(e) > r)
            throw IndexOutOfRange("word entries must lie in the signed alphabet");

    ReducedWord w;
    w.r = r;
    w.entries = entries;
    w.u.resize(r + 1);
    w.v.resize(r + 1);
    std::iota(w.u.begin(), w.u.end(), 1);
    std::iota(w.v.begin(), w.v.end(), 1);
    for (std::size_t j = r; j < m; ++j) {
        if (entries[j] > 0)
            appendReflection(w.v, entries[j], "positive");
        else
            appendReflection(w.u, -entries[j], "negative");
    }

    w.kPlus.assign(m, m + 1);
    w.kMinus.assign(m, 0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
            if (std::abs(entries[l]) == std::abs(entries[k])) {
                w.kPlus[k] = l + 1;
                w.kMinus[l] = k + 1;
                break;
            }
    for (std::size_t k = r; k < m; ++k)
        if (w.kPlus[k] <= m) w.ex.push_back(k + 1);
    return w;
}

MinorIndex gammaDelta(const ReducedWord& w, std::size_t k) {
    if (k < 1 || k > w.m())
        throw IndexOutOfRange("position must lie in [1, m]");
    const int a = std::abs(w.entries[k - 1]);
    MinorIndex idx;
    idx.rows.resize(a);
    std::iota(idx.rows.begin(), idx.rows.end(), 1);
    idx.cols = idx.rows;
    // gamma: reflections at negative entries among i_1..i_k, applied
    // right to left.
    for (std::size_t j = k; j >= 1; --j)
        if (w.entries[j - 1] < 0) actOnSet(idx.rows, -w.entries[j - 1]);
    // delta: reflections at positive entries among i_{k+1}..i_m, also
    // right to left, whose rightmost factor is at position k+1.
    for (std::size_t j = k + 1; j <= w.m(); ++j)
        if (w.entries[j - 1] > 0) actOnSet(idx.cols, w.entries[j - 1]);
    return idx;
}

std::vector<MinorIndex> minorFamily(const ReducedWord& w) {
    std::vector<MinorIndex> f;
    for (std::size_t k = 1; k <= w.m(); ++k) f.push_back(gammaDelta(w, k));
    return f;
}

std::vector<MinorIndex> frozenSet(const ReducedWord& w) {
    std::vector<MinorIndex> c;
    for (std::size_t k = 1; k <= w.m(); ++k)
        if (!std::binary_search(w.ex.begin(), w.ex.end(), k))
            c.push_back(gammaDelta(w, k));
    return c;
}

std::vector<MinorIndex> frozenSetClosedForm(const ReducedWord& w) {
    std::vector<int> vinv(w.r + 1);
    for (int i = 0; i <= w.r; ++i) vinv[w.v[i] - 1] = i + 1;

    std::set<MinorIndex> c;
    for (int j = 1; j <= w.r; ++j) {
        MinorIndex idx;
        for (int t = 1; t <= j; ++t) {
            idx.rows.push_back(t);
            idx.cols.push_back(vinv[t - 1]);
        }
        std::sort(idx.cols.begin(), idx.cols.end());
        c.insert(idx);
    }
    for (int letter = 1; letter <= w.r; ++letter) {
        bool occurs = false;
        for (int e : w.entries) occurs |= std::abs(e) == letter;
        if (!occurs) continue;
        MinorIndex idx;
        for (int t = 1; t <= letter; ++t) {
            idx.rows.push_back(w.u[t - 1]);
            idx.cols.push_back(t);
        }
        std::sort(idx.rows.begin(), idx.rows.end());
        c.insert(idx);
    }
    return {c.begin(), c.end()};
}

ExtendedExchangeMatrix bFromWord(const ReducedWord& w) {
    const std::size_t m = w.m();
    const std::size_t n = w.ex.size();
    auto eps = [&](std::size_t pos) { return w.entries[pos - 1] > 0 ? 1 : -1; };
    auto letter = [&](std::size_t pos) { return std::abs(w.entries[pos - 1]); };

    std::vector<std::vector<long long>> b(m, std::vector<long long>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t k = w.ex[c];
        const std::size_t kp = w.kPlus[k - 1];
        for (std::size_t p = 1; p <= m; ++p) {
            const std::size_t pp = w.kPlus[p - 1];
            if (p == w.kMinus[k - 1]) {
                b[p - 1][c] = -eps(k);
            } else if (p == kp) {
                b[p - 1][c] = eps(p);
            } else if ((p < k && k < pp && pp < kp && eps(k) == eps(pp)) ||
                       (p < k && k < kp && kp < pp && eps(k) == -eps(kp))) {
                b[p - 1][c] = -eps(k) * cartanA(letter(p), letter(k));
            } else if ((k < p && p < kp && kp < pp && eps(p) == eps(kp)) ||
                       (k < p && p < pp && pp < kp && eps(p) == -eps(pp))) {
                b[p - 1][c] = eps(p) * cartanA(letter(p), letter(k));
            }
        }
    }

    std::vector<std::size_t> ex0;
    for (std::size_t k : w.ex) ex0.push_back(k - 1);
    return ExtendedExchangeMatrix::validate(b, ex0);
}

Rat evalMinor(const MinorIndex& idx, const RatMatrix& x) {
    if (idx.rows.size() != idx.cols.size())
        throw SizeMismatch("row and column sets must have equal size");
    const std::size_t s = idx.rows.size();
    RatMatrix sub(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            const int r = idx.rows[i], c = idx.cols[j];
            if (r < 1 || c < 1 || static_cast<std::size_t>(r) > x.rows() ||
                static_cast<std::size_t>(c) > x.cols())
                throw SizeMismatch("minor index exceeds the matrix");
            sub.at(i, j) = x.at(r - 1, c - 1);
        }
    return sub.determinant();
}

bool tpTest(const ReducedWord& w, const RatMatrix& x) {
    const std::size_t n = w.r + 1;
    if (x.rows() != n || x.cols() != n)
        throw SizeMismatch("matrix size must match the word's rank");
    if (x.determinant() != 1)
        throw NotUnimodular("total positivity test requires determinant 1");
    for (const auto& idx : minorFamily(w))
        if (evalMinor(idx, x) <= 0) return false;
    return true;
}

RatMatrix totallyPositiveSample(int r, Rng& rng) {
    const std::size_t n = r + 1;
    auto param = [&] { return Rat(rng.intIn(1, 4), rng.intIn(1, 4)); };

    RatMatrix lower = identityMatrix(n);
    RatMatrix upper = identityMatrix(n);
    for (int k = 1; k < static_cast<int>(n); ++k)
        for (int j = k; j >= 1; --j) {
            RatMatrix e = identityMatrix(n);
            e.at(j, j - 1) = param();
            lower = matMul(lower, e);
            RatMatrix f = identityMatrix(n);
            f.at(j - 1, j) = param();
            upper = matMul(upper, f);
        }

    RatMatrix d = identityMatrix(n);
    Rat prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d.at(i, i) = param();
        prod *= d.at(i, i);
    }
    d.at(n - 1, n - 1) = 1 / prod;
    return matMul(matMul(lower, d), upper);
}

bool exchangeIdentityAt(const ReducedWord& w, const RatMatrix& x) {
    const std::vector<int> standard{1, 2, 1, 2, 1, -1, -2, -1};
    if (w.r != 2 || w.entries != standard)
        throw WrongType("the exchange identities are specific to the word 1,2,1,2,1,-1,-2,-1");
    if (x.rows() != 3 || x.cols() != 3)
        throw SizeMismatch("the exchange identities live on 3 x 3 matrices");
    if (x.determinant() != 1)
        throw NotUnimodular("the exchange identities require determinant 1");

    std::vector<Rat> f;
    for (const auto& idx : minorFamily(w)) f.push_back(evalMinor(idx, x));
    for (std::size_t k : w.ex)
        if (f[k - 1] == 0) return false;

    const auto b = bFromWord(w);
    std::vector<Rat> primes;
    for (std::size_t c = 0; c < w.ex.size(); ++c) {
        Rat pos = 1, neg = 1;
        for (std::size_t p = 0; p < w.m(); ++p) {
            const long long e = b.entry(p, c);
            for (long long i = 0; i < e; ++i) pos *= f[p];
            for (long long i = 0; i < -e; ++i) neg *= f[p];
        }
        primes.push_back((pos + neg) / f[w.ex[c] - 1]);
    }

    auto d = [&](std::vector<int> rows, std::vector<int> cols) {
        return evalMinor({std::move(rows), std::move(cols)}, x);
    };
    const std::vector<Rat> expected{
        d({1, 2}, {1, 3}),
        d({1}, {1}) * d({2, 3}, {2, 3}) - 1,
        d({2}, {2}),
        d({1, 3}, {1, 2}),
    };
    for (std::size_t c = 0; c < 4; ++c)
        if (primes[c] != expected[c])
            throw IdentityViolated("exchange at position " +
                                   std::to_string(w.ex[c]) +
                                   " does not match its closed form");
    return true;
}

IdentityReport exchangeIdentityCheck(const ReducedWord& w, std::size_t trials, Rng& rng) {
    IdentityReport report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        // A random rational matrix with one row scaled to force det = 1.
        RatMatrix x(3, 3);
        Rat det = 0;
        while (det == 0) {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    x.at(i, j) = rng.smallRational();
            det = x.determinant();
        }
        for (std::size_t j = 0; j < 3; ++j) {
            Rat scaled = x.at(0, j) / det;
            x.at(0, j) = scaled;
        }
        if (exchangeIdentityAt(w, x))
            ++report.verified;
        else
            ++report.skipped;
    }
    return report;
}

}  // namespace cluster
