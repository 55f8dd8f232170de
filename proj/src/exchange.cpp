#include "cluster/exchange.hpp"

#include "cluster/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cluster {

std::vector<Int> findSkewSymmetrizer(const std::vector<std::vector<long long>>& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i].size() != n) throw SizeMismatch("principal part is not square");
        if (b[i][i] != 0) throw NotSkewSymmetrizable("nonzero diagonal entry");
        for (std::size_t j = 0; j < n; ++j) {
            if ((b[i][j] == 0) != (b[j][i] == 0))
                throw NotSkewSymmetrizable("asymmetric zero pattern");
            if (b[i][j] != 0 && (b[i][j] > 0) == (b[j][i] > 0))
                throw NotSkewSymmetrizable("entries b_ik and b_ki share a sign");
        }
    }

    // Propagate rational d over each component of the nonzero pattern,
    // then rescale to least positive integers.
    std::vector<Rat> d(n, Rat(0));
    std::vector<int> comp(n, -1);
    int compCount = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        int c = compCount++;
        comp[root] = c;
        d[root] = 1;
        std::vector<std::size_t> stack{root};
        std::vector<std::size_t> members;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (std::size_t k = 0; k < n; ++k) {
                if (b[i][k] == 0) continue;
                Rat dk = d[i] * Rat(std::abs(b[i][k]), std::abs(b[k][i]));
                if (comp[k] < 0) {
                    comp[k] = c;
                    d[k] = dk;
                    stack.push_back(k);
                } else if (d[k] != dk) {
                    throw NotSkewSymmetrizable("inconsistent symmetrizer along a cycle");
                }
            }
        }
        Int scale = 1;
        for (std::size_t i : members)
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(d[i]));
        Int g = 0;
        for (std::size_t i : members) {
            Rat scaled = d[i] * scale;
            g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(scaled));
        }
        for (std::size_t i : members) d[i] = d[i] * scale / g;
    }

    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = boost::multiprecision::numerator(d[i]);
    return out;
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::validate(
    const std::vector<std::vector<long long>>& entries, std::vector<std::size_t> ex,
    bool requireFullRank) {
    const std::size_t m = entries.size();
    const std::size_t n = ex.size();
    if (m == 0 || n == 0 || n > m) throw SizeMismatch("bad matrix dimensions");
    if (!std::is_sorted(ex.begin(), ex.end()) ||
        std::adjacent_find(ex.begin(), ex.end()) != ex.end() || ex.back() >= m)
        throw IndexOutOfRange("ex must be a sorted subset of the row indices");
    for (const auto& row : entries)
        if (row.size() != n) throw SizeMismatch("ragged matrix rows");

    std::vector<std::vector<long long>> principal(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) principal[i][j] = entries[ex[i]][j];
    std::vector<Int> d = findSkewSymmetrizer(principal);

    if (requireFullRank) {
        RatMatrix rm(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) rm.at(i, j) = Rat(entries[i][j]);
        if (rm.rank() != n) throw RankDeficient("B~ does not have full column rank");
    }

    ExtendedExchangeMatrix out;
    out.degenerate_ = !requireFullRank;
    out.m_ = m;
    out.n_ = n;
    out.ex_ = std::move(ex);
    out.d_ = std::move(d);
    out.e_.resize(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.e_[i * n + j] = entries[i][j];
    return out;
}

bool ExtendedExchangeMatrix::isExchangeable(std::size_t row) const {
    return std::binary_search(ex_.begin(), ex_.end(), row);
}

std::size_t ExtendedExchangeMatrix::colOf(std::size_t row) const {
    auto it = std::lower_bound(ex_.begin(), ex_.end(), row);
    if (it == ex_.end() || *it != row)
        throw NotExchangeable("row " + std::to_string(row + 1) + " is not exchangeable");
    return static_cast<std::size_t>(it - ex_.begin());
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::mutate(std::size_t k) const {
    const std::size_t kc = colOf(k);
    ExtendedExchangeMatrix out = *this;
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == k || ex_[j] == k) {
                out.e_[i * n_ + j] = -entry(i, j);
            } else {
                long long bik = entry(i, kc);
                long long bkj = entry(k, j);
                long long corr = std::abs(bik) * bkj + bik * std::abs(bkj);
                // |b_ik|b_kj + b_ik|b_kj| is 0 or 2*b_ik*b_kj, so /2 is exact.
                if (corr % 2 != 0) throw ClusterError("mutation correction term is odd");
                out.e_[i * n_ + j] = entry(i, j) + corr / 2;
            }
        }
    }
    return out;
}

nlohmann::json ExtendedExchangeMatrix::toJson() const {
    nlohmann::json j;
    j["m"] = m_;
    j["n"] = n_;
    nlohmann::json exArr = nlohmann::json::array();
    for (std::size_t x : ex_) exArr.push_back(x + 1);
    j["ex"] = exArr;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < n_; ++c) row.push_back(entry(i, c));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    if (degenerate_) j["degenerate"] = true;
    return j;
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::fromJson(const nlohmann::json& j) {
    std::vector<std::size_t> ex;
    for (const auto& x : j.at("ex")) {
        long long v = x.get<long long>();
        if (v < 1) throw ParseError("ex entries are 1-based positive indices");
        ex.push_back(static_cast<std::size_t>(v - 1));
    }
    std::vector<std::vector<long long>> entries;
    for (const auto& row : j.at("matrix"))
        entries.push_back(row.get<std::vector<long long>>());
    // "degenerate": true waives the full-column-rank requirement, so
    // rank-deficient desk cases survive a JSON round trip.
    return validate(entries, std::move(ex), !j.value("degenerate", false));
}

Seed Seed::initial(ExtendedExchangeMatrix m) {
    Seed s{.variables = {}, .matrix = std::move(m)};
    const std::size_t mm = s.matrix.rowCount();
    s.variables.reserve(mm);
    for (std::size_t i = 0; i < mm; ++i)
        s.variables.push_back(LaurentPoly::variable(mm, i));
    return s;
}

nlohmann::json Seed::toJson() const {
    nlohmann::json j = matrix.toJson();
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : variables) vars.push_back(v.toString());
    j["variables"] = vars;
    return j;
}

Seed Seed::fromJson(const nlohmann::json& j) {
    ExtendedExchangeMatrix m = ExtendedExchangeMatrix::fromJson(j);
    Seed s{.variables = {}, .matrix = std::move(m)};
    const std::size_t mm = s.matrix.rowCount();
    if (j.contains("variables")) {
        for (const auto& v : j.at("variables"))
            s.variables.push_back(LaurentPoly::parse(v.get<std::string>(), mm));
        if (s.variables.size() != mm)
            throw SizeMismatch("seed must carry one variable per matrix row");
    } else {
        for (std::size_t i = 0; i < mm; ++i)
            s.variables.push_back(LaurentPoly::variable(mm, i));
    }
    return s;
}

LaurentPoly exchangePartner(const Seed& s, std::size_t k) {
    const auto& M = s.matrix;
    const std::size_t kc = M.colOf(k);
    const std::size_t m = M.rowCount();
    LaurentPoly pos = LaurentPoly::constant(m, 1);
    LaurentPoly neg = LaurentPoly::constant(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        long long b = M.entry(i, kc);
        if (b > 0)
            pos = pos * s.variables[i].pow(static_cast<unsigned>(b));
        else if (b < 0)
            neg = neg * s.variables[i].pow(static_cast<unsigned>(-b));
    }
    return exactDiv(pos + neg, s.variables[k]);
}

Seed seedMutate(const Seed& s, std::size_t k) {
    Seed out = s;
    out.variables[k] = exchangePartner(s, k);
    out.matrix = s.matrix.mutate(k);
    return out;
}

}  // namespace cluster
