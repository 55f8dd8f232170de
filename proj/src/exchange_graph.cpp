#include "cluster/exchange_graph.hpp"

#include "cluster/errors.hpp"
#include "cluster/root_system.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace cluster {

Seed canonicalSeed(const Seed& s) {
    const auto& ex = s.matrix.ex();
    const std::size_t n = ex.size();
    const std::size_t m = s.matrix.rowCount();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::stable_sort(p.begin(), p.end(), [&](std::size_t i, std::size_t j) {
        return s.variables[ex[i]] < s.variables[ex[j]];
    });

    std::vector<std::vector<long long>> rows(m, std::vector<long long>(n));
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t src = r;
        if (s.matrix.isExchangeable(r)) src = ex[p[s.matrix.colOf(r)]];
        for (std::size_t t = 0; t < n; ++t) rows[r][t] = s.matrix.entry(src, p[t]);
    }
    Seed out{.variables = s.variables,
             .matrix = ExtendedExchangeMatrix::validate(rows, ex, false)};
    for (std::size_t t = 0; t < n; ++t) out.variables[ex[t]] = s.variables[ex[p[t]]];
    return out;
}

std::string seedKey(const Seed& canonical) {
    std::ostringstream os;
    for (const auto& v : canonical.variables) os << v.toString() << ';';
    os << '|';
    for (std::size_t r = 0; r < canonical.matrix.rowCount(); ++r)
        for (std::size_t c = 0; c < canonical.matrix.colCount(); ++c)
            os << canonical.matrix.entry(r, c) << ',';
    return os.str();
}

std::string clusterKey(const Seed& canonical) {
    std::ostringstream os;
    for (std::size_t k : canonical.matrix.ex())
        os << canonical.variables[k].toString() << ';';
    return os.str();
}

namespace {

struct Expansion {
    std::size_t direction;  // row index mutated
    Seed neighbor;          // canonical
    LaurentPoly removed, added;
};

std::vector<Expansion> expandNode(const Seed& s) {
    std::vector<Expansion> out;
    for (std::size_t k : s.matrix.ex()) {
        Seed next = seedMutate(s, k);
        out.push_back(Expansion{k, canonicalSeed(next), s.variables[k],
                                next.variables[k]});
    }
    return out;
}

}  // namespace

ExchangeGraph explore(const Seed& start, const ExploreBounds& bounds, unsigned jobs) {
    ExchangeGraph g;
    g.baseCluster = start.matrix.ex();
    g.complete = true;
    g.nodes.push_back(canonicalSeed(start));
    std::map<std::string, std::size_t> index{{seedKey(g.nodes[0]), 0}};
    std::set<std::pair<std::size_t, std::size_t>> edgeSet;

    std::vector<std::size_t> layer{0};
    std::size_t depth = 0;
    while (!layer.empty()) {
        std::vector<std::vector<Expansion>> results(layer.size());
        if (jobs <= 1 || layer.size() == 1) {
            for (std::size_t i = 0; i < layer.size(); ++i)
                results[i] = expandNode(g.nodes[layer[i]]);
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (layer.size() + jobs - 1) / jobs;
            for (unsigned w = 0; w < jobs; ++w) {
                std::size_t lo = w * chunk, hi = std::min(layer.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i)
                        results[i] = expandNode(g.nodes[layer[i]]);
                });
            }
            for (auto& t : pool) t.join();
        }

        std::vector<std::size_t> nextLayer;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            for (auto& e : results[i]) {
                std::string key = seedKey(e.neighbor);
                auto it = index.find(key);
                std::size_t target;
                if (it != index.end()) {
                    target = it->second;
                } else if (g.nodes.size() >= bounds.maxSeeds ||
                           depth >= bounds.maxDepth) {
                    g.complete = false;
                    continue;
                } else {
                    target = g.nodes.size();
                    index.emplace(std::move(key), target);
                    g.nodes.push_back(std::move(e.neighbor));
                    nextLayer.push_back(target);
                }
                auto pair = std::minmax(layer[i], target);
                if (edgeSet.insert({pair.first, pair.second}).second)
                    g.edges.push_back(ExchangeGraph::Edge{
                        layer[i], target, std::move(e.removed), std::move(e.added)});
            }
        }
        layer = std::move(nextLayer);
        ++depth;
    }
    return g;
}

std::vector<LaurentPoly> clusterVariables(const ExchangeGraph& g) {
    if (!g.complete) throw IncompleteGraph("exploration was cut short by bounds");
    std::set<LaurentPoly> vars;
    for (const auto& s : g.nodes)
        for (std::size_t k : s.matrix.ex()) vars.insert(s.variables[k]);
    return {vars.begin(), vars.end()};
}

bool clusterDeterminesSeed(const ExchangeGraph& g) {
    std::set<std::string> keys;
    for (const auto& s : g.nodes)
        if (!keys.insert(clusterKey(s)).second) return false;
    return true;
}

namespace {

using Rows = std::vector<std::vector<long long>>;

std::string matrixCanonicalKey(const Rows& b) {
    const std::size_t n = b.size();
    auto flatten = [&](const std::vector<std::size_t>& p, long long sgn) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s += std::to_string(sgn * b[p[i]][p[j]]) + ",";
        return s;
    };
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (n > 7) {
        // Too many permutations; fall back to sign-only canonicalization.
        return std::min(flatten(p, 1), flatten(p, -1));
    }
    std::string best;
    do {
        for (long long sgn : {1LL, -1LL}) {
            std::string s = flatten(p, sgn);
            if (best.empty() || s < best) best = std::move(s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// If every row's off-diagonal entries share one sign, the matrix is
// B(A) for the Cartan matrix a_ij = -|b_ij|; return its finite label.
std::optional<std::string> bipartiteFiniteLabel(const Rows& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int sign = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || b[i][j] == 0) continue;
            int s = b[i][j] > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            if (s != sign) return std::nullopt;
        }
    }
    Rows a(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) a[i][j] = -std::abs(b[i][j]);
    }
    return finiteCartanLabel(a);
}

bool hasRank2Obstruction(const Rows& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (std::abs(b[i][j] * b[j][i]) >= 4) return true;
    return false;
}

}  // namespace

ClassificationResult classifyFiniteType(const Rows& b, std::size_t maxMatrices) {
    const std::size_t n = b.size();
    std::vector<std::size_t> ex(n);
    std::iota(ex.begin(), ex.end(), 0);
    ExtendedExchangeMatrix::validate(b, ex, false);  // reject invalid input

    struct Node {
        Rows rows;
        std::size_t parent;
        std::size_t dir;
    };
    std::vector<Node> nodes{{b, static_cast<std::size_t>(-1), 0}};
    std::set<std::string> seen{matrixCanonicalKey(b)};

    auto pathTo = [&](std::size_t i) {
        std::vector<std::size_t> path;
        for (; nodes[i].parent != static_cast<std::size_t>(-1); i = nodes[i].parent)
            path.push_back(nodes[i].dir);
        std::reverse(path.begin(), path.end());
        return path;
    };

    ClassificationResult res;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Rows& cur = nodes[i].rows;
        if (hasRank2Obstruction(cur)) {
            res.verdict = ClassificationResult::Verdict::InfiniteType;
            res.witness = cur;
            res.path = pathTo(i);
            return res;
        }
        if (auto label = bipartiteFiniteLabel(cur)) {
            res.verdict = ClassificationResult::Verdict::FiniteType;
            res.type = *label;
            res.witness = cur;
            res.path = pathTo(i);
            return res;
        }
        if (nodes.size() >= maxMatrices) continue;  // stop growing, drain queue
        auto m = ExtendedExchangeMatrix::validate(cur, ex, false);
        for (std::size_t k = 0; k < n; ++k) {
            auto mk = m.mutate(k);
            Rows rows(n, std::vector<long long>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) rows[r][c] = mk.entry(r, c);
            if (seen.insert(matrixCanonicalKey(rows)).second)
                nodes.push_back({std::move(rows), i, k});
        }
    }
    res.verdict = ClassificationResult::Verdict::Unknown;
    return res;
}

std::vector<std::pair<LaurentPoly, DenominatorVector>> denominatorTable(
    const ExchangeGraph& g) {
    std::vector<std::pair<LaurentPoly, DenominatorVector>> out;
    for (const auto& v : clusterVariables(g))
        out.emplace_back(v, denominatorVector(v, g.baseCluster));
    return out;
}

namespace {

// All products of exchangeable variables of one seed with total degree
// in [1, maxDegree].
void collectMonomials(const std::vector<LaurentPoly>& vars, unsigned maxDegree,
                      std::size_t from, unsigned used, const LaurentPoly& acc,
                      std::set<LaurentPoly>& out) {
    if (used > 0) out.insert(acc);
    if (used == maxDegree) return;
    for (std::size_t i = from; i < vars.size(); ++i)
        collectMonomials(vars, maxDegree, i, used + 1, acc * vars[i], out);
}

}  // namespace

ConjectureReport conjectureChecks(const ExchangeGraph& g, unsigned maxDegree, Rng& rng) {
    if (!g.complete) throw IncompleteGraph("exploration was cut short by bounds");
    ConjectureReport rep;
    rep.seedDeterminedByCluster = clusterDeterminesSeed(g);

    const std::size_t m = g.nodes.front().matrix.rowCount();
    std::set<LaurentPoly> monomialSet;
    for (const auto& s : g.nodes) {
        std::vector<LaurentPoly> vars;
        for (std::size_t k : s.matrix.ex()) vars.push_back(s.variables[k]);
        collectMonomials(vars, maxDegree, 0, 0, LaurentPoly::constant(m, 1),
                         monomialSet);
    }
    std::vector<LaurentPoly> monomials(monomialSet.begin(), monomialSet.end());
    rep.monomialCount = monomials.size();

    // Linear independence via exact rank at random positive points,
    // repeated so an unlucky sample cannot produce a false failure.
    const std::size_t k = monomials.size();
    for (int attempt = 0; attempt < 3 && !rep.monomialsIndependent; ++attempt) {
        RatMatrix mat(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<Rat> pt(m);
            for (auto& x : pt) x = Rat(rng.intIn(1, 40), rng.intIn(1, 40));
            for (std::size_t c = 0; c < k; ++c)
                mat.at(r, c) = monomials[c].evalRational(pt);
        }
        rep.monomialsIndependent = mat.rank() == k;
    }

    std::set<std::vector<int>> dvecs;
    rep.distinctDenominators = true;
    for (const auto& mono : monomials)
        if (!dvecs.insert(denominatorVector(mono, g.baseCluster).entries).second)
            rep.distinctDenominators = false;

    rep.nonnegativeCoefficients = true;
    for (const auto& v : clusterVariables(g))
        if (!v.allCoefficientsNonNegative()) rep.nonnegativeCoefficients = false;
    return rep;
}

std::string toDot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"";
        bool first = true;
        for (std::size_t k : g.nodes[i].matrix.ex()) {
            if (!first) os << ", ";
            first = false;
            os << g.nodes[i].variables[k].toString();
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.removed.toString()
           << " | " << e.added.toString() << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json ExchangeGraph::toJson() const {
    nlohmann::json j;
    j["complete"] = complete;
    nlohmann::json base = nlohmann::json::array();
    for (std::size_t k : baseCluster) base.push_back(k + 1);
    j["baseCluster"] = base;
    nlohmann::json ns = nlohmann::json::array();
    for (const auto& s : nodes) ns.push_back(s.toJson());
    j["nodes"] = ns;
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : edges) {
        nlohmann::json je;
        je["a"] = e.a + 1;
        je["b"] = e.b + 1;
        je["removed"] = e.removed.toString();
        je["added"] = e.added.toString();
        es.push_back(je);
    }
    j["edges"] = es;
    return j;
}

}  // namespace cluster
