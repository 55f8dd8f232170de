#include "cluster/root_system.hpp"

#include "cluster/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace cluster {

namespace {

// s_i acting on simple-root coordinates.
void reflect(const std::vector<std::vector<long long>>& a, std::size_t i,
             std::vector<long long>& v) {
    long long c = 0;
    for (std::size_t j = 0; j < v.size(); ++j) c += a[i][j] * v[j];
    v[i] -= c;
}

void reflect(const std::vector<std::vector<long long>>& a, std::size_t i, RootCoords& v) {
    long long c = 0;
    for (std::size_t j = 0; j < v.size(); ++j) c += a[i][j] * v[j];
    v[i] -= static_cast<int>(c);
}

// Returns the index i if v = -alpha_i, or npos.
std::size_t negSimpleIndex(const RootCoords& v) {
    std::size_t idx = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != -1 || idx != static_cast<std::size_t>(-1))
            return static_cast<std::size_t>(-1);
        idx = i;
    }
    return idx;
}

struct TypeData {
    char family;
    std::size_t n;
    std::vector<int> exponents;
    int h;
};

TypeData parseLabel(const std::string& label) {
    if (label.size() < 2) throw UnknownType("bad type label '" + label + "'");
    char fam = label[0];
    std::size_t n = 0;
    for (std::size_t p = 1; p < label.size(); ++p) {
        if (label[p] < '0' || label[p] > '9')
            throw UnknownType("bad type label '" + label + "'");
        n = n * 10 + static_cast<std::size_t>(label[p] - '0');
    }
    TypeData t{fam, n, {}, 0};
    switch (fam) {
        case 'A':
            if (n < 1) throw UnknownType("A requires rank >= 1");
            for (std::size_t e = 1; e <= n; ++e) t.exponents.push_back(static_cast<int>(e));
            t.h = static_cast<int>(n) + 1;
            break;
        case 'B':
        case 'C':
            if (n < 2) throw UnknownType(std::string(1, fam) + " requires rank >= 2");
            for (std::size_t e = 0; e < n; ++e) t.exponents.push_back(static_cast<int>(2 * e + 1));
            t.h = static_cast<int>(2 * n);
            break;
        case 'D':
            if (n < 4) throw UnknownType("D requires rank >= 4");
            for (std::size_t e = 0; e + 1 < n; ++e)
                t.exponents.push_back(static_cast<int>(2 * e + 1));
            t.exponents.push_back(static_cast<int>(n) - 1);
            std::sort(t.exponents.begin(), t.exponents.end());
            t.h = static_cast<int>(2 * n) - 2;
            break;
        case 'E':
            if (n == 6) { t.exponents = {1, 4, 5, 7, 8, 11}; t.h = 12; }
            else if (n == 7) { t.exponents = {1, 5, 7, 9, 11, 13, 17}; t.h = 18; }
            else if (n == 8) { t.exponents = {1, 7, 11, 13, 17, 19, 23, 29}; t.h = 30; }
            else throw UnknownType("E requires rank 6, 7, or 8");
            break;
        case 'F':
            if (n != 4) throw UnknownType("F requires rank 4");
            t.exponents = {1, 5, 7, 11};
            t.h = 12;
            break;
        case 'G':
            if (n != 2) throw UnknownType("G requires rank 2");
            t.exponents = {1, 5};
            t.h = 6;
            break;
        default:
            throw UnknownType("bad type label '" + label + "'");
    }
    return t;
}

}  // namespace

CartanMatrix cartanOfType(const std::string& label) {
    TypeData t = parseLabel(label);
    const std::size_t n = t.n;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](std::size_t i, std::size_t j, long long aij = -1, long long aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (t.family) {
        case 'A':
        case 'B':
        case 'C':
        case 'F':
        case 'G':
            for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
            if (t.family == 'B') edge(n - 2, n - 1, -1, -2);  // alpha_n short
            if (t.family == 'C') edge(n - 2, n - 1, -2, -1);  // alpha_n long
            if (t.family == 'F') edge(1, 2, -1, -2);
            if (t.family == 'G') edge(0, 1, -1, -3);
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            // Path 1-3-4-5-6(-7-8) with node 2 attached to node 4.
            edge(0, 2);
            for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
    }
    return CartanMatrix{std::move(a), label};
}

std::vector<RootCoords> positiveRootsOfCartan(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    std::set<RootCoords> roots;
    std::vector<RootCoords> work;
    for (std::size_t i = 0; i < n; ++i) {
        RootCoords e(n, 0);
        e[i] = 1;
        roots.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        RootCoords v = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            RootCoords w = v;
            reflect(a, i, w);
            if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) continue;
            if (roots.insert(w).second) work.push_back(w);
        }
        if (roots.size() > 10000)
            throw UnknownType("root closure does not terminate: not finite type");
    }
    return {roots.begin(), roots.end()};
}

bool RootSystem::isPositiveRoot(const RootCoords& v) const {
    return std::binary_search(positiveRoots.begin(), positiveRoots.end(), v);
}

bool RootSystem::longestElementIsMinusIdentity() const {
    for (std::size_t i = 0; i < longestElementPerm.size(); ++i)
        if (longestElementPerm[i] != i) return false;
    return true;
}

std::vector<RootCoords> RootSystem::almostPositiveRoots() const {
    std::vector<RootCoords> out;
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
        RootCoords v(n, 0);
        v[i] = -1;
        out.push_back(std::move(v));
    }
    out.insert(out.end(), positiveRoots.begin(), positiveRoots.end());
    return out;
}

RootSystem buildRootSystem(const std::string& label) {
    TypeData t = parseLabel(label);
    RootSystem rs;
    rs.cartan = cartanOfType(label);
    rs.positiveRoots = positiveRootsOfCartan(rs.cartan.a);
    rs.exponents = t.exponents;
    rs.coxeterNumber = t.h;

    const std::size_t n = t.n;
    const auto& a = rs.cartan.a;
    const std::size_t nPos = rs.positiveRoots.size();
    if (2 * nPos != n * static_cast<std::size_t>(t.h))
        throw UnknownType("positive root count disagrees with n*h/2");
    if (std::accumulate(rs.exponents.begin(), rs.exponents.end(), 0) !=
        static_cast<int>(nPos))
        throw UnknownType("exponent sum disagrees with the positive root count");

    // Longest element: greedy descent of rho in fundamental-weight
    // coordinates.  s_i subtracts v_i * alpha_i, and alpha_i has weight
    // coordinates (a[j][i])_j.
    std::vector<long long> v(n, 1);
    std::vector<std::size_t> word;
    while (true) {
        std::size_t i = n;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] > 0) { i = k; break; }
        if (i == n) break;
        long long vi = v[i];
        for (std::size_t j = 0; j < n; ++j) v[j] -= vi * a[j][i];
        word.push_back(i);
        if (word.size() > nPos) throw UnknownType("longest-element descent overran l(w0)");
    }
    rs.longestElementPerm.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        RootCoords r(n, 0);
        r[j] = 1;
        for (std::size_t i : word) reflect(a, i, r);
        std::size_t img = negSimpleIndex(r);
        if (img == static_cast<std::size_t>(-1))
            throw UnknownType("w0 does not send a simple root to a negative simple root");
        rs.longestElementPerm[j] = img;
    }

    // Two-coloring with eps = +1 at the lowest index of each component.
    rs.sign.assign(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (rs.sign[start] != 0) continue;
        rs.sign[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                if (rs.sign[j] == 0) {
                    rs.sign[j] = -rs.sign[i];
                    stack.push_back(j);
                } else if (rs.sign[j] != -rs.sign[i]) {
                    throw UnknownType("Dynkin graph is not bipartite");
                }
            }
        }
    }
    return rs;
}

std::vector<std::vector<long long>> bFromCartan(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    std::vector<std::vector<long long>> b(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) b[i][j] = rs.sign[i] * rs.cartan.a[i][j];
    return b;
}

RootCoords tau(const RootSystem& rs, int sgn, const RootCoords& alpha) {
    const std::size_t n = rs.rank();
    std::size_t neg = negSimpleIndex(alpha);
    if (neg != static_cast<std::size_t>(-1)) {
        if (rs.sign[neg] != sgn) return alpha;
        RootCoords r(n, 0);
        r[neg] = 1;
        return r;
    }
    if (!rs.isPositiveRoot(alpha)) throw IndexOutOfRange("not an almost positive root");
    // The reflections with eps(i) = sgn are pairwise orthogonal, so a
    // straight left-to-right application realizes the unordered product.
    RootCoords v = alpha;
    for (std::size_t i = 0; i < n; ++i)
        if (rs.sign[i] == sgn) reflect(rs.cartan.a, i, v);
    if (rs.isPositiveRoot(v)) return v;
    if (negSimpleIndex(v) == static_cast<std::size_t>(-1))
        throw IndexOutOfRange("tau left the almost positive roots");
    return v;
}

long long tauOrbitOrder(const RootSystem& rs) {
    auto pts = rs.almostPositiveRoots();
    std::vector<std::size_t> perm(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        RootCoords img = tau(rs, -1, tau(rs, +1, pts[i]));
        auto it = std::lower_bound(pts.begin(), pts.end(), img);
        perm[i] = static_cast<std::size_t>(it - pts.begin());
    }
    long long order = 1;
    std::vector<bool> seen(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

bool compatible(const RootSystem& rs, const RootCoords& alpha, const RootCoords& beta) {
    if (alpha == beta) return true;
    RootCoords a = alpha, b = beta;
    // Every tau orbit meets the negative simple roots, so this loop
    // reaches one in at most the order of tau_- tau_+ steps.
    for (long long guard = 2 * (rs.coxeterNumber + 2); guard >= 0; --guard) {
        std::size_t i = negSimpleIndex(a);
        if (i != static_cast<std::size_t>(-1)) return b[i] == 0;
        i = negSimpleIndex(b);
        if (i != static_cast<std::size_t>(-1)) return a[i] == 0;
        a = tau(rs, -1, tau(rs, +1, a));
        b = tau(rs, -1, tau(rs, +1, b));
    }
    throw IndexOutOfRange("tau reduction failed to reach a negative simple root");
}

std::vector<std::vector<RootCoords>> enumerateClusters(const RootSystem& rs) {
    auto pts = rs.almostPositiveRoots();
    const std::size_t N = pts.size();
    std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            adj[i][j] = adj[j][i] = compatible(rs, pts[i], pts[j]) ? 1 : 0;

    // Bron-Kerbosch with pivoting over the compatibility graph.
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> R;
    auto expand = [&](auto&& self, std::vector<std::size_t> P,
                      std::vector<std::size_t> X) -> void {
        if (P.empty() && X.empty()) {
            cliques.push_back(R);
            return;
        }
        std::size_t pivot = !P.empty() ? P.front() : X.front();
        for (std::size_t cand : std::vector<std::size_t>(P)) {
            if (adj[pivot][cand]) continue;
            std::vector<std::size_t> P2, X2;
            for (std::size_t u : P)
                if (adj[cand][u]) P2.push_back(u);
            for (std::size_t u : X)
                if (adj[cand][u]) X2.push_back(u);
            R.push_back(cand);
            self(self, std::move(P2), std::move(X2));
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), cand));
            X.push_back(cand);
        }
    };
    std::vector<std::size_t> all(N);
    std::iota(all.begin(), all.end(), 0);
    expand(expand, std::move(all), {});

    std::vector<std::vector<RootCoords>> out;
    for (auto& c : cliques) {
        std::vector<RootCoords> cluster;
        for (std::size_t i : c) cluster.push_back(pts[i]);
        std::sort(cluster.begin(), cluster.end());
        out.push_back(std::move(cluster));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int countClusters(const RootSystem& rs) {
    Rat prod = 1;
    for (int e : rs.exponents) prod *= Rat(e + rs.coxeterNumber + 1, e + 1);
    if (boost::multiprecision::denominator(prod) != 1)
        throw NonIntegerResult("cluster count formula gave a non-integer");
    return boost::multiprecision::numerator(prod);
}

Int countClustersByLabel(const std::string& label) {
    Int total = 1;
    std::size_t pos = 0;
    while (pos <= label.size()) {
        std::size_t next = label.find('x', pos);
        std::string part =
            label.substr(pos, next == std::string::npos ? next : next - pos);
        total *= countClusters(buildRootSystem(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return total;
}

namespace {

// Recognizes one connected Dynkin component given the Cartan matrix and
// the component's vertex list; nullopt if the shape is not finite type.
std::optional<std::string> componentLabel(const std::vector<std::vector<long long>>& a,
                                          const std::vector<std::size_t>& verts) {
    const std::size_t n = verts.size();
    if (n == 1) return "A1";
    std::vector<std::vector<std::size_t>> nbr(n);
    std::vector<std::pair<std::size_t, std::size_t>> heavy;  // weight-2 edges
    std::size_t edgeCount = 0;
    bool hasTriple = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long long w = a[verts[i]][verts[j]] * a[verts[j]][verts[i]];
            if (w == 0) continue;
            if (w > 3) return std::nullopt;
            if (w == 3) hasTriple = true;
            if (w == 2) heavy.push_back({i, j});
            nbr[i].push_back(j);
            nbr[j].push_back(i);
            ++edgeCount;
        }
    if (edgeCount != n - 1) return std::nullopt;  // a cycle
    if (hasTriple) return n == 2 ? std::optional<std::string>("G2") : std::nullopt;
    if (heavy.size() > 1) return std::nullopt;

    std::size_t branch = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (nbr[i].size() > 3) return std::nullopt;
        if (nbr[i].size() == 3) {
            if (branch != n) return std::nullopt;
            branch = i;
        }
    }

    if (!heavy.empty()) {
        if (branch != n) return std::nullopt;
        // Walk the path from one endpoint.
        std::size_t start = 0;
        while (nbr[start].size() != 1) ++start;
        std::vector<std::size_t> path{start};
        std::size_t prev = n, cur = start;
        while (path.size() < n) {
            for (std::size_t x : nbr[cur])
                if (x != prev) {
                    prev = cur;
                    cur = x;
                    path.push_back(x);
                    break;
                }
        }
        std::size_t t = 0;
        while (!((path[t] == heavy[0].first && path[t + 1] == heavy[0].second) ||
                 (path[t] == heavy[0].second && path[t + 1] == heavy[0].first)))
            ++t;
        if (t == 0 && n > 2) {
            std::reverse(path.begin(), path.end());
            t = n - 2;
        }
        if (t == n - 2) {
            if (n == 2) return "B2";
            return (a[verts[path[n - 1]]][verts[path[n - 2]]] == -2 ? "B" : "C") +
                   std::to_string(n);
        }
        if (n == 4 && t == 1) return "F4";
        return std::nullopt;
    }

    if (branch == n) return "A" + std::to_string(n);
    // Leg lengths off the branch node.
    std::vector<std::size_t> legs;
    for (std::size_t first : nbr[branch]) {
        std::size_t len = 1, prev = branch, cur = first;
        while (nbr[cur].size() == 2) {
            std::size_t next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(n);
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return "E" + std::to_string(legs[2] + 4);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> finiteCartanLabel(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n || a[i][i] != 2) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)))
                return std::nullopt;
    }
    std::vector<int> comp(n, -1);
    std::vector<std::string> labels;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<std::size_t> verts{start};
        comp[start] = 1;
        for (std::size_t q = 0; q < verts.size(); ++q)
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && a[verts[q]][j] != 0) {
                    comp[j] = 1;
                    verts.push_back(j);
                }
        auto lbl = componentLabel(a, verts);
        if (!lbl) return std::nullopt;
        labels.push_back(*lbl);
    }
    std::sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        return std::stoul(x.substr(1)) < std::stoul(y.substr(1));
    });
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += 'x';
        out += l;
    }
    return out;
}

nlohmann::json RootSystem::toJson() const {
    nlohmann::json j;
    j["type"] = cartan.type;
    j["cartan"] = cartan.a;
    j["positiveRoots"] = positiveRoots;
    j["exponents"] = exponents;
    j["coxeterNumber"] = coxeterNumber;
    nlohmann::json perm = nlohmann::json::array();
    for (std::size_t p : longestElementPerm) perm.push_back(p + 1);
    j["longestElementPerm"] = perm;
    j["sign"] = sign;
    return j;
}

}  // namespace cluster
