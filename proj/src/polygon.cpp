#include "cluster/polygon.hpp"

#include "cluster/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace cluster {

bool chordsCross(const Chord& x, const Chord& y) {
    if (x.first == y.first || x.first == y.second || x.second == y.first ||
        x.second == y.second)
        return false;  // sharing an endpoint is not an interior crossing
    auto strictlyBetween = [&](std::size_t v) { return x.first < v && v < x.second; };
    return strictlyBetween(y.first) != strictlyBetween(y.second);
}

namespace {

Chord makeChord(std::size_t a, std::size_t b) {
    return a < b ? Chord{a, b} : Chord{b, a};
}

bool isSide(std::size_t nVerts, const Chord& c) {
    return c.second == c.first + 1 || (c.first == 1 && c.second == nVerts);
}

// All vertex triples whose three connecting chords belong to the
// triangulation; in a triangulated convex polygon these are exactly the
// triangles.
std::vector<std::array<std::size_t, 3>> triangles(const Triangulation& t) {
    std::set<Chord> have(t.chords.begin(), t.chords.end());
    std::vector<std::array<std::size_t, 3>> out;
    const std::size_t v = t.n + 3;
    for (std::size_t a = 1; a <= v; ++a)
        for (std::size_t b = a + 1; b <= v; ++b) {
            if (!have.count({a, b})) continue;
            for (std::size_t c = b + 1; c <= v; ++c)
                if (have.count({a, c}) && have.count({b, c})) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace

Triangulation Triangulation::fromDiagonals(std::size_t n, std::vector<Chord> diagonals) {
    std::vector<Chord> chords = std::move(diagonals);
    const std::size_t v = n + 3;
    for (std::size_t i = 1; i <= v; ++i) chords.push_back(makeChord(i, i % v + 1));
    std::vector<std::size_t> ex(n);
    for (std::size_t i = 0; i < n; ++i) ex[i] = i;
    return withLabels(n, std::move(chords), std::move(ex));
}

Triangulation Triangulation::withLabels(std::size_t n, std::vector<Chord> chords,
                                        std::vector<std::size_t> ex) {
    const std::size_t v = n + 3;
    if (chords.size() != 2 * n + 3) throw SizeMismatch("expected 2n+3 chords");
    if (ex.size() != n) throw SizeMismatch("expected n diagonal labels");
    if (!std::is_sorted(ex.begin(), ex.end()) ||
        std::adjacent_find(ex.begin(), ex.end()) != ex.end())
        throw IndexOutOfRange("diagonal labels must be sorted and distinct");
    std::set<Chord> seen;
    for (auto& c : chords) {
        c = makeChord(c.first, c.second);
        if (c.first < 1 || c.second > v || c.first == c.second)
            throw IndexOutOfRange("chord endpoints must be distinct vertices in 1..n+3");
        if (!seen.insert(c).second) throw IndexOutOfRange("duplicate chord");
    }
    std::size_t sides = 0;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        bool side = isSide(v, chords[i]);
        bool diag = std::binary_search(ex.begin(), ex.end(), i);
        if (side == diag)
            throw IndexOutOfRange("diagonal labels must mark exactly the non-sides");
        sides += side;
    }
    if (sides != v) throw SizeMismatch("every boundary side must appear");
    for (std::size_t i : ex)
        for (std::size_t j : ex)
            if (i < j && chordsCross(chords[i], chords[j]))
                throw IndexOutOfRange("diagonals must be pairwise non-crossing");
    return Triangulation{n, std::move(chords), std::move(ex)};
}

bool Triangulation::isDiagonal(std::size_t labelIdx) const {
    return std::binary_search(ex.begin(), ex.end(), labelIdx);
}

std::vector<Chord> Triangulation::diagonals() const {
    std::vector<Chord> out;
    for (std::size_t i : ex) out.push_back(chords[i]);
    return out;
}

Triangulation Triangulation::parse(const std::string& text) {
    std::istringstream is(text);
    long long n = -1;
    char c = 0;
    if (!(is >> n) || n < 0) throw ParseError("expected the rank before ';'");
    std::vector<Chord> diagonals;
    for (long long k = 1; k <= n; ++k) {
        long long a = 0, b = 0;
        char d = 0;
        long long idx = 0;
        if (!(is >> c >> d >> idx) || c != ';' || d != 'd' || idx != k)
            throw ParseError("expected '; d" + std::to_string(k) + "=[i,j]'");
        if (!(is >> c) || c != '=' || !(is >> c) || c != '[' || !(is >> a >> c >> b) ||
            c != ',' || !(is >> c) || c != ']' || a < 1 || b < 1)
            throw ParseError("malformed chord in 'd" + std::to_string(k) + "'");
        diagonals.push_back(makeChord(static_cast<std::size_t>(a),
                                      static_cast<std::size_t>(b)));
    }
    if (is >> c) throw ParseError("trailing input after the last diagonal");
    return fromDiagonals(static_cast<std::size_t>(n), std::move(diagonals));
}

std::string Triangulation::toString() const {
    std::ostringstream os;
    os << n;
    std::size_t k = 0;
    for (std::size_t i : ex)
        os << "; d" << ++k << "=[" << chords[i].first << ',' << chords[i].second << ']';
    return os.str();
}

ExtendedExchangeMatrix bFromTriangulation(const Triangulation& t) {
    const std::size_t m = t.chords.size();
    const std::size_t n = t.n;
    std::map<Chord, std::size_t> row;
    for (std::size_t i = 0; i < m; ++i) row[t.chords[i]] = i;
    std::map<std::size_t, std::size_t> col;  // row index -> column position
    for (std::size_t j = 0; j < n; ++j) col[t.ex[j]] = j;

    std::vector<std::vector<long long>> b(m, std::vector<long long>(n, 0));
    for (const auto& tri : triangles(t)) {
        // Vertices are numbered clockwise, so u -> v -> w -> u walks the
        // triangle clockwise.
        Chord e[3] = {makeChord(tri[0], tri[1]), makeChord(tri[1], tri[2]),
                      makeChord(tri[2], tri[0])};
        for (int s = 0; s < 3; ++s) {
            std::size_t re = row[e[s]], rf = row[e[(s + 1) % 3]];
            if (auto it = col.find(rf); it != col.end()) b[re][it->second] += 1;
            if (auto it = col.find(re); it != col.end()) b[rf][it->second] -= 1;
        }
    }
    return ExtendedExchangeMatrix::validate(b, t.ex);
}

Triangulation flip(const Triangulation& t, std::size_t k) {
    if (k >= t.chords.size() || !t.isDiagonal(k))
        throw NotADiagonal("label " + std::to_string(k + 1) + " is not a diagonal");
    const Chord d = t.chords[k];
    std::vector<std::size_t> opposite;
    for (const auto& tri : triangles(t))
        for (int s = 0; s < 3; ++s)
            if (makeChord(tri[s], tri[(s + 1) % 3]) == d)
                opposite.push_back(tri[(s + 2) % 3]);
    if (opposite.size() != 2) throw NotADiagonal("diagonal is not inside a quadrilateral");
    Triangulation out = t;
    out.chords[k] = makeChord(opposite[0], opposite[1]);
    return out;
}

bool flipMutationCommutes(const Triangulation& t, std::size_t k) {
    auto flipped = bFromTriangulation(flip(t, k));
    auto mutated = bFromTriangulation(t).mutate(k);
    return flipped == mutated;
}

Chord snakeDiagonal(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexOutOfRange("snake diagonal index out of range");
    std::size_t k = i + 1;  // 1-based
    return {2 + (k - 1) / 2, n + 3 - k / 2};
}

Triangulation snakeTriangulation(std::size_t n) {
    std::vector<Chord> diagonals;
    for (std::size_t i = 0; i < n; ++i) diagonals.push_back(snakeDiagonal(n, i));
    return Triangulation::fromDiagonals(n, std::move(diagonals));
}

namespace {

std::vector<std::size_t> snakeCrossings(std::size_t n, const Chord& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (chordsCross(d, snakeDiagonal(n, i))) out.push_back(i);
    return out;
}

}  // namespace

Chord diagonalForRoot(std::size_t n, const RootCoords& root) {
    if (root.size() != n) throw WrongType("coordinate count does not match the rank");
    std::size_t neg = n, lo = n, hi = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (root[i] == -1 && neg == n && lo == n) { neg = i; continue; }
        if (root[i] == 1 && neg == n && (lo == n || hi + 1 == i)) {
            if (lo == n) lo = i;
            hi = i;
            continue;
        }
        if (root[i] != 0) throw WrongType("not an almost positive root of type A");
    }
    if (neg != n) return snakeDiagonal(n, neg);
    if (lo == n) throw WrongType("the zero vector labels no diagonal");
    const std::size_t v = n + 3;
    for (std::size_t a = 1; a <= v; ++a)
        for (std::size_t b = a + 2; b <= v; ++b) {
            Chord d{a, b};
            if (isSide(v, d)) continue;
            auto crossed = snakeCrossings(n, d);
            if (crossed.size() == hi - lo + 1 && crossed.front() == lo &&
                crossed.back() == hi)
                return d;
        }
    throw WrongType("no diagonal crosses exactly that snake interval");
}

RootCoords rootForDiagonal(std::size_t n, const Chord& d) {
    RootCoords out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (snakeDiagonal(n, i) == makeChord(d.first, d.second)) {
            out[i] = -1;
            return out;
        }
    auto crossed = snakeCrossings(n, d);
    if (crossed.empty() || crossed.back() - crossed.front() + 1 != crossed.size())
        throw WrongType("chord is neither a snake diagonal nor a crossing diagonal");
    for (std::size_t i : crossed) out[i] = 1;
    return out;
}

FlipGraph flipGraph(std::size_t n) {
    FlipGraph g;
    g.nodes.push_back(snakeTriangulation(n));
    auto keyOf = [](const Triangulation& t) {
        auto d = t.diagonals();
        std::sort(d.begin(), d.end());
        return d;
    };
    std::map<std::vector<Chord>, std::size_t> index{{keyOf(g.nodes[0]), 0}};
    std::set<std::pair<std::size_t, std::size_t>> edgeSet;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t k : g.nodes[i].ex) {
            Triangulation next = flip(g.nodes[i], k);
            auto key = keyOf(next);
            auto it = index.find(key);
            std::size_t target;
            if (it != index.end()) {
                target = it->second;
            } else {
                target = g.nodes.size();
                index.emplace(std::move(key), target);
                g.nodes.push_back(std::move(next));
            }
            auto pair = std::minmax(i, target);
            if (edgeSet.insert({pair.first, pair.second}).second)
                g.edges.push_back({pair.first, pair.second});
        }
    return g;
}

PluckerConfig::PluckerConfig(RatMatrix z) : z_(std::move(z)) {
    if (z_.rows() != 2) throw SizeMismatch("expected a 2 x (n+3) matrix");
}

Rat PluckerConfig::minor(std::size_t i, std::size_t j) const {
    return z_.at(0, i - 1) * z_.at(1, j - 1) - z_.at(0, j - 1) * z_.at(1, i - 1);
}

void verifyGrassmannRelations(const PluckerConfig& p) {
    const std::size_t v = p.points();
    for (std::size_t i = 1; i <= v; ++i)
        for (std::size_t j = i + 1; j <= v; ++j)
            for (std::size_t k = j + 1; k <= v; ++k)
                for (std::size_t l = k + 1; l <= v; ++l)
                    if (p.minor(i, k) * p.minor(j, l) !=
                        p.minor(i, j) * p.minor(k, l) + p.minor(i, l) * p.minor(j, k))
                        throw RelationViolated("quadratic minor identity failed");
}

void pluckerVerify(std::size_t n, int trials, Rng& rng) {
    if (n < 1) throw IndexOutOfRange("rank must be at least 1");
    Triangulation t = snakeTriangulation(n);
    auto m = bFromTriangulation(t);
    for (int trial = 0; trial < trials; ++trial) {
        RatMatrix z(2, n + 3);
        std::vector<Rat> x(t.chords.size());
        bool generic = false;
        while (!generic) {
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < n + 3; ++c)
                    z.at(r, c) = Rat(rng.intIn(-9, 9));
            PluckerConfig p(z);
            generic = true;
            for (std::size_t i = 0; i < t.chords.size(); ++i) {
                x[i] = p.minor(t.chords[i].first, t.chords[i].second);
                if (x[i] == 0) generic = false;
            }
        }
        verifyGrassmannRelations(PluckerConfig(z));

        PluckerConfig p(z);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = t.ex[j];
            Rat pos = 1, negp = 1;
            for (std::size_t i = 0; i < t.chords.size(); ++i) {
                long long b = m.entry(i, j);
                for (long long c = 0; c < b; ++c) pos *= x[i];
                for (long long c = 0; c < -b; ++c) negp *= x[i];
            }
            Chord other = flip(t, k).chords[k];
            if (x[k] * p.minor(other.first, other.second) != pos + negp)
                throw RelationViolated("Ptolemy exchange relation failed");
        }
    }
}

}  // namespace cluster
