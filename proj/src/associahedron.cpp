#include "cluster/associahedron.hpp"

#include "cluster/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cluster {

Rat SupportFunction::at(const RootSystem& rs, const RootCoords& root) const {
    auto pts = rs.almostPositiveRoots();
    auto it = std::find(pts.begin(), pts.end(), root);
    if (it == pts.end()) throw IndexOutOfRange("not an almost positive root");
    return values[static_cast<std::size_t>(it - pts.begin())];
}

SupportFunction supportFromNegativeSimples(const RootSystem& rs,
                                           const std::vector<Rat>& onNegSimple) {
    const std::size_t n = rs.rank();
    if (onNegSimple.size() != n) throw SizeMismatch("expected one value per simple root");
    for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < n; ++i) s += Rat(rs.cartan.a[i][j]) * onNegSimple[i];
        if (s <= 0)
            throw HypothesisViolated("sum_i a_ij F(-alpha_i) must be positive");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (onNegSimple[i] != onNegSimple[rs.longestElementPerm[i]])
            throw HypothesisViolated("F on -Pi must be invariant under -w0");

    auto pts = rs.almostPositiveRoots();
    std::map<RootCoords, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;

    SupportFunction f;
    f.values.assign(pts.size(), Rat(0));
    std::vector<bool> known(pts.size(), false);
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < n; ++i) {
        f.values[i] = onNegSimple[i];  // -alpha_i sits at position i
        known[i] = true;
        work.push_back(i);
    }
    // Propagate along the tau orbits; every orbit meets -Pi.
    while (!work.empty()) {
        std::size_t i = work.back();
        work.pop_back();
        for (int sgn : {+1, -1}) {
            std::size_t j = index.at(tau(rs, sgn, pts[i]));
            if (!known[j]) {
                f.values[j] = f.values[i];
                known[j] = true;
                work.push_back(j);
            } else if (f.values[j] != f.values[i]) {
                throw HypothesisViolated("support values conflict along a tau orbit");
            }
        }
    }
    if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
        throw HypothesisViolated("a tau orbit missed the negative simple roots");
    return f;
}

SupportFunction buildSupportFunction(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    // Positive coroots are the positive roots of the transposed Cartan
    // matrix, written in the simple-coroot basis.
    std::vector<std::vector<long long>> at(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = rs.cartan.a[j][i];
    std::vector<Rat> half(n, Rat(0));
    for (const auto& coroot : positiveRootsOfCartan(at))
        for (std::size_t i = 0; i < n; ++i) half[i] += Rat(coroot[i], 2);
    return supportFromNegativeSimples(rs, half);
}

Polytope buildPolytope(const RootSystem& rs, const SupportFunction& f) {
    const std::size_t n = rs.rank();
    Polytope p;
    p.normals = rs.almostPositiveRoots();
    p.bounds = f.values;
    p.clusters = enumerateClusters(rs);

    for (const auto& cluster : p.clusters) {
        RatMatrix m(n, n);
        std::vector<Rat> rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Rat(cluster[r][c]);
            rhs[r] = f.at(rs, cluster[r]);
        }
        std::vector<Rat> z;
        try {
            z = m.solve(rhs);
        } catch (const std::domain_error&) {
            throw SingularClusterSystem("cluster roots do not span the lattice");
        }
        // The vertex must meet exactly its own n facets and stay
        // strictly inside every other inequality.
        for (std::size_t i = 0; i < p.normals.size(); ++i) {
            Rat v = 0;
            for (std::size_t c = 0; c < n; ++c) v += z[c] * Rat(p.normals[i][c]);
            bool own = std::binary_search(cluster.begin(), cluster.end(), p.normals[i]);
            if (own ? v != p.bounds[i] : v >= p.bounds[i])
                throw HypothesisViolated("vertex-facet incidence is not simple");
        }
        p.vertices.push_back(std::move(z));
    }

    for (std::size_t i = 0; i < p.clusters.size(); ++i)
        for (std::size_t j = i + 1; j < p.clusters.size(); ++j) {
            std::vector<RootCoords> common;
            std::set_intersection(p.clusters[i].begin(), p.clusters[i].end(),
                                  p.clusters[j].begin(), p.clusters[j].end(),
                                  std::back_inserter(common));
            if (common.size() == n - 1) p.edges.push_back({i, j});
        }
    return p;
}

std::string Polytope::hRepText() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t c = 0; c < normals[i].size(); ++c)
            os << (c ? " " : "") << normals[i][c];
        os << " <= " << ratToString(bounds[i]) << '\n';
    }
    return os.str();
}

std::string Polytope::vRepText() const {
    std::ostringstream os;
    for (const auto& v : vertices) {
        for (std::size_t c = 0; c < v.size(); ++c)
            os << (c ? " " : "") << ratToString(v[c]);
        os << '\n';
    }
    return os.str();
}

std::string Polytope::skeletonDot() const {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        os << "  v" << i << " [label=\"";
        for (std::size_t c = 0; c < vertices[i].size(); ++c)
            os << (c ? " " : "") << ratToString(vertices[i][c]);
        os << "\"];\n";
    }
    for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cluster
