#include "CLI11.hpp"

#include "cluster/acceptance.hpp"
#include "cluster/associahedron.hpp"
#include "cluster/dbc.hpp"
#include "cluster/errors.hpp"
#include "cluster/exchange_graph.hpp"
#include "cluster/polygon.hpp"
#include "cluster/root_system.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cluster;
using nlohmann::json;

std::vector<long long> parseCsvInts(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size()) throw ParseError("bad integer list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return json::parse(in);
}

std::vector<std::vector<long long>> parseIntMatrix(const std::string& text) {
    auto j = json::parse(text);
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) rows.push_back(row.get<std::vector<long long>>());
    if (rows.empty()) throw ParseError("empty matrix");
    return rows;
}

RatMatrix parseRatMatrix(const json& j) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
        std::vector<Rat> r;
        for (const auto& cell : row) {
            if (cell.is_string())
                r.push_back(ratFromString(cell.get<std::string>()));
            else if (cell.is_number_integer())
                r.push_back(Rat(cell.get<long long>()));
            else
                throw ParseError("matrix entries must be integers or rational strings");
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix");
        for (std::size_t c = 0; c < rows[i].size(); ++c) m.at(i, c) = rows[i][c];
    }
    return m;
}

void printSeedText(const Seed& s) {
    for (std::size_t i = 0; i < s.variables.size(); ++i)
        std::cout << "x" << i + 1 << " = " << s.variables[i].toString() << "\n";
    std::cout << "ex:";
    for (std::size_t k : s.matrix.ex()) std::cout << " " << k + 1;
    std::cout << "\nmatrix:\n";
    for (std::size_t i = 0; i < s.matrix.rowCount(); ++i) {
        for (std::size_t c = 0; c < s.matrix.colCount(); ++c)
            std::cout << (c ? " " : "") << s.matrix.entry(i, c);
        std::cout << "\n";
    }
}

ExtendedExchangeMatrix matrixFromOptions(const std::string& matrixText,
                                         const std::string& exCsv,
                                         bool allowDegenerate) {
    auto rows = parseIntMatrix(matrixText);
    std::vector<std::size_t> ex;
    if (exCsv.empty()) {
        if (rows[0].size() != rows.size())
            throw ParseError("non-square matrix needs an explicit --ex list");
        ex.resize(rows.size());
        std::iota(ex.begin(), ex.end(), 0);
    } else {
        for (long long v : parseCsvInts(exCsv)) {
            if (v < 1) throw ParseError("--ex entries are 1-based");
            ex.push_back(static_cast<std::size_t>(v - 1));
        }
    }
    return ExtendedExchangeMatrix::validate(rows, ex, !allowDegenerate);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cluster-algebra toolbox"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t randSeed = 0;
    unsigned jobs = 1;
    app.add_option("--format", format, "Output format: text, json, or dot")
        ->capture_default_str();
    app.add_option("--rand-seed", randSeed,
                   "Seed for every randomized verification")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads for explorations")
        ->capture_default_str();

    std::function<int()> run;

    // mutate: apply a direction sequence to a JSON seed.
    auto* cmdMutate = app.add_subcommand("mutate", "Mutate a seed along directions");
    std::string seedFile, dirsCsv;
    cmdMutate->add_option("--seed", seedFile, "Seed JSON file")->required();
    cmdMutate->add_option("--dirs", dirsCsv,
                          "Comma list of 1-based exchangeable row indices")
        ->required();
    cmdMutate->callback([&] {
        run = [&]() {
            Seed s = Seed::fromJson(readJsonFile(seedFile));
            for (long long d : parseCsvInts(dirsCsv)) {
                if (d < 1) throw ParseError("directions are 1-based");
                s = seedMutate(s, static_cast<std::size_t>(d - 1));
            }
            if (format == "json")
                std::cout << s.toJson().dump(2) << "\n";
            else
                printSeedText(s);
            return 0;
        };
    });

    // explore: exchange graph of a seed.
    auto* cmdExplore = app.add_subcommand("explore", "Explore the exchange graph");
    std::string exploreSeedFile, exploreMatrix, exploreEx;
    bool allowDegenerate = false;
    std::size_t maxSeeds = 100000, maxDepth = 100000;
    cmdExplore->add_option("--seed", exploreSeedFile, "Seed JSON file");
    cmdExplore->add_option("--matrix", exploreMatrix,
                           "Extended exchange matrix as a JSON array");
    cmdExplore->add_option("--ex", exploreEx,
                           "1-based exchangeable rows (default: all, square only)");
    cmdExplore->add_flag("--allow-degenerate", allowDegenerate,
                         "Accept a rank-deficient matrix");
    cmdExplore->add_option("--max-seeds", maxSeeds, "Seed budget")
        ->capture_default_str();
    cmdExplore->add_option("--max-depth", maxDepth, "Mutation depth budget")
        ->capture_default_str();
    cmdExplore->callback([&] {
        run = [&]() {
            Seed start = [&] {
                if (!exploreSeedFile.empty())
                    return Seed::fromJson(readJsonFile(exploreSeedFile));
                if (exploreMatrix.empty())
                    throw ParseError("explore needs --seed or --matrix");
                return Seed::initial(matrixFromOptions(exploreMatrix, exploreEx,
                                                       allowDegenerate));
            }();
            auto g = explore(start, {.maxSeeds = maxSeeds, .maxDepth = maxDepth},
                             jobs);
            if (format == "json")
                std::cout << g.toJson().dump(2) << "\n";
            else
                std::cout << toDot(g);
            return 0;
        };
    });

    // classify: finite-type search for a principal matrix.
    auto* cmdClassify = app.add_subcommand("classify", "Classify a mutation class");
    std::string classifyMatrix;
    cmdClassify->add_option("--matrix", classifyMatrix, "Square JSON matrix")
        ->required();
    cmdClassify->callback([&] {
        run = [&]() {
            auto res = classifyFiniteType(parseIntMatrix(classifyMatrix));
            const char* verdict =
                res.verdict == ClassificationResult::Verdict::FiniteType
                    ? "FiniteType"
                    : res.verdict == ClassificationResult::Verdict::InfiniteType
                          ? "InfiniteType"
                          : "Unknown";
            if (format == "json") {
                json j{{"verdict", verdict}, {"witness", res.witness}};
                if (!res.type.empty()) j["type"] = res.type;
                json path = json::array();
                for (std::size_t d : res.path) path.push_back(d + 1);
                j["path"] = path;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << verdict << "\n";
                if (!res.type.empty()) std::cout << "type: " << res.type << "\n";
            }
            return 0;
        };
    });

    // count / clusters: root-theoretic cluster combinatorics.
    auto* cmdCount = app.add_subcommand("count", "Number of clusters of a type");
    std::string countLabel;
    cmdCount->add_option("type", countLabel, "Type label such as F4 or A2xA1")
        ->required();
    cmdCount->callback([&] {
        run = [&]() {
            std::cout << countClustersByLabel(countLabel) << "\n";
            return 0;
        };
    });

    auto* cmdClusters = app.add_subcommand("clusters", "List all root clusters");
    std::string clustersLabel;
    cmdClusters->add_option("type", clustersLabel, "Connected type label")
        ->required();
    cmdClusters->callback([&] {
        run = [&]() {
            auto rs = buildRootSystem(clustersLabel);
            auto clusters = enumerateClusters(rs);
            if (format == "json") {
                json j = json::array();
                for (const auto& c : clusters) j.push_back(c);
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& c : clusters) {
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        std::cout << (i ? " (" : "(");
                        for (std::size_t t = 0; t < c[i].size(); ++t)
                            std::cout << (t ? "," : "") << c[i][t];
                        std::cout << ")";
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        };
    });

    // polytope: generalized associahedron of a type.
    auto* cmdPolytope = app.add_subcommand("polytope", "Generalized associahedron");
    std::string polytopeLabel;
    cmdPolytope->add_option("type", polytopeLabel, "Connected type label")
        ->required();
    cmdPolytope->callback([&] {
        run = [&]() {
            auto rs = buildRootSystem(polytopeLabel);
            auto p = buildPolytope(rs, buildSupportFunction(rs));
            if (format == "json") {
                json j{{"normals", p.normals}, {"edges", p.edges}};
                json bounds = json::array(), vertices = json::array();
                for (const auto& b : p.bounds) bounds.push_back(ratToString(b));
                for (const auto& v : p.vertices) {
                    json row = json::array();
                    for (const auto& c : v) row.push_back(ratToString(c));
                    vertices.push_back(row);
                }
                j["bounds"] = bounds;
                j["vertices"] = vertices;
                std::cout << j.dump(2) << "\n";
            } else if (format == "dot") {
                std::cout << p.skeletonDot();
            } else {
                std::cout << "H-representation:\n"
                          << p.hRepText() << "V-representation:\n"
                          << p.vRepText();
            }
            return 0;
        };
    });

    // triangulate: polygon model.
    auto* cmdTri = app.add_subcommand("triangulate", "Polygon triangulations");
    std::string triText, triFlips;
    std::size_t triSnake = 0;
    cmdTri->add_option("--text", triText,
                       "Triangulation such as \"3; d1=[2,6]; d2=[2,5]; d3=[3,5]\"");
    cmdTri->add_option("--snake", triSnake, "Snake triangulation of rank n");
    cmdTri->add_option("--flips", triFlips, "Comma list of 1-based diagonals to flip");
    cmdTri->callback([&] {
        run = [&]() {
            if (triText.empty() && triSnake == 0)
                throw ParseError("triangulate needs --text or --snake");
            Triangulation t = triText.empty() ? snakeTriangulation(triSnake)
                                              : Triangulation::parse(triText);
            if (!triFlips.empty())
                for (long long d : parseCsvInts(triFlips)) {
                    if (d < 1) throw ParseError("--flips entries are 1-based");
                    t = flip(t, static_cast<std::size_t>(d - 1));
                }
            auto b = bFromTriangulation(t);
            if (format == "json") {
                json j{{"triangulation", t.toString()},
                       {"matrix", b.toJson()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << t.toString() << "\nmatrix:\n";
                for (std::size_t i = 0; i < b.rowCount(); ++i) {
                    for (std::size_t c = 0; c < b.colCount(); ++c)
                        std::cout << (c ? " " : "") << b.entry(i, c);
                    std::cout << "\n";
                }
            }
            return 0;
        };
    });

    // dbc: double-word bookkeeping.
    auto* cmdDbc = app.add_subcommand("dbc", "Minors and matrix of a double word");
    int dbcRank = 0;
    std::string dbcWord;
    cmdDbc->add_option("--rank", dbcRank, "Rank r (matrices are (r+1)x(r+1))")
        ->required();
    cmdDbc->add_option("--word", dbcWord, "Comma list such as 1,2,1,2,1,-1,-2,-1")
        ->required();
    cmdDbc->callback([&] {
        run = [&]() {
            std::vector<int> entries;
            for (long long v : parseCsvInts(dbcWord))
                entries.push_back(static_cast<int>(v));
            auto w = buildWord(dbcRank, entries);
            auto b = bFromWord(w);
            if (format == "json") {
                json family = json::array(), frozen = json::array();
                for (const auto& idx : minorFamily(w))
                    family.push_back(idx.toString());
                for (const auto& idx : frozenSet(w))
                    frozen.push_back(idx.toString());
                json j{{"ex", w.ex},
                       {"family", family},
                       {"frozen", frozen},
                       {"matrix", b.toJson()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "ex:";
                for (std::size_t k : w.ex) std::cout << " " << k;
                std::cout << "\nF:";
                for (const auto& idx : minorFamily(w))
                    std::cout << " " << idx.toString();
                std::cout << "\nfrozen:";
                for (const auto& idx : frozenSet(w))
                    std::cout << " " << idx.toString();
                std::cout << "\nmatrix:\n";
                for (std::size_t i = 0; i < b.rowCount(); ++i) {
                    for (std::size_t c = 0; c < b.colCount(); ++c)
                        std::cout << (c ? " " : "") << b.entry(i, c);
                    std::cout << "\n";
                }
            }
            return 0;
        };
    });

    // tp-check: total positivity criterion at a matrix.
    auto* cmdTp = app.add_subcommand("tp-check", "Total positivity criterion");
    int tpRank = 0;
    std::string tpWord, tpMatrix, tpFile;
    cmdTp->add_option("--rank", tpRank, "Rank r")->required();
    cmdTp->add_option("--word", tpWord, "Comma list of word entries")->required();
    cmdTp->add_option("--matrix", tpMatrix,
                      "JSON rows of integers or rational strings");
    cmdTp->add_option("--file", tpFile, "JSON file holding the matrix");
    cmdTp->callback([&] {
        run = [&]() {
            std::vector<int> entries;
            for (long long v : parseCsvInts(tpWord))
                entries.push_back(static_cast<int>(v));
            auto w = buildWord(tpRank, entries);
            if (tpMatrix.empty() == tpFile.empty())
                throw ParseError("tp-check needs exactly one of --matrix or --file");
            json j = tpMatrix.empty() ? readJsonFile(tpFile)
                                      : json::parse(tpMatrix);
            bool tp = tpTest(w, parseRatMatrix(j));
            std::cout << (tp ? "true" : "false") << "\n";
            return 0;
        };
    });

    // verify: the acceptance checklist.
    auto* cmdVerify = app.add_subcommand("verify", "Run the acceptance checklist");
    cmdVerify->callback([&] {
        run = [&]() {
            auto results = runAcceptance(randSeed, jobs);
            std::cout << acceptanceTable(results);
            for (const auto& r : results)
                if (!r.passed) return 1;
            return 0;
        };
    });

    // Let the global --format/--rand-seed/--jobs options appear after
    // the subcommand name as well.
    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ClusterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
