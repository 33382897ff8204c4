// szeged - compute Wiener/Szeged indices and verify their relations
//
//   szeged compute <file> [--verify] [--json] [--force-cross-check] [--threads k]
//   szeged verify (--paper | --family cycles --n A..B | --gen KIND ... | <path>)
//                 [--json] [--threads k] [--force-cross-check]
//   szeged gen (--named fig2|fig3 | --cactus ...) --out <dir>
//
// Exit codes: 0 success, 1 theorem violation or failed cross-check, 2 input error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "szeged/blocks.hpp"
#include "szeged/generators.hpp"
#include "szeged/graph.hpp"
#include "szeged/indices.hpp"
#include "szeged/parallel.hpp"
#include "szeged/report.hpp"
#include "szeged/theorems.hpp"

namespace fs = std::filesystem;
using namespace szeged;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr std::size_t kCrossCheckDefaultLimit = 200;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedGraph load_graph(const fs::path& p) {
    try {
        return parse_edge_list(read_file(p));
    } catch (const GraphError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("bad range '" + s + "', expected A..B");
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return {std::stoull(s), 1};
        return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw InputError("bad fraction '" + s + "', expected p/q");
    }
}

std::string block_summary(const BlockDecomposition& bd) {
    std::map<std::string, std::size_t> counts;
    for (const Block& b : bd.blocks()) ++counts[to_string(b.kind)];
    std::string out;
    for (const auto& [kind, c] : counts) {
        if (!out.empty()) out += ", ";
        out += kind + " x" + std::to_string(c);
    }
    return out.empty() ? "none" : out;
}

void print_verdict(std::ostream& os, const TheoremVerdict& v) {
    os << "  " << to_string(v.claim) << ": " << to_string(v.status) << " (lhs=" << v.lhs
       << " rhs=" << v.rhs << ", predicted equality " << (v.predicted_equality ? "yes" : "no") << ")";
    if (v.witness) os << " witness: " << *v.witness;
    os << '\n';
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
    std::string file;
    bool verify = false;
    bool json = false;
    bool force_cross_check = false;
    unsigned threads = 1;
};

int cmd_compute(const ComputeOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    ParsedGraph parsed = load_graph(opt.file);
    std::optional<GraphAnalysis> analysis;
    try {
        analysis.emplace(parsed.graph, opt.threads);
    } catch (const GraphError& e) {
        throw InputError(opt.file + ": " + e.what());
    }
    const GraphAnalysis& a = *analysis;
    const bool cross_check = opt.force_cross_check || a.graph.vertex_count() <= kCrossCheckDefaultLimit;

    IndexReport idx;
    idx.wiener = a.wiener;
    idx.szeged = a.szeged;
    idx.revised_szeged = a.revised_szeged;
    if (cross_check) {
        idx.szeged_vertex_sum = szeged_vertex_sum(a.graph, a.distances, opt.threads);
        idx.revised_szeged_vertex_sum = revised_szeged_vertex_sum(a.graph, a.distances, opt.threads);
        const auto diff = szeged_difference(a.graph, a.distances, opt.threads);
        idx.difference_edge_form = diff.edge_form;
        idx.difference_vertex_form = diff.vertex_form;
    }
    std::vector<TheoremVerdict> verdicts;
    if (opt.verify) verdicts = check_all(a, cross_check, opt.threads);

    const bool consistent = idx.consistent();
    const bool all_passed =
        std::all_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.passed(); });
    const bool cactus = is_cactus(a.blocks);
    const bool bipartite = is_bipartite(a.graph);
    const QuarterRational two_w = 2 * a.wiener;
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.json) {
        Json j;
        j["input"] = opt.file;
        Json g;
        g["n"] = a.graph.vertex_count();
        g["m"] = a.graph.edge_count();
        g["is_cactus"] = cactus;
        g["is_bipartite"] = bipartite;
        g["labels"] = parsed.labels;
        g["blocks"] = to_json(a.blocks);
        g["cut_vertices"] = a.blocks.cut_vertices();
        j["graph"] = std::move(g);
        j["indices"] = to_json(idx);
        j["cross_check"] = cross_check ? Json(consistent ? "consistent" : "inconsistent") : Json("skipped");
        Json vs = Json::array();
        for (const auto& v : verdicts) vs.push_back(to_json(v));
        j["verdicts"] = std::move(vs);
        j["elapsed_ms"] = elapsed_ms;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "input: " << opt.file << '\n';
        std::cout << "n=" << a.graph.vertex_count() << " m=" << a.graph.edge_count()
                  << " cactus=" << (cactus ? "true" : "false") << " bipartite=" << (bipartite ? "true" : "false")
                  << '\n';
        std::cout << "blocks: " << block_summary(a.blocks) << '\n';
        std::cout << "W=" << a.wiener << " Sz=" << a.szeged << " Sz*=" << a.revised_szeged << '\n';
        std::cout << "2W==Sz: " << (two_w == QuarterRational(a.szeged) ? "true" : "false")
                  << " 2W==Sz*: " << (two_w == a.revised_szeged ? "true" : "false") << '\n';
        if (cross_check) {
            std::cout << "cross-check: Sz(vertex sum)=" << *idx.szeged_vertex_sum
                      << " Sz*(vertex sum)=" << *idx.revised_szeged_vertex_sum
                      << " Sz*-Sz(edge form)=" << *idx.difference_edge_form
                      << " Sz*-Sz(vertex form)=" << *idx.difference_vertex_form << " -> "
                      << (consistent ? "consistent" : "INCONSISTENT") << '\n';
        } else {
            std::cout << "cross-check: skipped (n > " << kCrossCheckDefaultLimit
                      << ", pass --force-cross-check)\n";
        }
        if (opt.verify) {
            std::cout << "verdicts:\n";
            for (const auto& v : verdicts) print_verdict(std::cout, v);
        }
        std::cout << "elapsed: " << elapsed_ms << " ms\n";
    }
    if (!consistent) {
        std::cerr << "error: edge-sum and vertex-sum indices disagree\n";
        return kExitViolation;
    }
    return all_passed ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
    bool paper = false;
    std::string family;
    std::string n_range = "3..30";
    std::string gen;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::size_t blocks = 10;
    std::size_t min_cycle = 3;
    std::size_t max_cycle = 8;
    std::string edge_prob = "1/3";
    std::string parity = "any";
    std::size_t vertices = 20;
    std::string density = "1/5";
    std::string path;
    bool json = false;
    bool force_cross_check = false;
    unsigned threads = 1;
};

struct CorpusEntry {
    std::string id;
    Graph graph;
    std::optional<std::size_t> cycle_length;  // also run the cycle lemma
};

struct Reproduction {
    std::string graph;
    std::string quantity;
    QuarterRational expected;
    QuarterRational observed;
};

struct GraphResult {
    std::size_t n = 0;
    std::size_t m = 0;
    bool cactus = false;
    bool bipartite = false;
    IndexReport indices;
    std::vector<TheoremVerdict> verdicts;
    std::optional<std::string> error;
};

std::vector<CorpusEntry> build_corpus(const VerifyOptions& opt) {
    std::vector<CorpusEntry> corpus;
    if (opt.paper) {
        corpus.push_back({"fig2", paper_fig2(), std::nullopt});
        corpus.push_back({"fig3", paper_fig3(), std::nullopt});
        return corpus;
    }
    if (!opt.family.empty()) {
        if (opt.family != "cycles") throw InputError("unknown family '" + opt.family + "'");
        const auto [lo, hi] = parse_range(opt.n_range);
        if (lo < 3 || hi < lo) throw InputError("cycle range must satisfy 3 <= A <= B");
        for (std::size_t n = lo; n <= hi; ++n) corpus.push_back({"C" + std::to_string(n), cycle(n), n});
        return corpus;
    }
    if (!opt.gen.empty()) {
        CactusParams p;
        p.block_count = opt.blocks;
        p.min_cycle_length = opt.min_cycle;
        p.max_cycle_length = opt.max_cycle;
        std::tie(p.edge_probability_num, p.edge_probability_den) = parse_fraction(opt.edge_prob);
        try {
            p.parity = parse_parity(opt.parity);
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        const auto [dn, dd] = parse_fraction(opt.density);
        if (dd == 0 || dn > dd) throw InputError("density must lie in [0, 1]");
        for (std::size_t i = 0; i < opt.count; ++i) {
            const std::uint64_t s = corpus_seed(opt.seed, i);
            const std::string id = opt.gen + "-" + std::to_string(i);
            p.seed = s;
            if (opt.gen == "cactus") {
                corpus.push_back({id, random_cactus(p), std::nullopt});
            } else if (opt.gen == "cycle-cactus") {
                corpus.push_back({id, random_cycle_cactus(p), std::nullopt});
            } else if (opt.gen == "tree") {
                corpus.push_back({id, random_tree(opt.vertices, s), std::nullopt});
            } else if (opt.gen == "connected") {
                corpus.push_back({id, random_connected(opt.vertices, dn, dd, s), std::nullopt});
            } else {
                throw InputError("unknown generator '" + opt.gen + "'");
            }
        }
        return corpus;
    }
    if (!opt.path.empty()) {
        const fs::path root(opt.path);
        std::vector<fs::path> files;
        if (fs::is_directory(root)) {
            for (const auto& entry : fs::directory_iterator(root)) {
                if (entry.is_regular_file() && entry.path().extension() == ".edges") files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
        } else {
            files.push_back(root);
        }
        for (const auto& f : files) corpus.push_back({f.filename().string(), load_graph(f).graph, std::nullopt});
        return corpus;
    }
    throw InputError("verify needs one of --paper, --family, --gen or a path");
}

GraphResult verify_one(const CorpusEntry& entry, bool force_cross_check) {
    GraphResult r;
    r.n = entry.graph.vertex_count();
    r.m = entry.graph.edge_count();
    try {
        const GraphAnalysis a(entry.graph);
        const bool cross_check = force_cross_check || r.n <= kCrossCheckDefaultLimit;
        r.cactus = is_cactus(a.blocks);
        r.bipartite = is_bipartite(a.graph);
        r.indices.wiener = a.wiener;
        r.indices.szeged = a.szeged;
        r.indices.revised_szeged = a.revised_szeged;
        if (entry.cycle_length) r.verdicts.push_back(check_cycle_dis_lemma(*entry.cycle_length));
        for (auto& v : check_all(a, cross_check)) r.verdicts.push_back(std::move(v));
    } catch (const GraphError& e) {
        r.error = e.what();
    }
    return r;
}

int cmd_verify(const VerifyOptions& opt) {
    const auto corpus = build_corpus(opt);
    std::vector<GraphResult> results(corpus.size());
    parallel_for(corpus.size(), opt.threads,
                 [&](std::size_t i) { results[i] = verify_one(corpus[i], opt.force_cross_check); });

    std::vector<Reproduction> reproductions;
    if (opt.paper) {
        reproductions.push_back({"fig2", "W", 96, results[0].indices.wiener});
        reproductions.push_back({"fig2", "Sz", 192, results[0].indices.szeged});
        reproductions.push_back({"fig3", "W", 1818, results[1].indices.wiener});
        reproductions.push_back({"fig3", "Sz*", 3636, results[1].indices.revised_szeged});
    }
    std::vector<std::pair<std::string, Graph>> outlier_input;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!results[i].error) outlier_input.emplace_back(corpus[i].id, corpus[i].graph);
    }
    const auto outliers = find_equality_outliers(outlier_input);

    std::size_t verdict_count = 0, violations = 0, mismatches = 0, input_errors = 0;
    for (const auto& r : results) {
        if (r.error) ++input_errors;
        for (const auto& v : r.verdicts) {
            ++verdict_count;
            if (v.status == VerdictStatus::Violated) ++violations;
            if (!v.prediction_matched()) ++mismatches;
        }
    }
    const bool reproduced = std::all_of(reproductions.begin(), reproductions.end(),
                                        [](const Reproduction& r) { return r.expected == r.observed; });
    const bool passed = violations == 0 && mismatches == 0 && reproduced && input_errors == 0;

    if (opt.json) {
        Json j;
        Json graphs = Json::array();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& r = results[i];
            Json g;
            g["id"] = corpus[i].id;
            g["n"] = r.n;
            g["m"] = r.m;
            if (r.error) {
                g["error"] = *r.error;
            } else {
                g["is_cactus"] = r.cactus;
                g["is_bipartite"] = r.bipartite;
                g["wiener"] = r.indices.wiener;
                g["szeged"] = r.indices.szeged;
                g["revised_szeged"] = to_json(r.indices.revised_szeged);
                Json vs = Json::array();
                for (const auto& v : r.verdicts) vs.push_back(to_json(v));
                g["verdicts"] = std::move(vs);
            }
            graphs.push_back(std::move(g));
        }
        j["graphs"] = std::move(graphs);
        if (opt.paper) {
            Json reps = Json::array();
            for (const auto& rep : reproductions) {
                reps.push_back(Json{{"graph", rep.graph},
                                    {"quantity", rep.quantity},
                                    {"expected", to_json(rep.expected)},
                                    {"observed", to_json(rep.observed)},
                                    {"match", rep.expected == rep.observed}});
            }
            j["reproductions"] = std::move(reps);
        }
        Json outs = Json::array();
        for (const auto& o : outliers) outs.push_back(to_json(o));
        j["equality_outliers"] = std::move(outs);
        j["summary"] = Json{{"graphs", corpus.size()},
                            {"verdicts", verdict_count},
                            {"violations", violations},
                            {"prediction_mismatches", mismatches},
                            {"input_errors", input_errors},
                            {"passed", passed}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& r = results[i];
            std::cout << corpus[i].id << ": n=" << r.n << " m=" << r.m;
            if (r.error) {
                std::cout << " error: " << *r.error << '\n';
                continue;
            }
            std::cout << " W=" << r.indices.wiener << " Sz=" << r.indices.szeged
                      << " Sz*=" << r.indices.revised_szeged << '\n';
            for (const auto& v : r.verdicts) {
                if (!v.passed() || corpus.size() <= 40) print_verdict(std::cout, v);
            }
        }
        for (const auto& rep : reproductions) {
            std::cout << "reproduce " << rep.graph << " " << rep.quantity << ": expected " << rep.expected
                      << ", observed " << rep.observed << (rep.expected == rep.observed ? " ok" : " MISMATCH")
                      << '\n';
        }
        for (const auto& o : outliers) std::cout << "equality outlier " << o.id << ": " << o.description << '\n';
        std::cout << "summary: " << corpus.size() << " graphs, " << verdict_count << " verdicts, " << violations
                  << " violations, " << mismatches << " prediction mismatches -> "
                  << (passed ? "PASS" : "FAIL") << '\n';
    }
    if (input_errors > 0 && violations == 0 && mismatches == 0) return kExitInput;
    return passed ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- gen

struct GenOptions {
    std::string named;
    bool cactus = false;
    bool cycle_only = false;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::size_t blocks = 10;
    std::size_t min_cycle = 3;
    std::size_t max_cycle = 8;
    std::string edge_prob = "1/3";
    std::string parity = "any";
    std::string out;
};

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InputError("cannot write " + p.string());
    f << text;
}

int cmd_gen(const GenOptions& opt) {
    if (opt.named.empty() == !opt.cactus) throw InputError("gen needs exactly one of --named or --cactus");
    fs::create_directories(opt.out);
    Json manifest;
    Json files = Json::array();
    if (!opt.named.empty()) {
        Graph g;
        if (opt.named == "fig2") {
            g = paper_fig2();
        } else if (opt.named == "fig3") {
            g = paper_fig3();
        } else {
            throw InputError("unknown named graph '" + opt.named + "'");
        }
        const std::string name = opt.named + ".edges";
        write_text(fs::path(opt.out) / name, serialize_edge_list(g));
        manifest["generator"] = "named";
        manifest["name"] = opt.named;
        files.push_back(Json{{"file", name}, {"n", g.vertex_count()}, {"m", g.edge_count()}});
    } else {
        CactusParams p;
        p.block_count = opt.blocks;
        p.min_cycle_length = opt.min_cycle;
        p.max_cycle_length = opt.max_cycle;
        std::tie(p.edge_probability_num, p.edge_probability_den) = parse_fraction(opt.edge_prob);
        try {
            p.parity = parse_parity(opt.parity);
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        manifest["generator"] = opt.cycle_only ? "cycle-cactus" : "cactus";
        manifest["params"] = Json{{"blocks", p.block_count},
                                  {"min_cycle", p.min_cycle_length},
                                  {"max_cycle", p.max_cycle_length},
                                  {"edge_prob", opt.cycle_only ? "0/1" : opt.edge_prob},
                                  {"parity", to_string(p.parity)},
                                  {"base_seed", opt.seed},
                                  {"count", opt.count}};
        for (std::size_t i = 0; i < opt.count; ++i) {
            p.seed = opt.count == 1 ? opt.seed : corpus_seed(opt.seed, i);
            const Graph g = opt.cycle_only ? random_cycle_cactus(p) : random_cactus(p);
            const std::string name = "cactus-" + std::to_string(i) + ".edges";
            write_text(fs::path(opt.out) / name, serialize_edge_list(g));
            files.push_back(
                Json{{"file", name}, {"seed", p.seed}, {"n", g.vertex_count()}, {"m", g.edge_count()}});
        }
    }
    manifest["files"] = std::move(files);
    write_text(fs::path(opt.out) / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << manifest["files"].size() << " graph(s) to " << opt.out << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener, Szeged and revised Szeged indices with exact theorem checks"};
    app.require_subcommand(1);

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "Compute indices of an edge-list graph");
    compute->add_option("file", copt.file, "Edge-list file")->required();
    compute->add_flag("--verify", copt.verify, "Also run the theorem checks");
    compute->add_flag("--json", copt.json, "Machine-readable output");
    compute->add_flag("--force-cross-check", copt.force_cross_check,
                      "Run vertex-sum cross-checks even for n > 200");
    compute->add_option("--threads", copt.threads, "Worker threads")->check(CLI::PositiveNumber);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Verify the index relations on a corpus");
    verify->add_flag("--paper", vopt.paper, "Reproduce the two published example graphs");
    verify->add_option("--family", vopt.family, "Parametric family (cycles)");
    verify->add_option("--n", vopt.n_range, "Family size range A..B");
    verify->add_option("--gen", vopt.gen, "Random corpus: cactus, cycle-cactus, tree, connected");
    verify->add_option("--count", vopt.count, "Corpus size");
    verify->add_option("--seed", vopt.seed, "Base seed");
    verify->add_option("--blocks", vopt.blocks, "Blocks per cactus");
    verify->add_option("--min-cycle", vopt.min_cycle, "Shortest cycle length");
    verify->add_option("--max-cycle", vopt.max_cycle, "Longest cycle length");
    verify->add_option("--edge-prob", vopt.edge_prob, "Pendant-edge block probability p/q");
    verify->add_option("--parity", vopt.parity, "Cycle parity: any, even, odd");
    verify->add_option("--vertices", vopt.vertices, "Vertex count for tree/connected");
    verify->add_option("--density", vopt.density, "Extra-edge probability p/q for connected");
    verify->add_option("path", vopt.path, "Edge-list file or directory of .edges files");
    verify->add_flag("--json", vopt.json, "Machine-readable output");
    verify->add_flag("--force-cross-check", vopt.force_cross_check,
                     "Run vertex-sum cross-checks even for n > 200");
    verify->add_option("--threads", vopt.threads, "Worker threads")->check(CLI::PositiveNumber);

    GenOptions gopt;
    auto* gen = app.add_subcommand("gen", "Write generated graphs as edge lists");
    gen->add_option("--named", gopt.named, "Named graph: fig2, fig3");
    gen->add_flag("--cactus", gopt.cactus, "Random cactus");
    gen->add_flag("--cycle-only", gopt.cycle_only, "Only cycle blocks");
    gen->add_option("--count", gopt.count, "Number of graphs");
    gen->add_option("--seed", gopt.seed, "Seed");
    gen->add_option("--blocks", gopt.blocks, "Blocks per cactus");
    gen->add_option("--min-cycle", gopt.min_cycle, "Shortest cycle length");
    gen->add_option("--max-cycle", gopt.max_cycle, "Longest cycle length");
    gen->add_option("--edge-prob", gopt.edge_prob, "Pendant-edge block probability p/q");
    gen->add_option("--parity", gopt.parity, "Cycle parity: any, even, odd");
    gen->add_option("--out", gopt.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) return cmd_compute(copt);
        if (*verify) return cmd_verify(vopt);
        if (*gen) return cmd_gen(gopt);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
