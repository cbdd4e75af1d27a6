// Command-line surface over the library. Exit codes: 0 success/valid,
// 1 invalid embedding, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mbook/constructions.hpp"
#include "mbook/io.hpp"
#include "mbook/solver.hpp"

using namespace mbook;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct GlobalOptions {
    std::uint64_t seed = 1;
    int threads = 1;
    bool quiet = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void info(const GlobalOptions& global, const std::string& message) {
    if (!global.quiet) std::cout << message << "\n";
}

// A max-degree-page embedding for F(G): the printing-cycle route when F(G)
// is outerplanar, the exact solver otherwise.
BookEmbedding best_base_embedding(const Graph& g, TransformKind kind,
                                  const GlobalOptions& global) {
    const Graph fg = transform(g, kind);
    try {
        return embed_outerplanar(fg);
    } catch (const std::invalid_argument&) {
    } catch (const budget_error&) {
    }
    SolveOptions opt;
    opt.threads = global.threads;
    opt.seed = global.seed;
    return mbt_exact(fg, opt).embedding;
}

int run(int argc, char** argv) {
    CLI::App app{"matching book embeddings: transforms, F-sums, bounds, exact search"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for randomized search");
    app.add_option("--threads", global.threads, "solver threads (results stay deterministic)");
    app.add_flag("--quiet", global.quiet, "suppress informational output");

    auto* gen = app.add_subcommand("gen", "generate a named graph");
    std::string gen_kind;
    std::vector<std::string> gen_params;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "path | cycle | star | circulant")->required();
    gen->add_option("params", gen_params, "n, plus comma-separated offsets for circulant");
    gen->add_option("-o,--output", gen_out, "output file (stdout when absent)");

    auto* tr = app.add_subcommand("transform", "apply one of the S/R/Q/T operations");
    std::string tr_kind, tr_in, tr_out;
    tr->add_option("-F,--operation", tr_kind, "S | R | Q | T")->required();
    tr->add_option("graph", tr_in, "input graph file")->required();
    tr->add_option("-o,--output", tr_out, "output file (stdout when absent)");

    auto* fs = app.add_subcommand("fsum", "form the F-sum of two graphs");
    std::string fs_kind, fs_g1, fs_g2, fs_out;
    fs->add_option("-F,--operation", fs_kind, "S | R | Q | T")->required();
    fs->add_option("g1", fs_g1, "first graph (connected)")->required();
    fs->add_option("g2", fs_g2, "second graph")->required();
    fs->add_option("-o,--output", fs_out, "output file (stdout when absent)");

    auto* em = app.add_subcommand("embed", "run one of the embedding constructions");
    std::string em_construction, em_graph, em_g, em_h, em_f, em_h_emb, em_fg_emb, em_out;
    int em_n = 0, em_p = 0, em_q = 0, em_e_page = 1, em_e1_page = 1, em_e2_page = 2;
    em->add_option("--construction", em_construction,
                   "outerplanar | q-star | t-star | fsum-generic | star-q | path-q | "
                   "cycle-q-cycle")
        ->required();
    em->add_option("--graph", em_graph, "input graph (outerplanar)");
    em->add_option("--g-graph", em_g, "left operand graph (fsum-generic)");
    em->add_option("--h-graph", em_h, "bipartite partner graph file");
    em->add_option("-F,--operation", em_f, "S | R | Q | T (fsum-generic)");
    em->add_option("--h-emb", em_h_emb, "embedding document for H (derived when absent)");
    em->add_option("--fg-emb", em_fg_emb, "embedding document for F(G) (derived when absent)");
    em->add_option("--n", em_n, "size parameter for star/path constructions");
    em->add_option("--p", em_p, "first cycle length (cycle-q-cycle)");
    em->add_option("--q", em_q, "second cycle length, even (cycle-q-cycle)");
    em->add_option("--e-page", em_e_page, "1-based H-page rolled into the star pages");
    em->add_option("--e1-page", em_e1_page, "1-based first chosen H-page (path-q)");
    em->add_option("--e2-page", em_e2_page, "1-based second chosen H-page (path-q)");
    em->add_option("-o,--output", em_out, "output file (stdout when absent)");

    auto* va = app.add_subcommand("validate", "check an embedding against a graph");
    std::string va_graph, va_emb;
    va->add_option("graph", va_graph, "graph file")->required();
    va->add_option("embedding", va_emb, "embedding file")->required();

    auto* so = app.add_subcommand("solve", "exact matching book thickness");
    std::string so_graph, so_out;
    long long so_budget = 50'000'000;
    int so_k = 0;
    int so_cap = 12;
    so->add_option("graph", so_graph, "graph file")->required();
    so->add_option("--budget", so_budget, "backtracking node budget");
    so->add_option("--k", so_k, "only test feasibility with k pages");
    so->add_option("--spine-cap", so_cap, "free-spine vertex cap");
    so->add_option("-o,--output", so_out, "witness file (default <graph>.emb.json)");

    auto* bo = app.add_subcommand("bounds",
                                  "max degree, chromatic index, lower-bound certificate");
    std::string bo_graph;
    bool bo_circulant = false;
    int bo_circ_n = 0, bo_circ_k = 0;
    bo->add_option("graph", bo_graph, "graph file")->required();
    bo->add_flag("--circulant", bo_circulant,
                 "assert the graph came from a circulant pipeline");
    bo->add_option("--circulant-n", bo_circ_n, "circulant order");
    bo->add_option("--circulant-k", bo_circ_k, "circulant second offset");

    auto* cl = app.add_subcommand("classify", "dispersability class for a known mbt");
    std::string cl_graph;
    int cl_mbt = -1;
    cl->add_option("graph", cl_graph, "graph file")->required();
    cl->add_option("--mbt", cl_mbt, "matching book thickness")->required();

    auto* re = app.add_subcommand("render", "arc-diagram SVG of an embedding");
    std::string re_graph, re_emb, re_out;
    re->add_option("graph", re_graph, "graph file")->required();
    re->add_option("embedding", re_emb, "embedding file")->required();
    re->add_option("-o,--output", re_out, "SVG output file (stdout when absent)");

    auto* ex = app.add_subcommand("experiment", "evidence-gathering harnesses");
    auto* ex_cpcq = ex->add_subcommand("cpcq-odd", "heuristic sweep for C_p +_Q C_q, q odd");
    int ex_p = 3, ex_q = 3, ex_tries = 64;
    ex_cpcq->add_option("--p", ex_p, "first cycle length")->required();
    ex_cpcq->add_option("--q", ex_q, "second cycle length (odd)")->required();
    ex_cpcq->add_option("--tries", ex_tries, "restart count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;  // help lands here with code 0
    }

    if (gen->parsed()) {
        if (gen_params.empty()) throw CLI::ValidationError("gen", "missing size parameter");
        const int n = std::stoi(gen_params[0]);
        Graph g;
        if (gen_kind == "path") g = path_graph(n);
        else if (gen_kind == "cycle") g = cycle_graph(n);
        else if (gen_kind == "star") g = star_graph(n);
        else if (gen_kind == "circulant") {
            if (gen_params.size() < 2)
                throw CLI::ValidationError("gen", "circulant needs offsets, e.g. 8 1,2");
            std::vector<int> offsets;
            std::stringstream ss(gen_params[1]);
            for (std::string item; std::getline(ss, item, ',');)
                offsets.push_back(std::stoi(item));
            g = circulant_graph(n, offsets);
        } else {
            throw CLI::ValidationError("gen", "unknown kind " + gen_kind);
        }
        emit(gen_out, serialize_graph(g));
        return exit_ok;
    }

    if (tr->parsed()) {
        Graph g = load_graph(tr_in);
        Graph out = transform(g, transform_kind_from_string(tr_kind));
        emit(tr_out, serialize_graph(out));
        return exit_ok;
    }

    if (fs->parsed()) {
        Graph g1 = load_graph(fs_g1);
        Graph g2 = load_graph(fs_g2);
        Graph out = f_sum(g1, g2, transform_kind_from_string(fs_kind));
        emit(fs_out, serialize_graph(out));
        return exit_ok;
    }

    if (em->parsed()) {
        auto h_input = [&]() {
            if (em_h.empty())
                throw CLI::ValidationError("embed", "--h-graph is required for this construction");
            Graph hg = load_graph(em_h);
            if (!em_h_emb.empty()) {
                EmbeddingDocument doc = parse_embedding(read_file(em_h_emb));
                return DispersableInput::make(std::move(hg), std::move(doc.embedding));
            }
            return DispersableInput::make(std::move(hg));
        };

        Graph target;
        BookEmbedding emb;
        if (em_construction == "outerplanar") {
            if (em_graph.empty())
                throw CLI::ValidationError("embed", "--graph is required for outerplanar");
            target = load_graph(em_graph);
            emb = embed_outerplanar(target);
        } else if (em_construction == "q-star") {
            target = transform(star_graph(em_n), TransformKind::Q);
            emb = embed_q_star(em_n);
        } else if (em_construction == "t-star") {
            target = transform(star_graph(em_n), TransformKind::T);
            emb = embed_t_star(em_n);
        } else if (em_construction == "fsum-generic") {
            if (em_g.empty() || em_f.empty())
                throw CLI::ValidationError("embed", "fsum-generic needs --g-graph, --h-graph and -F");
            Graph g = load_graph(em_g);
            TransformKind kind = transform_kind_from_string(em_f);
            auto h = h_input();
            BookEmbedding base = em_fg_emb.empty()
                                     ? best_base_embedding(g, kind, global)
                                     : parse_embedding(read_file(em_fg_emb)).embedding;
            target = f_sum(g, h.graph, kind);
            emb = embed_fsum_generic(g, h, kind, base);
        } else if (em_construction == "star-q") {
            auto h = h_input();
            target = f_sum(star_graph(em_n), h.graph, TransformKind::Q);
            emb = embed_star_q(em_n, h, em_e_page - 1);
        } else if (em_construction == "path-q") {
            auto h = h_input();
            target = f_sum(path_graph(em_n), h.graph, TransformKind::Q);
            emb = embed_path_q(em_n, h, em_e1_page - 1, em_e2_page - 1);
        } else if (em_construction == "cycle-q-cycle") {
            target = f_sum(cycle_graph(em_p), cycle_graph(em_q), TransformKind::Q);
            emb = embed_cycle_q_cycle(em_p, em_q);
        } else {
            throw CLI::ValidationError("embed", "unknown construction " + em_construction);
        }
        info(global, "pages: " + std::to_string(emb.page_count()));
        emit(em_out, serialize_embedding(target, emb));
        return exit_ok;
    }

    if (va->parsed()) {
        Graph g = load_graph(va_graph);
        EmbeddingDocument doc = parse_embedding(read_file(va_emb));
        ValidationReport report = validate(g, doc.embedding);
        std::cout << report.summary() << "\n";
        return report.ok ? exit_ok : exit_invalid;
    }

    if (so->parsed()) {
        Graph g = load_graph(so_graph);
        SolveOptions opt;
        opt.node_budget = so_budget;
        opt.threads = global.threads;
        opt.seed = global.seed;
        opt.free_spine_vertex_cap = so_cap;
        if (so_k > 0) {
            EmbedSearch search = embed_with_k(g, so_k, std::nullopt, opt);
            if (search.status == SearchStatus::Budget) {
                std::cout << "unknown: budget exhausted after " << search.nodes << " nodes\n";
                return exit_budget;
            }
            if (search.status == SearchStatus::Exhausted) {
                std::cout << "no " << so_k << "-page matching book embedding (exhausted)\n";
                return exit_ok;
            }
            std::string out = so_out.empty() ? so_graph + ".emb.json" : so_out;
            write_file(out, serialize_embedding(g, *search.embedding));
            std::cout << "feasible with " << so_k << " pages\nwitness: " << out << "\n";
            return exit_ok;
        }
        SolveResult result = mbt_exact(g, opt);
        std::string out = so_out.empty() ? so_graph + ".emb.json" : so_out;
        write_file(out, serialize_embedding(g, result.embedding));
        std::cout << "mbt = " << result.mbt << "\n";
        std::cout << result.lower.describe(g) << "\n";
        info(global, "nodes: " + std::to_string(result.stats.nodes) +
                         ", spine orders: " + std::to_string(result.stats.spine_orders));
        std::cout << "witness: " << out << "\n";
        return exit_ok;
    }

    if (bo->parsed()) {
        Graph g = load_graph(bo_graph);
        auto profile = degree_profile(g);
        std::cout << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count()
                  << ", max degree: " << profile.max_degree
                  << (profile.regular ? " (regular)" : "") << "\n";
        try {
            auto [chi, coloring] = chromatic_index(g);
            std::cout << "chromatic index: " << chi << "\n";
        } catch (const budget_error&) {
            std::cout << "chromatic index: budget exceeded\n";
        }
        std::optional<CirculantHint> hint;
        if (bo_circulant) hint = CirculantHint{bo_circ_n, bo_circ_k};
        BoundCertificate cert = mbt_lower_bound(g, hint);
        std::cout << cert.describe(g) << "\n";
        return exit_ok;
    }

    if (cl->parsed()) {
        Graph g = load_graph(cl_graph);
        std::cout << to_string(classify(g, cl_mbt)) << "\n";
        return exit_ok;
    }

    if (re->parsed()) {
        Graph g = load_graph(re_graph);
        EmbeddingDocument doc = parse_embedding(read_file(re_emb));
        emit(re_out, render_svg(g, doc.embedding));
        return exit_ok;
    }

    if (ex_cpcq->parsed()) {
        if (ex_q % 2 == 0)
            throw CLI::ValidationError("experiment",
                                       "q must be odd here; even q has the exact construction");
        Graph sum = f_sum(cycle_graph(ex_p), cycle_graph(ex_q), TransformKind::Q);
        BoundCertificate cert = mbt_lower_bound(sum);
        BookEmbedding emb = heuristic_upper(sum, global.seed, ex_tries);
        ValidationReport report = validate(sum, emb);
        if (!report.ok) {
            std::cout << "internal error: heuristic produced an invalid embedding\n";
            return exit_invalid;
        }
        std::cout << "C_" << ex_p << " +_Q C_" << ex_q << ": " << sum.vertex_count()
                  << " vertices, " << sum.edge_count() << " edges\n";
        std::cout << cert.describe(sum) << "\n";
        std::cout << "best found: " << report.page_count << " pages (seed " << global.seed
                  << ", " << ex_tries << " tries)\n";
        std::cout << "mbt in [" << cert.value << ", " << report.page_count
                  << "]; upper side is heuristic, no optimality claim\n";
        return exit_ok;
    }

    return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what();
        if (e.lo >= 0) {
            std::cerr << " (bracket [" << e.lo << ", ";
            if (e.hi >= 0)
                std::cerr << e.hi;
            else
                std::cerr << "?";
            std::cerr << "])";
        }
        std::cerr << "\n";
        return exit_budget;
    } catch (const construction_error& e) {
        std::cerr << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
