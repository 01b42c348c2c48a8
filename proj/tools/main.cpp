#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypertriplet/entropy.hpp"
#include "hypertriplet/generate.hpp"
#include "hypertriplet/hmotif.hpp"
#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/merge.hpp"
#include "hypertriplet/report.hpp"
#include "hypertriplet/search.hpp"

namespace ht = hypertriplet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;

struct InputOpts {
    std::string path;
    std::string format = "hyperlist";
};

struct SearchOpts {
    std::string variant = "independent";
    std::string algo = "max";
    int threads = 1;
    int degree_floor = 1;
};

struct OutputOpts {
    std::string path;  // empty = stdout
    std::string format = "jsonl";
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--input", in.path, "input hypergraph file")->required();
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"hyperlist", "bipartite"}));
}

void add_search_opts(CLI::App* cmd, SearchOpts& s) {
    cmd->add_option("--variant", s.variant, "weight variant")
        ->check(CLI::IsMember({"independent", "disjoint", "common"}));
    cmd->add_option("--algo", s.algo, "search algorithm")
        ->check(CLI::IsMember({"basic", "max"}));
    cmd->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--degree-floor", s.degree_floor,
                    "skip nodes of degree < D in intersection scans (1 or 2)")
        ->check(CLI::Range(1, 2));
}

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--out", out.path, "output file (default: stdout)");
    cmd->add_option("--out-format", out.format, "output format")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
}

ht::Variant parse_variant(const std::string& s) {
    if (s == "independent") return ht::Variant::independent;
    if (s == "disjoint") return ht::Variant::disjoint;
    return ht::Variant::common;
}

ht::Weight parse_weight(const std::string& s) {
    ht::Weight w;
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        w.num = std::stoll(s);
        w.den = 1;
    } else {
        w.num = std::stoll(s.substr(0, slash));
        w.den = std::stoll(s.substr(slash + 1));
    }
    if (w.den <= 0 || w.num < 0) throw std::invalid_argument("weight must be nonnegative NUM/DEN");
    return w;
}

ht::CanonicalHypergraph load_canonical(const InputOpts& in) {
    std::ifstream f(in.path);
    if (!f) throw std::runtime_error("cannot open " + in.path);
    ht::LoadReport rep;
    ht::Hypergraph h =
        in.format == "bipartite" ? ht::load_bipartite(f, &rep) : ht::load_hyperlist(f, &rep);
    if (rep.duplicate_members)
        std::cerr << "warning: dropped " << rep.duplicate_members << " duplicate membership(s)\n";
    return ht::canonicalize(h);
}

int emit_results(const std::vector<ht::TripletResult>& results, const OutputOpts& out) {
    const auto fmt = out.format == "tsv" ? ht::OutputFormat::tsv : ht::OutputFormat::jsonl;
    if (out.path.empty()) {
        ht::write_results(std::cout, results, fmt);
    } else {
        std::ofstream f(out.path);
        if (!f) throw std::runtime_error("cannot open " + out.path);
        ht::write_results(f, results, fmt);
    }
    return results.empty() ? kExitEmpty : kExitOk;
}

std::vector<ht::TripletResult> run_search(const ht::CanonicalHypergraph& h,
                                          const ht::SearchConfig& cfg, const std::string& algo) {
    if (algo == "basic") return ht::basic_search_all(h, cfg);
    return ht::max_search(h, cfg);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperedge triplet mining: maximum-weight intersection patterns in hypergraphs"};
    app.require_subcommand(1);

    InputOpts in;
    SearchOpts s;
    OutputOpts out;

    auto* cmd_max = app.add_subcommand("max", "single maximum-weight triplet");
    add_input_opts(cmd_max, in);
    add_search_opts(cmd_max, s);
    add_output_opts(cmd_max, out);

    int topk_k = 1;
    auto* cmd_topk = app.add_subcommand("topk", "k highest-weight triplets");
    cmd_topk->add_option("--k", topk_k, "number of triplets")->required()->check(CLI::PositiveNumber);
    add_input_opts(cmd_topk, in);
    add_search_opts(cmd_topk, s);
    add_output_opts(cmd_topk, out);

    std::string tau_str;
    auto* cmd_threshold = app.add_subcommand("threshold", "all triplets with weight >= tau");
    cmd_threshold->add_option("--tau", tau_str, "weight threshold NUM/DEN")->required();
    add_input_opts(cmd_threshold, in);
    add_search_opts(cmd_threshold, s);
    add_output_opts(cmd_threshold, out);

    std::string query;
    int local_k = 1;
    auto* cmd_local = app.add_subcommand("local", "top-k triplets containing a query hyperedge");
    cmd_local->add_option("--query", query, "hyperedge label")->required();
    cmd_local->add_option("--k", local_k, "number of triplets")->check(CLI::PositiveNumber);
    add_input_opts(cmd_local, in);
    add_search_opts(cmd_local, s);
    add_output_opts(cmd_local, out);

    std::string merge_tau, dot_path, comp_path;
    auto* cmd_merge = app.add_subcommand("merge", "merge qualifying triplets into clusters");
    cmd_merge->add_option("--tau", merge_tau, "weight threshold NUM/DEN")->required();
    cmd_merge->add_option("--dot", dot_path, "DOT output file");
    cmd_merge->add_option("--components", comp_path, "components JSON output file");
    add_input_opts(cmd_merge, in);
    add_search_opts(cmd_merge, s);

    std::optional<std::size_t> census_max_size;
    std::string census_out, census_json_path;
    auto* cmd_census = app.add_subcommand("census", "count connected triplets by motif class");
    cmd_census->add_option("--max-edge-size", census_max_size, "drop hyperedges larger than S");
    cmd_census->add_option("--out", census_out, "TSV output file (default: stdout)");
    cmd_census->add_option("--json", census_json_path, "also write a JSON report");
    add_input_opts(cmd_census, in);

    auto* cmd_gen = app.add_subcommand("gen", "generate a synthetic hypergraph");
    cmd_gen->require_subcommand(1);
    std::uint64_t seed = 1;
    std::string gen_out;
    std::size_t er_nodes = 100, er_edges = 50;
    double er_p = 0.1;
    auto* cmd_er = cmd_gen->add_subcommand("er", "Erdos-Renyi bipartite model");
    cmd_er->add_option("--nodes", er_nodes, "node count")->required();
    cmd_er->add_option("--edges", er_edges, "hyperedge count")->required();
    cmd_er->add_option("--p", er_p, "membership probability")->required();
    cmd_er->add_option("--seed", seed, "PRNG seed")->required();
    cmd_er->add_option("--out", gen_out, "output hyperlist file")->required();

    std::string cl_input, cl_input_format = "hyperlist";
    std::size_t cl_nodes = 0, cl_edges = 0;
    double cl_exponent = 1.0;
    std::int64_t cl_scale = 10;
    auto* cmd_cl = cmd_gen->add_subcommand("chung-lu", "Chung-Lu bipartite model");
    cmd_cl->add_option("--input", cl_input, "match the degree sequences of this hypergraph");
    cmd_cl->add_option("--format", cl_input_format, "input format")
        ->check(CLI::IsMember({"hyperlist", "bipartite"}));
    cmd_cl->add_option("--nodes", cl_nodes, "node count (synthetic sequences)");
    cmd_cl->add_option("--edges", cl_edges, "hyperedge count (synthetic sequences)");
    cmd_cl->add_option("--zipf-exponent", cl_exponent, "size-sequence Zipf exponent");
    cmd_cl->add_option("--scale", cl_scale, "largest target hyperedge size");
    cmd_cl->add_option("--seed", seed, "PRNG seed")->required();
    cmd_cl->add_option("--out", gen_out, "output hyperlist file")->required();

    int entropy_k = 100;
    OutputOpts entropy_out;
    entropy_out.format = "tsv";
    auto* cmd_entropy = app.add_subcommand("entropy", "entropy report for top-k triplets");
    cmd_entropy->add_option("--k", entropy_k, "number of triplets")->required()->check(CLI::PositiveNumber);
    add_input_opts(cmd_entropy, in);
    add_search_opts(cmd_entropy, s);
    add_output_opts(cmd_entropy, entropy_out);

    auto* cmd_stats = app.add_subcommand("stats", "basic hypergraph statistics");
    add_input_opts(cmd_stats, in);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_stats->parsed()) {
            std::ifstream f(in.path);
            if (!f) throw std::runtime_error("cannot open " + in.path);
            ht::Hypergraph h =
                in.format == "bipartite" ? ht::load_bipartite(f) : ht::load_hyperlist(f);
            std::cout << ht::stats_json(ht::stats(h));
            return kExitOk;
        }

        if (cmd_er->parsed()) {
            ht::GenReport rep;
            ht::Hypergraph h = ht::gen_er(er_nodes, er_edges, er_p, seed, &rep);
            std::ofstream f(gen_out);
            if (!f) throw std::runtime_error("cannot open " + gen_out);
            ht::write_hyperlist(h, f);
            std::cerr << "generated " << h.edge_count() << " hyperedges, " << rep.memberships
                      << " memberships (" << rep.empty_edges_dropped << " empty dropped)\n";
            return kExitOk;
        }
        if (cmd_cl->parsed()) {
            std::vector<std::int64_t> degrees, sizes;
            if (!cl_input.empty()) {
                std::ifstream f(cl_input);
                if (!f) throw std::runtime_error("cannot open " + cl_input);
                ht::Hypergraph src = cl_input_format == "bipartite" ? ht::load_bipartite(f)
                                                                    : ht::load_hyperlist(f);
                std::tie(degrees, sizes) = ht::degree_sequence(src);
            } else {
                if (cl_nodes == 0 || cl_edges == 0)
                    throw std::invalid_argument("chung-lu needs --input or --nodes/--edges");
                sizes = ht::zipf_sequence(cl_edges, cl_exponent, cl_scale);
                degrees = ht::zipf_sequence(cl_nodes, cl_exponent, cl_scale);
                const auto ssum = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
                const auto dsum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
                if (dsum < ssum)
                    ht::pad_to_sum(degrees, ssum);
                else
                    ht::pad_to_sum(sizes, dsum);
            }
            ht::GenReport rep;
            ht::Hypergraph h = ht::gen_chung_lu(degrees, sizes, seed, &rep);
            std::ofstream f(gen_out);
            if (!f) throw std::runtime_error("cannot open " + gen_out);
            ht::write_hyperlist(h, f);
            std::cerr << "generated " << h.edge_count() << " hyperedges, " << rep.memberships
                      << " memberships (" << rep.empty_edges_dropped << " empty dropped)\n";
            return kExitOk;
        }

        if (cmd_census->parsed()) {
            const auto h = load_canonical(in);
            const ht::CensusReport rep = ht::census(h, census_max_size);
            if (census_out.empty()) {
                ht::write_census_tsv(std::cout, rep);
            } else {
                std::ofstream f(census_out);
                if (!f) throw std::runtime_error("cannot open " + census_out);
                ht::write_census_tsv(f, rep);
            }
            if (!census_json_path.empty()) write_text(census_json_path, ht::census_json(rep));
            return kExitOk;
        }

        if (cmd_merge->parsed()) {
            const auto h = load_canonical(in);
            ht::SearchConfig cfg;
            cfg.variant = parse_variant(s.variant);
            cfg.mode = ht::SearchMode::threshold;
            cfg.tau = parse_weight(merge_tau);
            cfg.threads = s.threads;
            cfg.degree_floor = s.degree_floor;
            const auto results = run_search(h, cfg, s.algo);
            if (results.empty()) {
                std::cerr << "no triplets at or above the threshold\n";
                return kExitEmpty;
            }
            const ht::MergeGraph g = ht::build_merge_graph(results);
            const ht::ComponentSet comps = ht::components(g);
            if (!dot_path.empty()) write_text(dot_path, ht::export_dot(g, h));
            if (!comp_path.empty()) write_text(comp_path, ht::components_json(comps, h));
            std::cerr << "merged " << results.size() << " triplets into " << comps.components.size()
                      << " component(s)\n";
            return kExitOk;
        }

        if (cmd_entropy->parsed()) {
            const auto h = load_canonical(in);
            ht::SearchConfig cfg;
            cfg.variant = parse_variant(s.variant);
            cfg.mode = ht::SearchMode::topk;
            cfg.k = entropy_k;
            cfg.threads = s.threads;
            cfg.degree_floor = s.degree_floor;
            const auto results = run_search(h, cfg, s.algo);
            const auto rows = ht::entropy_report(results, cfg.variant);
            const auto fmt =
                entropy_out.format == "jsonl" ? ht::OutputFormat::jsonl : ht::OutputFormat::tsv;
            if (entropy_out.path.empty()) {
                ht::write_entropy(std::cout, rows, fmt);
            } else {
                std::ofstream f(entropy_out.path);
                if (!f) throw std::runtime_error("cannot open " + entropy_out.path);
                ht::write_entropy(f, rows, fmt);
            }
            return rows.empty() ? kExitEmpty : kExitOk;
        }

        // triplet searches
        const auto h = load_canonical(in);
        ht::SearchConfig cfg;
        cfg.variant = parse_variant(s.variant);
        cfg.threads = s.threads;
        cfg.degree_floor = s.degree_floor;
        if (cmd_max->parsed()) {
            cfg.mode = ht::SearchMode::max;
        } else if (cmd_topk->parsed()) {
            cfg.mode = ht::SearchMode::topk;
            cfg.k = topk_k;
        } else if (cmd_threshold->parsed()) {
            cfg.mode = ht::SearchMode::threshold;
            cfg.tau = parse_weight(tau_str);
        } else if (cmd_local->parsed()) {
            cfg.mode = ht::SearchMode::local;
            cfg.k = local_k;
            cfg.query_label = query;
        }
        return emit_results(run_search(h, cfg, s.algo), out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
