#include "corescope/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "corescope/connectivity.hpp"
#include "corescope/generators.hpp"
#include "corescope/graph.hpp"
#include "corescope/io.hpp"
#include "corescope/kcore.hpp"
#include "corescope/netstats.hpp"
#include "corescope/sampling.hpp"
#include "corescope/temporal.hpp"

namespace corescope {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// Collects outputs, input digests and per-stage wall clock, then persists
/// manifest.json. Rerunning a command with the recorded config and seeds
/// reproduces every listed output byte for byte; only the timings differ.
class RunContext {
public:
    RunContext(fs::path out_dir, std::vector<std::string> args)
        : out_dir_(std::move(out_dir)), args_(std::move(args)) {
        fs::create_directories(out_dir_);
    }

    const fs::path& out_dir() const { return out_dir_; }

    fs::path output(const std::string& name) {
        outputs_.push_back(name);
        return out_dir_ / name;
    }

    void input(const fs::path& path) {
        // file_digest can throw and must not do so inside the json
        // initializer list (the partially built list would leak)
        const std::string digest = file_digest(path);
        inputs_.push_back({{"path", path.string()}, {"digest", digest}});
    }

    template <typename F>
    auto stage(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, t0);
        } else {
            auto result = f();
            record(name, t0);
            return result;
        }
    }

    json& config() { return config_; }
    json& results() { return results_; }
    void seed(std::uint64_t s) { seeds_.push_back(s); }

    void write_manifest() {
        json m;
        m["manifest_version"] = 1;
        m["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
        m["command"] = args_;
        m["config"] = config_;
        m["seeds"] = seeds_;
        m["inputs"] = inputs_;
        m["outputs"] = outputs_;
        m["timings_ms"] = timings_;
        m["results"] = results_;
        std::ofstream out(out_dir_ / "manifest.json");
        out << m.dump(2) << '\n';
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        timings_[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

    fs::path out_dir_;
    std::vector<std::string> args_;
    std::vector<std::string> outputs_;
    std::vector<std::uint64_t> seeds_;
    json inputs_ = json::array();
    json config_ = json::object();
    json results_ = json::object();
    json timings_ = json::object();
};

json summary_json(const GraphSummary& s) {
    return {{"n", s.n}, {"e", s.e}, {"mean_degree", s.mean_degree}, {"d_max", s.d_max}};
}

void write_shells_csv(const Graph& g, const ShellDecomposition& d, const fs::path& path) {
    std::ofstream out(path);
    out << "vertex_label,shell_index\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << ',' << d.shell_index[v] << '\n';
}

void write_shell_sizes_csv(const std::vector<std::size_t>& sizes, const fs::path& path) {
    std::ofstream out(path);
    out << "k,size\n";
    for (std::size_t k = 1; k < sizes.size(); ++k) out << k << ',' << sizes[k] << '\n';
}

void write_ccdf_csv(const std::vector<std::pair<VertexId, double>>& ccdf,
                    const fs::path& path) {
    std::ofstream out(path);
    out << "d,p_gt\n";
    for (const auto& [d, p] : ccdf) out << d << ',' << format_real(p) << '\n';
}

void write_spectrum_csv(const Spectrum& s, const fs::path& path, const char* value_name) {
    std::ofstream out(path);
    out << "d," << value_name << ',' << value_name << "_rescaled\n";
    for (const auto& [d, y] : s.points)
        out << d << ',' << format_real(y) << ','
            << format_real(s.mean_value > 0 ? y / s.mean_value : 0.0) << '\n';
}

void write_spectrum_logbin_csv(const Spectrum& s, const fs::path& path,
                               const char* value_name) {
    std::ofstream out(path);
    out << "d_lo,d_hi," << value_name << "_mean,count\n";
    std::map<int, std::pair<double, std::size_t>> bins;
    for (const auto& [d, y] : s.points) {
        const int b = static_cast<int>(std::floor(std::log2(static_cast<double>(d))));
        const std::size_t w = s.support_counts.at(d);
        bins[b].first += y * static_cast<double>(w);
        bins[b].second += w;
    }
    for (const auto& [b, acc] : bins) {
        const auto lo = static_cast<std::int64_t>(1) << b;
        out << lo << ',' << 2 * lo << ','
            << format_real(acc.first / static_cast<double>(acc.second)) << ','
            << acc.second << '\n';
    }
}

void write_centrality_csv(const Graph& g, const ShellDecomposition& d,
                          const CentralityTable& bc, const fs::path& path) {
    std::ofstream out(path);
    out << "# betweenness: unordered pairs, endpoints excluded, unnormalized\n";
    out << "vertex_label,betweenness,shell_index,degree\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << ',' << format_real(bc[v]) << ',' << d.shell_index[v] << ','
            << g.degree(v) << '\n';
}

void write_profile_csv(const std::vector<CentralityProfile::Row>& rows,
                       const fs::path& path, const char* key, const char* stat) {
    std::ofstream out(path);
    out << key << ",mean_" << stat << ",std_" << stat << '\n';
    for (const auto& r : rows)
        out << r.key << ',' << format_real(r.mean) << ',' << format_real(r.stddev) << '\n';
}

void write_rescaled_ccdf_csv(const RescaledDegreeSample& s, const fs::path& path) {
    std::ofstream out(path);
    out << "x,p_gt\n";  // x = degree / core mean degree
    const auto n = static_cast<double>(s.values.size());
    std::size_t i = 0;
    while (i < s.values.size()) {
        std::size_t j = i;
        while (j < s.values.size() && s.values[j] == s.values[i]) ++j;
        out << format_real(s.values[i]) << ','
            << format_real(static_cast<double>(s.values.size() - j) / n) << '\n';
        i = j;
    }
}

void write_transition_csv(const TransitionMatrix& m, const fs::path& path) {
    std::ofstream out(path);
    out << "# row-normalized; row 0 = absent from map A, column 0 = absent from map B\n";
    out << "x,y,p\n";
    for (std::size_t x = 0; x < m.rows; ++x)
        for (std::size_t y = 0; y < m.cols; ++y)
            if (m.count_at(x, y) > 0)
                out << x << ',' << y << ',' << format_real(m.at(x, y)) << '\n';
}

void write_inout_csv(const InOutProfile& io, const fs::path& path) {
    std::ofstream out(path);
    out << "c,p_in,p_out\n";
    const std::size_t rows = std::max(io.in_dist.size(), io.out_dist.size());
    for (std::size_t c = 0; c < rows; ++c) {
        const double pin = c < io.in_dist.size() ? io.in_dist[c] : 0.0;
        const double pout = c < io.out_dist.size() ? io.out_dist[c] : 0.0;
        out << c << ',' << format_real(pin) << ',' << format_real(pout) << '\n';
    }
}

/// Shared by `stats` and `report`: spectra, betweenness and profiles.
void emit_stats(RunContext& ctx, const Graph& g, const ShellDecomposition& d,
                unsigned threads, const std::vector<VertexId>& cores, bool log_bin) {
    ctx.stage("ccdf", [&] {
        write_ccdf_csv(cumulative_degree_distribution(g), ctx.output("ccdf.csv"));
    });
    const auto dnn = ctx.stage("dnn", [&] { return avg_nearest_neighbor_degree(g); });
    write_spectrum_csv(dnn, ctx.output("dnn.csv"), "d_nn");
    const auto cc = ctx.stage("clustering", [&] { return clustering_spectrum(g); });
    write_spectrum_csv(cc, ctx.output("cc.csv"), "cc");
    if (log_bin) {
        write_spectrum_logbin_csv(dnn, ctx.output("dnn_logbin.csv"), "d_nn");
        write_spectrum_logbin_csv(cc, ctx.output("cc_logbin.csv"), "cc");
    }
    const auto bc = ctx.stage("betweenness", [&] { return betweenness(g, threads); });
    write_centrality_csv(g, d, bc, ctx.output("centrality.csv"));
    const auto profile = shell_centrality_profile(g, d, bc);
    write_profile_csv(profile.bc_by_shell, ctx.output("bc_by_shell.csv"), "shell_index",
                      "bc");
    write_profile_csv(profile.shell_by_degree, ctx.output("shell_by_degree.csv"),
                      "degree", "shell");
    if (!cores.empty()) {
        const auto samples = rescaled_core_distributions(g, d, cores);
        for (const auto& s : samples)
            write_rescaled_ccdf_csv(
                s, ctx.output("core_ccdf_k" + std::to_string(s.core_index) + ".csv"));
        if (samples.size() != cores.size())
            std::cerr << "warning: some requested cores were empty and were skipped\n";
    }
    ctx.results()["mean_clustering"] = cc.mean_value;
    ctx.results()["mean_nearest_neighbor_degree"] = dnn.mean_value;
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"k-core decomposition toolkit for network maps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string out_dir_flag;
    const char* env_dir = std::getenv("CORESCOPE_OUT_DIR");
    const std::string default_dir = env_dir ? env_dir : ".";
    app.add_option("--out-dir", out_dir_flag, "Output directory")
        ->default_val(default_dir);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker thread cap")->default_val(1u);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a synthetic topology");
    std::string kind_name;
    GeneratorConfig gc;
    gen->add_option("--kind", kind_name, "er|ba|pareto|weibull|brite")->required();
    gen->add_option("--n", gc.n, "Vertex count")->required();
    gen->add_option("--edges", gc.edges, "ER edge count");
    gen->add_option("--m", gc.m, "Links per arrival (ba/brite)");
    gen->add_option("--p-extra", gc.p_extra, "BRITE extra-edge probability");
    gen->add_option("--gamma", gc.law.gamma, "Pareto exponent");
    gen->add_option("--weibull-a", gc.law.weibull_a, "Weibull shape");
    gen->add_option("--weibull-c", gc.law.weibull_c, "Weibull scale");
    gen->add_option("--min-degree", gc.law.min_degree, "Minimum degree");
    gen->add_option("--max-degree", gc.law.max_degree, "Degree cutoff (redraw above)");
    gen->add_option("--seed", gc.seed, "RNG seed")->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "Shell decomposition of a map");
    std::string dec_input, dec_out = "shells.csv", dec_sizes_out = "shell_sizes.csv";
    dec->add_option("--input", dec_input, "Edge-list file")->required();
    dec->add_option("--out", dec_out, "Per-vertex shell CSV");
    dec->add_option("--sizes-out", dec_sizes_out, "Shell-size CSV");

    // stats
    auto* st = app.add_subcommand("stats", "Spectra and centrality statistics");
    std::string st_input;
    std::vector<VertexId> st_cores;
    bool st_logbin = false;
    st->add_option("--input", st_input, "Edge-list file")->required();
    st->add_option("--cores", st_cores, "Core indices for rescaled CCDFs");
    st->add_flag("--log-bin", st_logbin, "Also emit log-binned spectra");

    // sample
    auto* sa = app.add_subcommand("sample", "Traceroute-like sampling");
    std::string sa_input, sa_strategy = "usp";
    SamplingConfig sc;
    double sa_effort = -1.0;
    bool sa_has_targets = false;
    sa->add_option("--input", sa_input, "Edge-list file")->required();
    sa->add_option("--sources", sc.n_sources, "Number of sources")->required();
    auto* t_opt = sa->add_option("--targets", sc.n_targets, "Number of targets");
    sa->add_option("--effort", sa_effort, "Probing effort epsilon = Ns*Nt/N");
    sa->add_option("--strategy", sa_strategy, "usp|rsp");
    sa->add_option("--seed", sc.seed, "RNG seed")->required();
    sa->callback([&] { sa_has_targets = t_opt->count() > 0; });

    // verify
    auto* ve = app.add_subcommand("verify", "Connectivity property checks");
    std::string ve_input;
    std::size_t ve_pairs = 1000, ve_top_pairs = 30;
    std::uint64_t ve_seed = 0;
    ve->add_option("--input", ve_input, "Edge-list file")->required();
    ve->add_option("--pairs", ve_pairs, "Sampled vertex pairs for the path bound");
    ve->add_option("--top-core-pairs", ve_top_pairs, "Pairs checked in the top core");
    ve->add_option("--seed", ve_seed, "RNG seed")->required();

    // compare
    auto* co = app.add_subcommand("compare", "Shell-index transition between two maps");
    std::string co_a, co_b;
    co->add_option("--input-a", co_a, "Edge-list file A")->required();
    co->add_option("--input-b", co_b, "Edge-list file B")->required();

    // report
    auto* re = app.add_subcommand("report", "Full analysis bundle for one map");
    std::string re_input;
    std::vector<VertexId> re_cores;
    re->add_option("--input", re_input, "Edge-list file")->required();
    re->add_option("--cores", re_cores, "Core indices for rescaled CCDFs");

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    RunContext ctx(out_dir_flag, args);

    if (*gen) {
        if (kind_name == "er") gc.kind = GeneratorKind::Er;
        else if (kind_name == "ba") gc.kind = GeneratorKind::Ba;
        else if (kind_name == "pareto") gc.kind = GeneratorKind::ConfigPareto;
        else if (kind_name == "weibull") gc.kind = GeneratorKind::ConfigWeibull;
        else if (kind_name == "brite") gc.kind = GeneratorKind::Brite;
        else {
            std::cerr << "unknown generator kind: " << kind_name << '\n';
            return 1;
        }
        ctx.seed(gc.seed);
        ctx.config() = {{"kind", kind_name}, {"n", gc.n},      {"edges", gc.edges},
                        {"m", gc.m},         {"p_extra", gc.p_extra},
                        {"gamma", gc.law.gamma}, {"weibull_a", gc.law.weibull_a},
                        {"weibull_c", gc.law.weibull_c},
                        {"min_degree", gc.law.min_degree},
                        {"max_degree", gc.law.max_degree}, {"seed", gc.seed}};
        const auto result = ctx.stage("generate", [&] { return generate(gc); });
        write_edge_list(result.graph, ctx.output("graph.txt"));
        const auto full = summarize(result.graph);
        const auto giant = summarize(giant_component(result.graph));
        json log = {{"config", ctx.config()},
                    {"summary_full", summary_json(full)},
                    {"summary_giant", summary_json(giant)},
                    {"dropped_stubs", result.dropped_stubs}};
        std::ofstream(ctx.output("generation_log.json")) << log.dump(2) << '\n';
        ctx.results() = log;
    } else if (*dec) {
        ctx.config() = {{"input", dec_input}, {"out", dec_out}};
        ctx.input(dec_input);
        const Graph g = ctx.stage("load", [&] { return load_edge_list(dec_input); });
        const auto d = ctx.stage("decompose", [&] { return decompose(g); });
        write_shells_csv(g, d, ctx.output(dec_out));
        write_shell_sizes_csv(shell_sizes(d), ctx.output(dec_sizes_out));
        ctx.results() = {{"summary", summary_json(summarize(g))}, {"k_max", d.k_max}};
    } else if (*st || *re) {
        const std::string& input = *st ? st_input : re_input;
        const auto& cores = *st ? st_cores : re_cores;
        ctx.config() = {{"input", input}, {"threads", threads}};
        ctx.input(input);
        const Graph g = ctx.stage("load", [&] { return load_edge_list(input); });
        const auto d = ctx.stage("decompose", [&] { return decompose(g); });
        ctx.results()["k_max"] = d.k_max;
        ctx.results()["summary"] = summary_json(summarize(g));
        if (*re) {
            json summary = {{"summary", summary_json(summarize(g))},
                            {"k_max", d.k_max}};
            std::ofstream(ctx.output("summary.json")) << summary.dump(2) << '\n';
            write_shell_sizes_csv(shell_sizes(d), ctx.output("shell_sizes.csv"));
            write_shells_csv(g, d, ctx.output("shells.csv"));
        }
        emit_stats(ctx, g, d, threads, cores, st_logbin);
    } else if (*sa) {
        const Graph g = ctx.stage("load", [&] { return load_edge_list(sa_input); });
        if (sa_effort >= 0.0 && sa_has_targets) {
            std::cerr << "--targets and --effort are mutually exclusive\n";
            return 1;
        }
        if (sa_effort >= 0.0)
            sc.n_targets = static_cast<VertexId>(std::llround(
                sa_effort * g.vertex_count() / static_cast<double>(sc.n_sources)));
        else if (!sa_has_targets) {
            std::cerr << "one of --targets or --effort is required\n";
            return 1;
        }
        if (sa_strategy == "usp") sc.strategy = PathStrategy::Usp;
        else if (sa_strategy == "rsp") sc.strategy = PathStrategy::Rsp;
        else {
            std::cerr << "unknown strategy: " << sa_strategy << '\n';
            return 1;
        }
        ctx.seed(sc.seed);
        ctx.config() = {{"input", sa_input},
                        {"sources", sc.n_sources},
                        {"targets", sc.n_targets},
                        {"strategy", sa_strategy},
                        {"seed", sc.seed}};
        ctx.input(sa_input);
        const auto result = ctx.stage("sample", [&] { return traceroute_sample(g, sc); });
        write_edge_list(result.graph, ctx.output("sampled.txt"));
        const auto d_orig = ctx.stage("decompose_original", [&] { return decompose(g); });
        const auto d_samp =
            ctx.stage("decompose_sampled", [&] { return decompose(result.graph); });
        json report = {{"effort", result.effort},
                       {"skipped_pairs", result.skipped_pairs},
                       {"original", summary_json(summarize(g))},
                       {"sampled", summary_json(summarize(result.graph))},
                       {"k_max_original", d_orig.k_max},
                       {"k_max_sampled", d_samp.k_max}};
        std::ofstream(ctx.output("sample_report.json")) << report.dump(2) << '\n';
        ctx.results() = report;
    } else if (*ve) {
        ctx.seed(ve_seed);
        ctx.config() = {{"input", ve_input}, {"pairs", ve_pairs}, {"seed", ve_seed}};
        ctx.input(ve_input);
        const Graph g = ctx.stage("load", [&] { return load_edge_list(ve_input); });
        const auto d = ctx.stage("decompose", [&] { return decompose(g); });
        const auto report = ctx.stage("verify", [&] {
            return verify_disjoint_path_bound(g, d, ve_pairs, ve_seed);
        });
        const auto upward = ctx.stage("upward_edges", [&] {
            return verify_shell_upward_edges(g, d, ve_top_pairs, ve_seed);
        });
        json cores = json::array();
        for (std::size_t k = 1; k < report.core_connected.size(); ++k)
            cores.push_back({{"k", k}, {"connected", bool(report.core_connected[k])}});
        json pairs = json::array();
        for (const auto& p : report.sampled_pairs)
            pairs.push_back({{"u", g.label(p.u)},
                             {"v", g.label(p.v)},
                             {"c_u", p.c_u},
                             {"c_v", p.c_v},
                             {"disjoint_paths", p.disjoint_paths},
                             {"bound_satisfied", p.bound_satisfied}});
        json violations = json::array();
        for (const auto& q : upward.violations)
            violations.push_back(
                {{"shell", q.shell}, {"cluster", q.cluster}, {"upward_edges", q.upward_edges}});
        json out = {
            {"cores_connected", cores},
            {"pair_bound",
             {{"pairs", ve_pairs}, {"violation_fraction", report.violation_fraction},
              {"samples", pairs}}},
            {"upward_edges",
             {{"violating_clusters", violations},
              {"top_core_edge_connected", upward.top_core_edge_connected},
              {"top_core_pairs_checked", upward.top_core_pairs_checked}}}};
        std::ofstream(ctx.output("connectivity_report.json")) << out.dump(2) << '\n';
        ctx.results()["violation_fraction"] = report.violation_fraction;
        ctx.results()["violating_clusters"] = upward.violations.size();
    } else if (*co) {
        ctx.config() = {{"input_a", co_a}, {"input_b", co_b}};
        ctx.input(co_a);
        ctx.input(co_b);
        const Graph ga = ctx.stage("load_a", [&] { return load_edge_list(co_a); });
        const Graph gb = ctx.stage("load_b", [&] { return load_edge_list(co_b); });
        const auto cmp = ctx.stage("compare", [&] { return compare_maps(ga, gb); });
        write_transition_csv(cmp.matrix, ctx.output("transition.csv"));
        write_inout_csv(cmp.inout, ctx.output("in_out.csv"));
        json summary = {{"diagonal_mass", cmp.diagonal_mass},
                        {"common_vertices", cmp.common_count},
                        {"in_count", cmp.inout.in_count},
                        {"out_count", cmp.inout.out_count},
                        {"normalization", "per-row"},
                        {"matching", "by external label; renumbered ids not tracked"}};
        std::ofstream(ctx.output("compare_summary.json")) << summary.dump(2) << '\n';
        ctx.results() = summary;
    }

    ctx.write_manifest();
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    try {
        return dispatch(args);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace corescope
