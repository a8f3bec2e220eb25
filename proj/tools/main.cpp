// spherecode CLI: generate hyperspherical codebooks, compute separation
// bounds, report statistics of saved codebooks, and run dimension sweeps.
//
// Exit codes: 0 success, 2 invalid arguments, 3 infeasible construction.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spherecode/spherecode.hpp"

namespace {

using namespace spherecode;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
    return file;
}

Scheme parse_scheme(const std::string& name) {
    const auto scheme = scheme_from_string(name);
    if (!scheme)
        throw std::invalid_argument("unknown scheme \"" + name +
                                    "\" (expected onehot, simplex, rm, bch, rs-simplex, random, lse or avg)");
    return *scheme;
}

FileFormat parse_format(const std::string& name) {
    if (name == "json") return FileFormat::Json;
    if (name == "csv") return FileFormat::HeaderCsv;
    throw std::invalid_argument("unknown format \"" + name + "\" (expected json or csv)");
}

struct CommonOptimizerFlags {
    int epochs = 1000;
    double lr = 0.1;
    double momentum = 0.9;
    double t_start = 1.0;
    double t_end = -1.0;  // <= 0 means "default to K"

    void add_to(CLI::App& app) {
        app.add_option("--epochs", epochs, "optimizer epochs")->capture_default_str();
        app.add_option("--lr", lr, "optimizer learning rate")->capture_default_str();
        app.add_option("--momentum", momentum, "optimizer momentum")->capture_default_str();
        app.add_option("--t-start", t_start, "initial log-sum-exp temperature")->capture_default_str();
        app.add_option("--t-end", t_end, "final log-sum-exp temperature (default: K)");
    }

    OptimizerConfig config() const {
        OptimizerConfig cfg;
        cfg.epochs = epochs;
        cfg.learning_rate = lr;
        cfg.momentum = momentum;
        cfg.t_start = t_start;
        if (t_end > 0.0) cfg.t_end = t_end;
        return cfg;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"hyperspherical prototype codebooks from block codes, simplices and smooth-max optimization"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct a codebook and write it to a file");
    std::string gen_scheme;
    std::uint64_t gen_k = 0;
    int gen_n = -1;
    std::uint64_t gen_seed = 0;
    std::int64_t gen_assignment_seed = -1;
    bool gen_allow_puncture = false;
    std::string gen_format = "csv";
    std::string gen_out;
    CommonOptimizerFlags gen_opt;
    gen->add_option("--scheme", gen_scheme, "onehot|simplex|rm|bch|rs-simplex|random|lse|avg")->required();
    gen->add_option("-K,--classes", gen_k, "number of classes")->required();
    gen->add_option("-n,--dim", gen_n, "target dimension (scheme-dependent)");
    gen->add_option("--seed", gen_seed, "seed for random/optimizer schemes")->capture_default_str();
    gen->add_option("--assignment-seed", gen_assignment_seed,
                    "seed for the class-to-codeword assignment of code schemes (default: fixed mapping)");
    gen->add_flag("--allow-puncture", gen_allow_puncture,
                  "adapt code schemes to non-native dimensions by puncturing/extension");
    gen->add_option("--format", gen_format, "file format: csv (JSON header + CSV rows) or json")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output path")->required();
    gen_opt.add_to(*gen);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "achievable and converse bounds for (K, n) pairs");
    std::uint64_t bnd_k = 0;
    std::vector<int> bnd_dims;
    std::string bnd_format = "csv";
    std::string bnd_out;
    bnd->add_option("-K,--classes", bnd_k, "number of classes")->required();
    bnd->add_option("-n,--dims", bnd_dims, "dimensions (comma separated or repeated)")
        ->required()
        ->delimiter(',');
    bnd->add_option("--format", bnd_format, "csv or json")->capture_default_str();
    bnd->add_option("--out", bnd_out, "output path (default: stdout)");

    // stats
    auto* st = app.add_subcommand("stats", "separation statistics of a saved codebook");
    std::string st_path;
    int st_bins = kDefaultHistogramBins;
    std::string st_format = "json";
    std::string st_out;
    std::string st_hist_csv;
    st->add_option("codebook", st_path, "codebook file")->required();
    st->add_option("--bins", st_bins, "histogram bin count over [-1, 1]")->capture_default_str();
    st->add_option("--format", st_format, "json (stats document) or csv (histogram rows)")->capture_default_str();
    st->add_option("--out", st_out, "output path (default: stdout)");
    st->add_option("--hist-csv", st_hist_csv, "also write the histogram as CSV to this path");

    // sweep
    auto* sw = app.add_subcommand("sweep", "max-cosine sweep over schemes and dimensions");
    std::vector<std::string> sw_schemes;
    std::uint64_t sw_k = 0;
    std::vector<int> sw_dims;
    std::vector<std::uint64_t> sw_seeds;
    bool sw_allow_puncture = false;
    std::string sw_format = "csv";
    std::string sw_out;
    CommonOptimizerFlags sw_opt;
    sw->add_option("--schemes", sw_schemes, "schemes to sweep")->delimiter(',');
    sw->add_option("-K,--classes", sw_k, "number of classes")->required();
    sw->add_option("-n,--dims", sw_dims, "dimensions to sweep")->delimiter(',');
    sw->add_option("--seeds", sw_seeds, "seeds for the random/lse/avg schemes")->delimiter(',');
    sw->add_flag("--allow-puncture", sw_allow_puncture, "adapt code schemes to non-native dimensions");
    sw->add_option("--format", sw_format, "csv or json")->capture_default_str();
    sw->add_option("--out", sw_out, "output path (default: stdout)");
    sw_opt.add_to(*sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (gen->parsed()) {
            GenerateOptions opts;
            opts.scheme = parse_scheme(gen_scheme);
            opts.K = gen_k;
            if (gen->count("--dim")) opts.n = gen_n;
            opts.seed = gen_seed;
            if (gen_assignment_seed >= 0) opts.assignment_seed = static_cast<std::uint64_t>(gen_assignment_seed);
            opts.allow_puncture = gen_allow_puncture;
            opts.optimizer = gen_opt.config();
            const auto gen_result = cmd_generate(opts, gen_out, parse_format(gen_format));
            std::cerr << "wrote " << gen_out << " (scheme " << to_string(gen_result.codebook.scheme) << ", K="
                      << gen_result.codebook.num_classes << ", n=" << gen_result.codebook.dim;
            if (gen_result.header.certified_max_cosine_bound)
                std::cerr << ", certified max cosine <= " << *gen_result.header.certified_max_cosine_bound;
            std::cerr << ")\n";
        } else if (bnd->parsed()) {
            const auto table = compute_bounds_table(bnd_k, bnd_dims);
            std::ofstream file;
            write_bounds_table(open_or_stdout(bnd_out, file), table, parse_format(bnd_format));
        } else if (st->parsed()) {
            const StatsResult result = compute_stats_from_file(st_path, st_bins);
            std::ofstream file;
            std::ostream& out = open_or_stdout(st_out, file);
            if (parse_format(st_format) == FileFormat::Json)
                out << stats_to_json(result).dump(2) << "\n";
            else
                write_histogram_csv(out, result.stats);
            if (!st_hist_csv.empty()) {
                std::ofstream hist(st_hist_csv);
                if (!hist) throw std::invalid_argument("cannot open " + st_hist_csv + " for writing");
                write_histogram_csv(hist, result.stats);
            }
        } else if (sw->parsed()) {
            SweepOptions opts;
            for (const auto& name : sw_schemes) opts.schemes.push_back(parse_scheme(name));
            opts.K = sw_k;
            opts.dims = sw_dims;
            if (!sw_seeds.empty()) opts.seeds = sw_seeds;
            opts.allow_puncture = sw_allow_puncture;
            opts.optimizer = sw_opt.config();
            const auto rows = run_sweep(opts);
            std::ofstream file;
            std::ostream& out = open_or_stdout(sw_out, file);
            if (parse_format(sw_format) == FileFormat::Json)
                write_sweep_json(out, rows);
            else
                write_sweep_csv(out, rows);
        }
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
