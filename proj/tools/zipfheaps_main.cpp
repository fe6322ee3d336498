// Command-line surface over the library: expectation evaluators, Monte Carlo
// simulation, corpus analysis, and Heaps/Zipf fitting, with CSV or JSON-lines
// records on stdout. All outputs are deterministic for fixed arguments; seeds
// default to 0 rather than the clock.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zipfheaps/csv_io.hpp"
#include "zipfheaps/errors.hpp"
#include "zipfheaps/expectation.hpp"
#include "zipfheaps/fit.hpp"
#include "zipfheaps/simulate.hpp"
#include "zipfheaps/special_functions.hpp"
#include "zipfheaps/zipf.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Field {
    std::string name;
    std::string text;  // CSV cell, already formatted
    json value;        // JSONL value
};

Field field(const std::string& name, double v) {
    return {name, zipfheaps::format_double(v), json(v)};
}

Field field(const std::string& name, std::uint64_t v) {
    return {name, std::to_string(v), json(v)};
}

// Emits records as CSV (fixed header from the first record) or JSON lines.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, bool jsonl) : out_(out), jsonl_(jsonl) {}

    void write(const std::vector<Field>& fields) {
        if (jsonl_) {
            json obj = json::object();
            for (const Field& f : fields) {
                obj[f.name] = f.value;
            }
            out_ << obj.dump() << '\n';
            return;
        }
        if (!header_written_) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                out_ << (i ? "," : "") << fields[i].name;
            }
            out_ << '\n';
            header_written_ = true;
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out_ << (i ? "," : "") << fields[i].text;
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    bool jsonl_;
    bool header_written_ = false;
};

fs::path resolve_outdir(const std::string& flag_value) {
    if (!flag_value.empty()) {
        return fs::path(flag_value);
    }
    if (const char* env = std::getenv("ZIPFHEAPS_OUTDIR"); env && *env) {
        return fs::path(env);
    }
    return fs::path(".");
}

void require_alpha(double alpha) {
    if (!(alpha > 1.0 + 1e-9)) {
        throw std::domain_error("alpha must be > 1 (the Zipf normalizer diverges otherwise)");
    }
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);  // LF endings everywhere
    if (!out) {
        throw std::runtime_error("cannot open output file " + path.string());
    }
    return out;
}

struct CommonOptions {
    std::string format = "csv";
    bool jsonl() const { return format == "jsonl"; }
};

int run_expect(double alpha, std::uint64_t n, double eps, const CommonOptions& common) {
    require_alpha(alpha);
    if (!(eps > 0.0)) {
        throw std::domain_error("eps must be > 0");
    }
    zipfheaps::ZipfParams params(alpha);
    RecordWriter writer(std::cout, common.jsonl());

    std::vector<zipfheaps::ExpectationResult> results;
    results.push_back(zipfheaps::exact_expected_distinct(params, n, eps));
    if (n >= 1) {
        results.push_back(
            zipfheaps::integral_expected_distinct(params, n, zipfheaps::LowerLimit::FromOne));
        results.push_back(
            zipfheaps::integral_expected_distinct(params, n, zipfheaps::LowerLimit::FromZero));
        // ClosedForm evaluates the substituted tail integral
        // int_1^inf [1-(1-y^-alpha)^n] dy exactly; it is the paper-chain object
        // the two quadratures sandwich after rescaling, not E X itself.
        const double cf = zipfheaps::closed_form_tail_integral(alpha, n);
        results.push_back({cf, 1e-13 * (std::abs(cf) + 1.0), zipfheaps::Method::ClosedForm});
    }
    results.push_back(zipfheaps::asymptotic_expected_distinct(params, n));

    for (const auto& r : results) {
        writer.write({{"method", zipfheaps::method_name(r.method),
                       json(zipfheaps::method_name(r.method))},
                      field("value", r.value),
                      field("error", r.abs_error_bound)});
    }
    return 0;
}

int run_simulate(double alpha, std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                 const std::string& outdir_flag, const CommonOptions& common) {
    require_alpha(alpha);
    if (trials < 2) {
        throw std::domain_error("trials must be >= 2 for a standard error");
    }
    zipfheaps::ZipfParams params(alpha);

    const fs::path outdir = resolve_outdir(outdir_flag);
    fs::create_directories(outdir);

    // Trial 0 doubles as the growth-curve sample; its distinct count is
    // bit-identical to the one monte_carlo_distinct would produce.
    zipfheaps::RandomStream trial0 = zipfheaps::RandomStream::derive(seed, 0);
    const zipfheaps::GrowthCurve curve = zipfheaps::simulate_growth_curve(
        params, n, trial0, zipfheaps::geometric_checkpoints(n));
    {
        std::ofstream out = open_output(outdir / "simulate.growth.csv");
        zipfheaps::write_growth_csv(out, curve);
    }

    const zipfheaps::MCEstimate estimate =
        zipfheaps::monte_carlo_distinct(params, n, trials, seed);
    RecordWriter writer(std::cout, common.jsonl());
    writer.write({field("mean", estimate.mean), field("std_error", estimate.std_error),
                  field("trials", estimate.trials)});
    return 0;
}

zipfheaps::GrowthCurve read_curve_from(const std::string& input) {
    if (input == "-") {
        return zipfheaps::read_growth_csv(std::cin);
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file " + input);
    }
    return zipfheaps::read_growth_csv(in);
}

int run_fit(const std::string& input, std::uint64_t min_m, const CommonOptions& common) {
    const zipfheaps::GrowthCurve curve = read_curve_from(input);
    const zipfheaps::FitResult fit = zipfheaps::fit_heaps(curve, min_m);
    RecordWriter writer(std::cout, common.jsonl());
    writer.write({field("exponent", fit.exponent), field("log_intercept", fit.log_intercept),
                  field("residual_rms", fit.residual_rms),
                  field("points_used", fit.points_used)});
    return 0;
}

int run_analyze(const std::string& input, std::uint64_t min_m,
                const std::string& outdir_flag, const CommonOptions& common) {
    zipfheaps::TokenizerDiagnostics diag;
    zipfheaps::CorpusAnalysis analysis;
    std::string stem;
    if (input == "-") {
        analysis = zipfheaps::analyze_stream(std::cin, &diag);
        stem = "stdin";
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            throw std::runtime_error("cannot open input file " + input);
        }
        analysis = zipfheaps::analyze_stream(in, &diag);
        stem = fs::path(input).stem().string();
    }
    if (diag.invalid_bytes > 0) {
        std::cerr << "note: replaced " << diag.invalid_bytes
                  << " invalid UTF-8 byte(s) during tokenization\n";
    }

    const fs::path outdir = resolve_outdir(outdir_flag);
    fs::create_directories(outdir);
    {
        std::ofstream out = open_output(outdir / (stem + ".growth.csv"));
        zipfheaps::write_growth_csv(out, analysis.curve);
    }
    {
        std::ofstream out = open_output(outdir / (stem + ".ranks.csv"));
        zipfheaps::write_rank_csv(out, analysis.table);
    }

    const zipfheaps::FitResult heaps = zipfheaps::fit_heaps(analysis.curve, min_m);
    const zipfheaps::FitResult zipf = zipfheaps::fit_zipf_alpha(analysis.table);
    const zipfheaps::ReciprocityReport report =
        zipfheaps::reciprocity_report(zipf.exponent, heaps.exponent);

    RecordWriter writer(std::cout, common.jsonl());
    writer.write({field("alpha_hat", report.alpha_hat), field("beta_hat", report.beta_hat),
                  field("product", report.product), field("deviation", report.deviation)});
    return 0;
}

int run_reciprocity(double alpha, std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                    std::uint64_t min_m, const CommonOptions& common) {
    require_alpha(alpha);
    if (n < 1) {
        throw std::domain_error("n must be >= 1");
    }
    if (trials < 1) {
        throw std::domain_error("trials must be >= 1");
    }
    zipfheaps::ZipfParams params(alpha);
    RecordWriter writer(std::cout, common.jsonl());
    for (std::uint64_t t = 0; t < trials; ++t) {
        zipfheaps::RandomStream stream = zipfheaps::RandomStream::derive(seed, t);
        const std::vector<std::uint64_t> text = zipfheaps::sample_text(params, n, stream);
        std::vector<std::string> tokens;
        tokens.reserve(text.size());
        for (std::uint64_t rank : text) {
            tokens.push_back(std::to_string(rank));
        }
        const zipfheaps::CorpusAnalysis analysis = zipfheaps::analyze_tokens(tokens);
        const zipfheaps::FitResult heaps = zipfheaps::fit_heaps(analysis.curve, min_m);
        const zipfheaps::FitResult zipf = zipfheaps::fit_zipf_alpha(analysis.table);
        const zipfheaps::ReciprocityReport report =
            zipfheaps::reciprocity_report(zipf.exponent, heaps.exponent);
        writer.write({field("trial", t), field("alpha_hat", report.alpha_hat),
                      field("beta_hat", report.beta_hat), field("product", report.product),
                      field("deviation", report.deviation)});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Generative Zipf text model: distinct-word expectations, Monte Carlo\n"
        "simulation, corpus analysis, and the Heaps/Zipf exponent reciprocity."};
    app.require_subcommand(1);

    CommonOptions common;
    double alpha = 2.0;
    std::uint64_t n = 0;
    std::uint64_t trials = 2;
    std::uint64_t seed = 0;
    double eps = 1e-9;
    std::uint64_t min_m = 1000;
    std::string input;
    std::string outdir;

    auto add_format = [&common](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "Record format on stdout")
            ->check(CLI::IsMember({"csv", "jsonl"}))
            ->capture_default_str();
    };

    CLI::App* expect = app.add_subcommand(
        "expect", "Expected distinct-word count by every evaluation method");
    expect->add_option("--alpha", alpha, "Zipf exponent (> 1)")->required();
    expect->add_option("--n", n, "Text length in tokens")->required();
    expect->add_option("--eps", eps, "Absolute accuracy of the exact series")
        ->capture_default_str();
    add_format(expect);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo distinct-count estimate; writes the "
                                       "trial-0 growth curve to simulate.growth.csv");
    simulate->add_option("--alpha", alpha, "Zipf exponent (> 1)")->required();
    simulate->add_option("--n", n, "Text length in tokens")->required();
    simulate->add_option("--trials", trials, "Independent trials (>= 2)")->required();
    simulate->add_option("--seed", seed, "Base seed; trial t uses derive(seed, t)")
        ->capture_default_str();
    simulate->add_option("--outdir", outdir,
                         "Output directory (default $ZIPFHEAPS_OUTDIR or .)");
    add_format(simulate);

    CLI::App* fit = app.add_subcommand("fit", "Heaps-law fit of a growth-curve CSV");
    fit->add_option("--input", input, "Curve CSV path, or - for stdin")->required();
    fit->add_option("--min-m", min_m, "Discard points with m below this")
        ->capture_default_str();
    add_format(fit);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Tokenize a text, emit growth + rank-frequency CSVs, fit both exponents");
    analyze->add_option("--input", input, "Text file path, or - for stdin")->required();
    analyze->add_option("--min-m", min_m, "Heaps fit cutoff")->capture_default_str();
    analyze->add_option("--outdir", outdir,
                        "Output directory (default $ZIPFHEAPS_OUTDIR or .)");
    add_format(analyze);

    CLI::App* reciprocity = app.add_subcommand(
        "reciprocity", "End-to-end synthetic pipeline: sample, analyze, fit, report");
    reciprocity->add_option("--alpha", alpha, "Zipf exponent (> 1)")->required();
    reciprocity->add_option("--n", n, "Tokens per trial corpus")->required();
    reciprocity->add_option("--trials", trials, "Trial corpora")->capture_default_str();
    reciprocity->add_option("--seed", seed, "Base seed")->capture_default_str();
    reciprocity->add_option("--min-m", min_m, "Heaps fit cutoff")->capture_default_str();
    add_format(reciprocity);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(expect)) {
            return run_expect(alpha, n, eps, common);
        }
        if (app.got_subcommand(simulate)) {
            return run_simulate(alpha, n, trials, seed, outdir, common);
        }
        if (app.got_subcommand(fit)) {
            return run_fit(input, min_m, common);
        }
        if (app.got_subcommand(analyze)) {
            return run_analyze(input, min_m, outdir, common);
        }
        if (app.got_subcommand(reciprocity)) {
            return run_reciprocity(alpha, n, trials, seed, min_m, common);
        }
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help and --version are successes
    } catch (const zipfheaps::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
