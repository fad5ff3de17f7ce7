// Command-line front end: ngauss <subcommand> [options]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ngauss/distributions.hpp"
#include "ngauss/error.hpp"
#include "ngauss/gof.hpp"
#include "ngauss/moments.hpp"
#include "ngauss/pipeline.hpp"
#include "ngauss/power_transform.hpp"
#include "ngauss/report.hpp"

namespace {

using namespace ngauss;

enum ExitCode { kOk = 0, kInputError = 2, kStatisticalError = 3, kNumericalError = 4 };

struct CommonOptions {
    std::string input;
    std::string output;
    std::string format = "text";
    std::optional<std::string> error_col;
    std::string forecast_col = "forecast";
    std::string observed_col = "observed";
    std::string date_col = "date";
};

void add_io(CLI::App* cmd, CommonOptions& o, bool needs_input) {
    auto* in = cmd->add_option("--input", o.input, "CSV file (date,forecast,observed or one error column)");
    if (needs_input) in->required();
    cmd->add_option("--output", o.output, "Write the result here instead of stdout");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--error-col", o.error_col, "Read errors directly from this column");
    cmd->add_option("--forecast-col", o.forecast_col, "Forecast column name");
    cmd->add_option("--observed-col", o.observed_col, "Observed column name");
    cmd->add_option("--date-col", o.date_col, "Date column name");
}

ErrorSeries read_input(const CommonOptions& o) {
    CsvOptions csv;
    csv.error_col = o.error_col;
    csv.forecast_col = o.forecast_col;
    csv.observed_col = o.observed_col;
    csv.date_col = o.date_col;
    return load_errors(o.input, csv);
}

void emit(const CommonOptions& o, const std::string& text, const nlohmann::json& j) {
    const std::string body = o.format == "json" ? j.dump(2) + "\n" : text;
    if (o.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + o.output + "' for writing");
    out << body;
    if (!out) throw IoError("error writing '" + o.output + "'");
}

FittedModel fit_model(ModelKind kind, const Sample& s, const std::optional<std::string>& exponent,
                      bool laplace_mu_zero, int max_odd) {
    switch (kind) {
        case ModelKind::Gaussian: return fit_gaussian(s);
        case ModelKind::PowerNormal: {
            OddRatio e = OddRatio::identity();
            if (exponent) {
                e = OddRatio::parse(*exponent);
            } else {
                e = select_exponent(summary(s).kurtosis, max_odd, 1).front().normalizing();
            }
            return fit_power_normal(s, e);
        }
        case ModelKind::Laplace: return fit_laplace(s, laplace_mu_zero);
        case ModelKind::PearsonIV: return fit_pearson4_mom(summary(s));
    }
    throw InvalidInputError("unknown model");
}

int model_param_count(ModelKind kind, bool laplace_mu_zero) {
    switch (kind) {
        case ModelKind::PearsonIV: return 4;
        case ModelKind::Laplace: return laplace_mu_zero ? 1 : 2;
        default: return 2;
    }
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return kInputError;
        case ErrorKind::Statistical: return kStatisticalError;
        case ErrorKind::Numerical: return kNumericalError;
    }
    return kNumericalError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power transforms to normality, symmetric model fitting and goodness-of-fit "
                 "tests for forecast errors"};
    app.require_subcommand(1);
    CommonOptions io;

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "Mean, sd, skewness and kurtosis");
    add_io(moments_cmd, io, true);
    std::string divisor = "n-1";
    moments_cmd->add_option("--divisor", divisor, "Central-moment divisor")
        ->check(CLI::IsMember({"n-1", "n"}));

    // acf
    auto* acf_cmd = app.add_subcommand("acf", "Sample autocorrelation and whiteness check");
    add_io(acf_cmd, io, true);
    int lags = 20;
    acf_cmd->add_option("--lags", lags, "Number of lags");

    // select-exponent
    auto* select_cmd = app.add_subcommand("select-exponent", "Rank odd-ratio exponents by kurtosis");
    add_io(select_cmd, io, false);
    std::optional<double> kurtosis;
    int max_odd = 31;
    int top_n = 5;
    select_cmd->add_option("--kurtosis", kurtosis, "Target kurtosis (instead of --input)");
    select_cmd->add_option("--max-odd", max_odd, "Largest odd numerator/denominator");
    select_cmd->add_option("--top", top_n, "Number of candidates");

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "Apply a signed odd-ratio power");
    add_io(transform_cmd, io, true);
    std::optional<std::string> exponent;
    transform_cmd->add_option("--exponent", exponent, "Exponent p/q (p, q odd)")->required();

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit a model to the data");
    add_io(fit_cmd, io, true);
    std::string model = "all";
    bool laplace_mu_zero = false;
    fit_cmd->add_option("--model", model, "gaussian, power-normal, laplace, pearson4 or all");
    fit_cmd->add_option("--exponent", exponent,
                        "Normalizing exponent for power-normal (default: selected from kurtosis)");
    fit_cmd->add_option("--max-odd", max_odd, "Exponent grid bound for power-normal");
    fit_cmd->add_flag("--laplace-mu-zero", laplace_mu_zero, "Pin the Laplace location at 0");

    // gof
    auto* gof_cmd = app.add_subcommand("gof", "Goodness-of-fit test");
    add_io(gof_cmd, io, true);
    std::string test = "chi2";
    std::string bins_spec = "-2.5:2.5:0.5";
    std::optional<int> df;
    std::uint64_t seed = 2011;
    int reps = 10000;
    gof_cmd->add_option("--test", test, "chi2, lilliefors or shapiro-wilk")
        ->check(CLI::IsMember({"chi2", "lilliefors", "shapiro-wilk"}));
    gof_cmd->add_option("--model", model, "Model for chi2");
    gof_cmd->add_option("--exponent", exponent, "Normalizing exponent for power-normal");
    gof_cmd->add_option("--max-odd", max_odd, "Exponent grid bound for power-normal");
    gof_cmd->add_option("--bins", bins_spec, "lo:hi:step or comma-separated edges");
    gof_cmd->add_option("--df", df, "Override chi-square degrees of freedom");
    gof_cmd->add_option("--seed", seed, "Seed for Monte Carlo p-values");
    gof_cmd->add_option("--reps", reps, "Monte Carlo replications for Lilliefors");
    gof_cmd->add_flag("--laplace-mu-zero", laplace_mu_zero, "Pin the Laplace location at 0");

    // table
    auto* table_cmd = app.add_subcommand("table", "Kurtosis of Z^c over the odd-ratio grid");
    add_io(table_cmd, io, false);
    int table_max_odd = 39;
    int digits = 4;
    table_cmd->add_option("--max-odd", table_max_odd, "Largest odd numerator/denominator");
    table_cmd->add_option("--digits", digits, "Significant figures for beta2");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo study of the transform");
    add_io(sim_cmd, io, false);
    StudyConfig study;
    std::string source = "laplace";
    sim_cmd->add_option("--source", source, "Source distribution")
        ->check(CLI::IsMember({"laplace", "gaussian"}));
    sim_cmd->add_option("--samples", study.n_samples, "Number of samples");
    sim_cmd->add_option("--size", study.sample_size, "Observations per sample");
    sim_cmd->add_option("--alpha", study.alpha, "Significance level");
    sim_cmd->add_option("--seed", study.seed, "Seed");
    sim_cmd->add_option("--max-odd", study.max_odd, "Exponent grid bound");
    sim_cmd->add_option("--reps", study.lilliefors_reps, "Lilliefors Monte Carlo replications");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline with model comparison");
    add_io(analyze_cmd, io, true);
    std::string preset = "default";
    std::string thin = "auto";
    double alpha = 0.05;
    analyze_cmd->add_option("--preset", preset, "Configuration preset")
        ->check(CLI::IsMember({"default", "paper2011"}));
    auto* a_alpha = analyze_cmd->add_option("--alpha", alpha, "Significance level");
    auto* a_thin = analyze_cmd->add_option("--thin", thin, "Thinning mode")
                       ->check(CLI::IsMember({"auto", "on", "off"}));
    auto* a_bins = analyze_cmd->add_option("--bins", bins_spec, "lo:hi:step or edge list");
    analyze_cmd->add_option("--df", df, "Override chi-square degrees of freedom");
    auto* a_max_odd = analyze_cmd->add_option("--max-odd", max_odd, "Exponent grid bound");
    auto* a_seed = analyze_cmd->add_option("--seed", seed, "Seed for Monte Carlo p-values");
    auto* a_reps = analyze_cmd->add_option("--reps", reps, "Lilliefors replications");
    auto* a_mu0 = analyze_cmd->add_flag("--laplace-mu-zero", laplace_mu_zero,
                                        "Pin the Laplace location at 0");

    // hist
    auto* hist_cmd = app.add_subcommand("hist", "Histogram table with optional model overlay");
    add_io(hist_cmd, io, true);
    std::string overlay = "none";
    hist_cmd->add_option("--bins", bins_spec, "lo:hi:step or edge list");
    hist_cmd->add_option("--overlay", overlay, "none, gaussian, power-normal, laplace or pearson4");
    hist_cmd->add_option("--exponent", exponent, "Normalizing exponent for power-normal overlay");
    hist_cmd->add_option("--max-odd", max_odd, "Exponent grid bound for power-normal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (moments_cmd->parsed()) {
            const auto series = read_input(io);
            const auto s = summary(series.errors, divisor == "n" ? Divisor::N : Divisor::NMinusOne);
            auto j = to_json(s);
            j["dropped_rows"] = series.dropped_rows;
            emit(io, to_text(s) + "dropped_rows: " + std::to_string(series.dropped_rows) + "\n", j);
        } else if (acf_cmd->parsed()) {
            const auto series = read_input(io);
            const auto r = acf(series.errors, lags);
            const auto v = whiteness_check(r);
            auto j = to_json(r);
            j["whiteness"] = to_json(v);
            emit(io, to_text(r) + "white: " + (v.white ? "yes" : "no") + "\n" + v.diagnostic + "\n",
                 j);
        } else if (select_cmd->parsed()) {
            double target;
            if (kurtosis) {
                target = *kurtosis;
            } else if (!io.input.empty()) {
                target = summary(read_input(io).errors).kurtosis;
            } else {
                throw InvalidInputError("select-exponent needs --kurtosis or --input");
            }
            const auto cands = select_exponent(target, max_odd, top_n);
            nlohmann::json j{{"target_kurtosis", target}, {"candidates", nlohmann::json::array()}};
            for (const auto& c : cands) j["candidates"].push_back(to_json(c));
            emit(io,
                 "target_kurtosis: " + std::to_string(target) +
                     "\n(data ~ Normal^c; raise data to the normalizing exponent 1/c)\n" +
                     to_text(cands),
                 j);
        } else if (transform_cmd->parsed()) {
            const auto series = read_input(io);
            const OddRatio e = OddRatio::parse(*exponent);
            const Sample t = transform_sample(series.errors, e);
            std::string text = "transformed\n";
            for (double v : t.values()) {
                std::ostringstream os;
                os.precision(17);
                os << v << '\n';
                text += os.str();
            }
            emit(io, text, {{"exponent", e.to_string()}, {"values", t.vector()}});
        } else if (fit_cmd->parsed()) {
            const auto series = read_input(io);
            std::vector<ModelKind> kinds;
            if (model == "all") {
                kinds = {ModelKind::Gaussian, ModelKind::PowerNormal, ModelKind::Laplace,
                         ModelKind::PearsonIV};
            } else {
                kinds = {parse_model_kind(model)};
            }
            std::string text;
            nlohmann::json j = nlohmann::json::array();
            for (auto kind : kinds) {
                const auto m = fit_model(kind, series.errors, exponent, laplace_mu_zero, max_odd);
                text += to_text(m);
                j.push_back(to_json(m));
            }
            emit(io, text, model == "all" ? j : j.front());
        } else if (gof_cmd->parsed()) {
            const auto series = read_input(io);
            GofReport r;
            if (test == "lilliefors") {
                r = lilliefors(series.errors, reps, seed);
            } else if (test == "shapiro-wilk") {
                r = shapiro_wilk(series.errors);
            } else {
                const ModelKind kind = parse_model_kind(model == "all" ? "gaussian" : model);
                const auto m = fit_model(kind, series.errors, exponent, laplace_mu_zero, max_odd);
                r = chi_square_gof(
                    series.errors, [&m](double x) { return cdf(m, x); },
                    BinScheme::parse(bins_spec), model_param_count(kind, laplace_mu_zero), df);
                auto j = to_json(r);
                j["model"] = to_json(m);
                emit(io, to_text(m) + to_text(r), j);
                return kOk;
            }
            emit(io, to_text(r), to_json(r));
        } else if (table_cmd->parsed()) {
            const auto rows = emit_table1(table_max_odd);
            emit(io, table_to_text(rows, digits), table_to_json(rows));
        } else if (sim_cmd->parsed()) {
            study.source = source == "gaussian" ? StudySource::Gaussian : StudySource::Laplace;
            const auto r = run_study(study);
            emit(io, to_text(r), to_json(r));
        } else if (analyze_cmd->parsed()) {
            AnalysisConfig cfg = preset == "paper2011" ? AnalysisConfig::paper2011() : AnalysisConfig{};
            if (a_alpha->count()) cfg.alpha = alpha;
            if (a_thin->count()) {
                cfg.thin = thin == "on" ? ThinMode::On : thin == "off" ? ThinMode::Off : ThinMode::Auto;
            }
            if (a_bins->count()) cfg.bins = BinScheme::parse(bins_spec);
            if (df) cfg.df_override = *df;
            if (a_max_odd->count()) cfg.max_odd = max_odd;
            if (a_seed->count()) cfg.seed = seed;
            if (a_reps->count()) cfg.lilliefors_reps = reps;
            if (a_mu0->count()) cfg.laplace_mu_zero = true;
            const auto r = analyze(read_input(io), cfg);
            emit(io, to_text(r), to_json(r));
        } else if (hist_cmd->parsed()) {
            const auto series = read_input(io);
            std::optional<FittedModel> m;
            if (overlay != "none") {
                m = fit_model(parse_model_kind(overlay), series.errors, exponent, false, max_odd);
            }
            const auto rows = export_histogram(series.errors, BinScheme::parse(bins_spec), m);
            emit(io, histogram_to_csv(rows), histogram_to_json(rows));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}
