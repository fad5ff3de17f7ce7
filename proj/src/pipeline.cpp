#include "ngauss/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ngauss/error.hpp"
#include "ngauss/random.hpp"

namespace ngauss {

// ------------------------------------------------------------------ CSV

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string out(s.substr(b, e - b));
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
        out = out.substr(1, out.size() - 2);
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(std::string_view(line).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       const std::string& name) {
    const std::string want = lower(name);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (lower(header[i]) == want) return i;
    }
    return std::nullopt;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError("non-numeric value '" + cell + "' in column '" + column + "'", row);
    }
    return v;
}

}  // namespace

ErrorSeries parse_errors_csv(const std::string& text, const CsvOptions& options) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        header = split_row(line);
        break;
    }
    if (header.empty()) {
        throw InvalidInputError("CSV input has no header row");
    }

    std::optional<std::size_t> error_idx;
    std::optional<std::size_t> forecast_idx;
    std::optional<std::size_t> observed_idx;
    const auto date_idx = find_column(header, options.date_col);
    if (options.error_col) {
        error_idx = find_column(header, *options.error_col);
        if (!error_idx) {
            throw InvalidInputError("CSV has no column named '" + *options.error_col + "'");
        }
    } else {
        forecast_idx = find_column(header, options.forecast_col);
        observed_idx = find_column(header, options.observed_col);
        if (!forecast_idx || !observed_idx) {
            if (header.size() == 1) {
                error_idx = 0;
            } else {
                throw InvalidInputError("CSV needs columns '" + options.forecast_col + "' and '" +
                                        options.observed_col + "' (or pass an error column)");
            }
        }
    }

    std::vector<double> errors;
    std::vector<std::string> dates;
    std::size_t dropped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto cells = split_row(line);
        auto cell = [&](std::size_t idx) -> std::string {
            return idx < cells.size() ? cells[idx] : std::string();
        };
        double value;
        if (error_idx) {
            const std::string e = cell(*error_idx);
            if (e.empty()) {
                ++dropped;
                continue;
            }
            value = parse_cell(e, line_no, header[*error_idx]);
        } else {
            const std::string f = cell(*forecast_idx);
            const std::string o = cell(*observed_idx);
            if (f.empty() || o.empty()) {
                ++dropped;
                continue;
            }
            value = parse_cell(f, line_no, header[*forecast_idx]) -
                    parse_cell(o, line_no, header[*observed_idx]);
        }
        errors.push_back(value);
        if (date_idx) dates.push_back(cell(*date_idx));
    }
    if (errors.empty()) {
        throw InvalidInputError("CSV contains no usable rows (" + std::to_string(dropped) +
                                " dropped for missing values)");
    }
    return ErrorSeries{std::move(dates), Sample(std::move(errors)), dropped};
}

ErrorSeries load_errors(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    ErrorSeries series = parse_errors_csv(buffer.str(), options);
    return ErrorSeries{std::move(series.dates),
                       Sample(series.errors.vector(), path.filename().string()),
                       series.dropped_rows};
}

// -------------------------------------------------------------- Analysis

AnalysisConfig AnalysisConfig::paper2011() {
    AnalysisConfig c;
    c.acf_lags = 20;
    c.thin = ThinMode::Auto;
    c.thin_keep = ThinKeep::Odd;
    c.bins = BinScheme::forecast_error_default();
    c.df_override = 9;
    c.laplace_mu_zero = true;
    c.max_odd = 15;
    c.preset = "paper2011";
    return c;
}

namespace {

// Stream ids for the Monte Carlo pieces of analyze() and run_study().
constexpr std::uint64_t kLillieforsStream = 0x4c494c4cULL;

template <class F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("stage '") + name + "': " + e.what());
    }
}

NormalityTests test_normality(const Sample& s, const LillieforsNull& null, double alpha) {
    NormalityTests t;
    t.lilliefors = lilliefors(s, null);
    t.shapiro_wilk = shapiro_wilk(s);
    const bool lf = t.lilliefors.p_value <= alpha;
    const bool sw = t.shapiro_wilk.p_value <= alpha;
    t.rejected = lf || sw;
    t.tests_disagree = lf != sw;
    return t;
}

std::string format_p(double p) {
    std::ostringstream os;
    os.precision(4);
    os << p;
    return os.str();
}

}  // namespace

AnalysisReport analyze(const ErrorSeries& series, const AnalysisConfig& config) {
    AnalysisReport report = analyze(series.errors, config);
    report.dropped_rows = series.dropped_rows;
    report.n_input = series.errors.size() + series.dropped_rows;
    return report;
}

AnalysisReport analyze(const Sample& errors, const AnalysisConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw InvalidInputError("alpha must lie in (0, 1)");
    }
    AnalysisReport report;
    report.config = config;
    report.n_input = errors.size();
    auto note = [&report](std::string text) { report.decisions.push_back(std::move(text)); };

    // 1. Serial correlation.
    report.acf_raw = stage("acf", [&] { return acf(errors, config.acf_lags); });
    report.whiteness_raw = whiteness_check(report.acf_raw);
    note("acf: " + report.whiteness_raw.diagnostic);

    // 2. Thinning.
    Sample data = errors;
    const bool thin = config.thin == ThinMode::On ||
                      (config.thin == ThinMode::Auto && !report.whiteness_raw.white);
    if (thin) {
        data = stage("thin", [&] { return thin_pairs(errors, config.thin_keep); });
        report.thinned = true;
        note(std::string("thinning: kept ") +
             (config.thin_keep == ThinKeep::Odd ? "odd" : "even") + " positions, " +
             std::to_string(errors.size()) + " -> " + std::to_string(data.size()) +
             (config.thin == ThinMode::On ? " (forced)" : " (serial correlation detected)"));
        if (data.size() > static_cast<std::size_t>(config.acf_lags)) {
            report.acf_thinned = acf(data, config.acf_lags);
            report.whiteness_thinned = whiteness_check(*report.acf_thinned);
            note("acf after thinning: " + report.whiteness_thinned->diagnostic);
        } else {
            note("acf after thinning: skipped, too few observations for the lag window");
        }
    } else {
        note(config.thin == ThinMode::Off ? "thinning: disabled" : "thinning: not needed");
    }
    report.n_analyzed = data.size();

    // 3. Moments.
    report.moments = stage("moments", [&] { return summary(data); });

    // 4. Normality of the data as observed.
    const LillieforsNull null = stage("normality", [&] {
        return LillieforsNull(data.size(), config.lilliefors_reps,
                              derive_seed(config.seed, kLillieforsStream));
    });
    report.normality = stage("normality", [&] { return test_normality(data, null, config.alpha); });
    note("normality: lilliefors p = " + format_p(report.normality.lilliefors.p_value) +
         ", shapiro-wilk p = " + format_p(report.normality.shapiro_wilk.p_value) +
         (report.normality.rejected ? ", rejected" : ", not rejected") + " at alpha = " +
         format_p(config.alpha) +
         (report.normality.tests_disagree ? " (the two tests disagree)" : ""));

    // 5. Exponent selection and re-test.
    if (report.moments.kurtosis > 1.0) {
        report.exponent_candidates = stage("select-exponent", [&] {
            return select_exponent(report.moments.kurtosis, config.max_odd, config.top_n);
        });
    } else {
        note("select-exponent: sample kurtosis <= 1, no candidate exponents");
    }
    if (report.normality.rejected && !report.exponent_candidates.empty()) {
        const ExponentCandidate& top = report.exponent_candidates.front();
        const OddRatio e = top.normalizing();
        const Sample transformed = stage("transform", [&] { return transform_sample(data, e); });
        report.transform_applied = true;
        report.normalizing_exponent = e;
        report.transformed_moments = stage("transform", [&] { return summary(transformed); });
        report.transformed_normality =
            stage("transform", [&] { return test_normality(transformed, null, config.alpha); });
        note("transform: kurtosis " + format_p(report.moments.kurtosis) + " matches c = " +
             top.c.to_string() + " (beta2 = " + format_p(top.beta2) +
             "); data raised to " + e.to_string() + "; lilliefors p = " +
             format_p(report.transformed_normality->lilliefors.p_value) +
             ", shapiro-wilk p = " + format_p(report.transformed_normality->shapiro_wilk.p_value));
    } else if (!report.normality.rejected) {
        note("transform: skipped, normality not rejected");
    }

    // 6. Competing models.
    const OddRatio pn_exponent = report.normalizing_exponent.value_or(OddRatio::identity());
    auto add_fit = [&](ModelKind kind, auto&& fit_fn, int n_params) {
        try {
            FittedModel model = fit_fn();
            GofReport gof = chi_square_gof(
                data, [&model](double x) { return cdf(model, x); }, config.bins, n_params,
                config.df_override);
            report.fits.push_back({std::move(model), n_params, std::move(gof)});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Numerical) {
                throw Error(e.kind(), "stage 'fit " + model_name(kind) + "': " + e.what());
            }
            report.skipped.push_back({kind, e.what()});
            note("fit " + model_name(kind) + ": skipped, " + e.what());
        }
    };
    add_fit(ModelKind::Gaussian, [&] { return FittedModel(fit_gaussian(data)); }, 2);
    add_fit(ModelKind::PowerNormal,
            [&] { return FittedModel(fit_power_normal(data, pn_exponent)); }, 2);
    add_fit(ModelKind::Laplace,
            [&] { return FittedModel(fit_laplace(data, config.laplace_mu_zero)); },
            config.laplace_mu_zero ? 1 : 2);
    add_fit(ModelKind::PearsonIV,
            [&] { return FittedModel(fit_pearson4_mom(report.moments)); }, 4);
    if (report.fits.empty()) {
        throw DegenerateSampleError("stage 'fit': no model could be fitted");
    }

    // 7. Recommendation: largest chi-square p-value, ties to the earlier model.
    const ModelFit* best = &report.fits.front();
    for (const auto& f : report.fits) {
        if (f.gof.p_value > best->gof.p_value) best = &f;
    }
    report.recommendation = model_kind(best->model);
    note("recommendation: " + model_name(report.recommendation) + " (chi-square p = " +
         format_p(best->gof.p_value) + ")");
    return report;
}

// ------------------------------------------------------------- Table, study

std::vector<KurtosisRow> emit_table1(int max_odd) {
    const auto grid = enumerate_odd_ratios(max_odd);
    return kurtosis_table(grid);
}

StudyReport run_study(const StudyConfig& config) {
    if (config.n_samples < 1 || config.sample_size < 5) {
        throw InvalidInputError("study needs n_samples >= 1 and sample_size >= 5");
    }
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw InvalidInputError("alpha must lie in (0, 1)");
    }
    const FittedModel source = config.source == StudySource::Laplace
                                   ? FittedModel(LaplaceParams{0.0, 1.0})
                                   : FittedModel(GaussianParams{0.0, 1.0});
    const LillieforsNull null(static_cast<std::size_t>(config.sample_size),
                              config.lilliefors_reps,
                              derive_seed(config.seed, kLillieforsStream));
    StudyReport report;
    report.config = config;
    for (int i = 0; i < config.n_samples; ++i) {
        const Sample raw = sample_from(source, static_cast<std::size_t>(config.sample_size),
                                       config.seed, static_cast<std::uint64_t>(i));
        StudyRow row;
        row.index = i;
        row.kurtosis = summary(raw).kurtosis;
        row.p_raw = lilliefors(raw, null).p_value;
        row.p_transformed = row.p_raw;
        if (row.kurtosis > 1.0) {
            const auto top = select_exponent(row.kurtosis, config.max_odd, 1).front();
            row.normalizing = top.normalizing();
            row.p_transformed = lilliefors(transform_sample(raw, *row.normalizing), null).p_value;
        }
        if (row.p_raw > config.alpha) ++report.raw_accepted;
        if (row.p_transformed > config.alpha) ++report.transformed_accepted;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<HistogramRow> export_histogram(const Sample& sample, const BinScheme& bins,
                                           const std::optional<FittedModel>& overlay) {
    std::vector<HistogramRow> rows(bins.bin_count());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        rows[j].lo = bins.lower(j);
        rows[j].hi = bins.upper(j);
    }
    for (double x : sample.values()) ++rows[bins.locate(x)].count;
    const double n = static_cast<double>(sample.size());
    for (auto& row : rows) {
        if (std::isinf(row.lo) || std::isinf(row.hi)) continue;
        row.density = static_cast<double>(row.count) / (n * (row.hi - row.lo));
        if (overlay) row.overlay = pdf(*overlay, 0.5 * (row.lo + row.hi));
    }
    return rows;
}

}  // namespace ngauss
