#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ngauss/distributions.hpp"
#include "ngauss/gof.hpp"
#include "ngauss/moments.hpp"
#include "ngauss/power_transform.hpp"

namespace ngauss {

/// Forecast errors T_F - T_O read from a CSV file.
struct ErrorSeries {
    std::vector<std::string> dates;  // empty when the file has no date column
    Sample errors;
    std::size_t dropped_rows = 0;
};

/**
 * Column mapping for load_errors(). Names are matched case-insensitively.
 *
 * When error_col is set, that column is read directly. Otherwise the errors
 * are forecast - observed; a file with a single column is read as errors.
 */
struct CsvOptions {
    std::string date_col = "date";
    std::string forecast_col = "forecast";
    std::string observed_col = "observed";
    std::optional<std::string> error_col;
};

[[nodiscard]] ErrorSeries load_errors(const std::filesystem::path& path,
                                      const CsvOptions& options = {});
[[nodiscard]] ErrorSeries parse_errors_csv(const std::string& text, const CsvOptions& options = {});

enum class ThinMode { Auto, On, Off };

struct AnalysisConfig {
    double alpha = 0.05;
    int acf_lags = 20;
    ThinMode thin = ThinMode::Auto;
    ThinKeep thin_keep = ThinKeep::Odd;
    BinScheme bins = BinScheme::forecast_error_default();
    std::optional<int> df_override;
    bool laplace_mu_zero = false;
    int max_odd = 31;
    int top_n = 5;
    int lilliefors_reps = 10000;
    std::uint64_t seed = 2011;
    std::string preset = "default";

    /// 20 lags, odd-position thinning, -2.5:2.5:0.5 bins, df 9 for every
    /// model, Laplace location fixed at 0, exponents up to 15.
    static AnalysisConfig paper2011();
};

struct NormalityTests {
    GofReport lilliefors;
    GofReport shapiro_wilk;
    bool rejected = false;        // either test has p <= alpha
    bool tests_disagree = false;  // exactly one test rejects
};

struct ModelFit {
    FittedModel model;
    int n_params = 0;
    GofReport gof;
};

struct SkippedFit {
    ModelKind kind;
    std::string reason;
};

struct AnalysisReport {
    AnalysisConfig config;
    std::size_t n_input = 0;
    std::size_t dropped_rows = 0;

    AcfReport acf_raw;
    WhitenessVerdict whiteness_raw;
    bool thinned = false;
    std::optional<AcfReport> acf_thinned;
    std::optional<WhitenessVerdict> whiteness_thinned;
    std::size_t n_analyzed = 0;

    MomentSummary moments;
    NormalityTests normality;

    std::vector<ExponentCandidate> exponent_candidates;
    bool transform_applied = false;
    std::optional<OddRatio> normalizing_exponent;
    std::optional<MomentSummary> transformed_moments;
    std::optional<NormalityTests> transformed_normality;

    std::vector<ModelFit> fits;
    std::vector<SkippedFit> skipped;
    ModelKind recommendation = ModelKind::Gaussian;

    std::vector<std::string> decisions;
};

/// Whiteness check, thinning, moments, normality tests, exponent selection and
/// re-test, four model fits with chi-square tests, and a recommendation.
[[nodiscard]] AnalysisReport analyze(const Sample& errors, const AnalysisConfig& config = {});
[[nodiscard]] AnalysisReport analyze(const ErrorSeries& series, const AnalysisConfig& config = {});

/// Every reduced odd ratio in [1/3, 3] with terms up to max_odd, with beta2.
[[nodiscard]] std::vector<KurtosisRow> emit_table1(int max_odd);

enum class StudySource { Gaussian, Laplace };

struct StudyConfig {
    int n_samples = 100;
    int sample_size = 100;
    StudySource source = StudySource::Laplace;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    int max_odd = 31;
    int lilliefors_reps = 10000;
};

struct StudyRow {
    int index = 0;
    double kurtosis = 0.0;
    std::optional<OddRatio> normalizing;
    double p_raw = 0.0;
    double p_transformed = 0.0;
};

struct StudyReport {
    StudyConfig config;
    int raw_accepted = 0;
    int transformed_accepted = 0;
    std::vector<StudyRow> rows;
};

[[nodiscard]] StudyReport run_study(const StudyConfig& config);

struct HistogramRow {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    std::optional<double> density;  // count / (n * width); absent for unbounded bins
    std::optional<double> overlay;  // model density at the bin midpoint
};

[[nodiscard]] std::vector<HistogramRow> export_histogram(
    const Sample& sample, const BinScheme& bins, const std::optional<FittedModel>& overlay = {});

}  // namespace ngauss
