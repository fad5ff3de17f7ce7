#include "ngauss/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace ngauss {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Unbounded edges serialize as null.
json edge(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

std::string num(double x, int precision = 6) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

std::string fixed(double x, int decimals) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << x;
    return os.str();
}

const char* thin_mode_name(ThinMode m) {
    switch (m) {
        case ThinMode::Auto: return "auto";
        case ThinMode::On: return "on";
        case ThinMode::Off: return "off";
    }
    return "auto";
}

json normality_json(const NormalityTests& t) {
    return {{"lilliefors", to_json(t.lilliefors)},
            {"shapiro_wilk", to_json(t.shapiro_wilk)},
            {"rejected", t.rejected},
            {"tests_disagree", t.tests_disagree}};
}

}  // namespace

std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.*g", digits, value);
    return buf;
}

// ------------------------------------------------------------------- JSON

json to_json(const MomentSummary& s) {
    return {{"n", s.n}, {"mean", s.mean}, {"sd", s.sd},
            {"skewness", s.skewness}, {"kurtosis", s.kurtosis}};
}

json to_json(const FittedModel& model) {
    json j = std::visit(
        Overloaded{
            [](const GaussianParams& p) { return json{{"mu", p.mu}, {"sigma", p.sigma}}; },
            [](const PowerNormalParams& p) {
                return json{{"mu", p.mu},
                            {"sigma", p.sigma},
                            {"normalizing_exponent", p.normalizing.to_string()},
                            {"model_exponent", p.model_exponent().to_string()}};
            },
            [](const LaplaceParams& p) { return json{{"mu", p.mu}, {"b", p.b}}; },
            [](const PearsonIVParams& p) {
                return json{{"m", p.m}, {"nu", p.nu}, {"a", p.a},
                            {"lambda", p.lambda}, {"k", p.k_norm}};
            },
        },
        model);
    j["model"] = model_name(model_kind(model));
    return j;
}

json to_json(const GofReport& r) {
    json j{{"method", r.method}, {"statistic", r.statistic}, {"p_value", r.p_value}};
    j["df"] = r.df ? json(*r.df) : json(nullptr);
    if (!r.bins.empty()) {
        json bins = json::array();
        for (const auto& b : r.bins) {
            bins.push_back({{"lo", edge(b.lo)}, {"hi", edge(b.hi)},
                            {"observed", b.observed}, {"expected", b.expected}});
        }
        j["bins"] = std::move(bins);
    }
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

json to_json(const AcfReport& r) {
    return {{"n", r.n}, {"lags", r.lags}, {"r", r.r},
            {"bound", r.bound}, {"exceedances", r.exceedances}};
}

json to_json(const WhitenessVerdict& v) {
    return {{"white", v.white}, {"offending_lags", v.offending_lags},
            {"diagnostic", v.diagnostic}};
}

json to_json(const ExponentCandidate& c) {
    return {{"c", c.c.to_string()}, {"c_value", c.c.value()}, {"beta2", c.beta2},
            {"gap", c.gap}, {"normalizing_exponent", c.normalizing().to_string()}};
}

json to_json(const AnalysisReport& r) {
    const auto& c = r.config;
    json config{{"preset", c.preset},
                {"alpha", c.alpha},
                {"acf_lags", c.acf_lags},
                {"thin", thin_mode_name(c.thin)},
                {"thin_keep", c.thin_keep == ThinKeep::Odd ? "odd" : "even"},
                {"bin_edges", c.bins.edges()},
                {"df_override", c.df_override ? json(*c.df_override) : json(nullptr)},
                {"laplace_mu_zero", c.laplace_mu_zero},
                {"max_odd", c.max_odd},
                {"lilliefors_reps", c.lilliefors_reps},
                {"seed", c.seed}};
    json j{{"config", config},
           {"n_input", r.n_input},
           {"dropped_rows", r.dropped_rows},
           {"acf", to_json(r.acf_raw)},
           {"whiteness", to_json(r.whiteness_raw)},
           {"thinned", r.thinned},
           {"n_analyzed", r.n_analyzed},
           {"moments", to_json(r.moments)},
           {"normality", normality_json(r.normality)},
           {"transform_applied", r.transform_applied}};
    j["acf_thinned"] = r.acf_thinned ? to_json(*r.acf_thinned) : json(nullptr);
    j["whiteness_thinned"] = r.whiteness_thinned ? to_json(*r.whiteness_thinned) : json(nullptr);
    json cands = json::array();
    for (const auto& cand : r.exponent_candidates) cands.push_back(to_json(cand));
    j["exponent_candidates"] = std::move(cands);
    j["normalizing_exponent"] =
        r.normalizing_exponent ? json(r.normalizing_exponent->to_string()) : json(nullptr);
    j["transformed_moments"] =
        r.transformed_moments ? to_json(*r.transformed_moments) : json(nullptr);
    j["transformed_normality"] =
        r.transformed_normality ? normality_json(*r.transformed_normality) : json(nullptr);
    json fits = json::array();
    for (const auto& f : r.fits) {
        fits.push_back({{"model", to_json(f.model)}, {"n_params", f.n_params},
                        {"gof", to_json(f.gof)}});
    }
    j["fits"] = std::move(fits);
    json skipped = json::array();
    for (const auto& s : r.skipped) {
        skipped.push_back({{"model", model_name(s.kind)}, {"reason", s.reason}});
    }
    j["skipped"] = std::move(skipped);
    j["recommendation"] = model_name(r.recommendation);
    j["decisions"] = r.decisions;
    return j;
}

json to_json(const StudyReport& r) {
    const auto& c = r.config;
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"index", row.index},
                        {"kurtosis", row.kurtosis},
                        {"normalizing_exponent",
                         row.normalizing ? json(row.normalizing->to_string()) : json(nullptr)},
                        {"p_raw", row.p_raw},
                        {"p_transformed", row.p_transformed}});
    }
    return {{"config",
             {{"n_samples", c.n_samples},
              {"sample_size", c.sample_size},
              {"source", c.source == StudySource::Laplace ? "laplace" : "gaussian"},
              {"alpha", c.alpha},
              {"seed", c.seed},
              {"max_odd", c.max_odd},
              {"lilliefors_reps", c.lilliefors_reps}}},
            {"raw_accepted", r.raw_accepted},
            {"transformed_accepted", r.transformed_accepted},
            {"rows", std::move(rows)}};
}

json table_to_json(const std::vector<KurtosisRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back({{"c", row.c.to_string()}, {"k", row.c.k()}, {"j", row.c.j()},
                       {"c_value", row.c.value()}, {"beta2", row.beta2}});
    }
    return out;
}

json histogram_to_json(const std::vector<HistogramRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back({{"lo", edge(row.lo)},
                       {"hi", edge(row.hi)},
                       {"count", row.count},
                       {"density", row.density ? json(*row.density) : json(nullptr)},
                       {"overlay", row.overlay ? json(*row.overlay) : json(nullptr)}});
    }
    return out;
}

// ------------------------------------------------------------------- Text

std::string to_text(const MomentSummary& s) {
    std::ostringstream os;
    os << "n: " << s.n << '\n'
       << "mean: " << num(s.mean) << '\n'
       << "sd: " << num(s.sd) << '\n'
       << "skewness: " << num(s.skewness) << '\n'
       << "kurtosis: " << num(s.kurtosis) << '\n';
    return os.str();
}

std::string to_text(const FittedModel& model) {
    std::ostringstream os;
    os << "model: " << model_name(model_kind(model));
    std::visit(Overloaded{
                   [&](const GaussianParams& p) {
                       os << " mu=" << num(p.mu) << " sigma=" << num(p.sigma);
                   },
                   [&](const PowerNormalParams& p) {
                       os << " mu=" << num(p.mu) << " sigma=" << num(p.sigma)
                          << " normalizing_exponent=" << p.normalizing.to_string()
                          << " model_exponent=" << p.model_exponent().to_string();
                   },
                   [&](const LaplaceParams& p) {
                       os << " mu=" << num(p.mu) << " b=" << num(p.b);
                   },
                   [&](const PearsonIVParams& p) {
                       os << " m=" << num(p.m) << " nu=" << num(p.nu) << " a=" << num(p.a)
                          << " lambda=" << num(p.lambda) << " k=" << num(p.k_norm);
                   },
               },
               model);
    os << '\n';
    return os.str();
}

std::string to_text(const GofReport& r) {
    std::ostringstream os;
    os << "test: " << r.method << '\n' << "statistic: " << num(r.statistic) << '\n';
    if (r.df) os << "df: " << *r.df << '\n';
    os << "p_value: " << num(r.p_value, 5) << '\n';
    if (!r.bins.empty()) {
        os << std::left << std::setw(22) << "interval" << std::right << std::setw(8) << "n_j"
           << std::setw(12) << "e_j" << '\n';
        for (const auto& b : r.bins) {
            const std::string interval = "(" + num(b.lo) + ", " + num(b.hi) + ")";
            os << std::left << std::setw(22) << interval << std::right << std::setw(8)
               << num(b.observed) << std::setw(12) << fixed(b.expected, 4) << '\n';
        }
    }
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string to_text(const AcfReport& r) {
    std::ostringstream os;
    os << "n: " << r.n << '\n'
       << "bound: " << num(r.bound) << '\n'
       << "exceedances: " << r.exceedances << " of " << r.lags << '\n'
       << std::setw(5) << "lag" << std::setw(12) << "r" << '\n';
    for (std::size_t k = 0; k < r.r.size(); ++k) {
        os << std::setw(5) << k + 1 << std::setw(12) << fixed(r.r[k], 5)
           << (std::fabs(r.r[k]) > r.bound ? " *" : "") << '\n';
    }
    return os.str();
}

std::string to_text(const std::vector<ExponentCandidate>& candidates) {
    std::ostringstream os;
    os << std::setw(5) << "rank" << std::setw(8) << "c" << std::setw(10) << "beta2"
       << std::setw(10) << "gap" << std::setw(14) << "normalizing" << '\n';
    int rank = 1;
    for (const auto& c : candidates) {
        os << std::setw(5) << rank++ << std::setw(8) << c.c.to_string() << std::setw(10)
           << fixed(c.beta2, 4) << std::setw(10) << fixed(c.gap, 4) << std::setw(14)
           << c.normalizing().to_string() << '\n';
    }
    return os.str();
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "# analysis\n"
       << "preset: " << r.config.preset << '\n'
       << "alpha: " << num(r.config.alpha) << '\n'
       << "seed: " << r.config.seed << '\n'
       << "n_input: " << r.n_input << '\n'
       << "dropped_rows: " << r.dropped_rows << '\n'
       << "white: " << (r.whiteness_raw.white ? "yes" : "no") << '\n'
       << "thinned: " << (r.thinned ? "yes" : "no") << '\n'
       << "n_analyzed: " << r.n_analyzed << '\n';
    os << "\n## acf\n" << to_text(r.acf_raw);
    if (r.acf_thinned) os << "\n## acf (thinned)\n" << to_text(*r.acf_thinned);
    os << "\n## moments\n" << to_text(r.moments);
    os << "\n## normality\n"
       << "lilliefors: D=" << num(r.normality.lilliefors.statistic)
       << " p=" << num(r.normality.lilliefors.p_value, 4) << '\n'
       << "shapiro_wilk: W=" << num(r.normality.shapiro_wilk.statistic)
       << " p=" << num(r.normality.shapiro_wilk.p_value, 4) << '\n'
       << "rejected: " << (r.normality.rejected ? "yes" : "no") << '\n';
    os << "\n## exponent candidates\n" << to_text(r.exponent_candidates);
    os << "transform_applied: " << (r.transform_applied ? "yes" : "no") << '\n';
    if (r.transform_applied) {
        os << "normalizing_exponent: " << r.normalizing_exponent->to_string() << '\n'
           << "transformed_kurtosis: " << num(r.transformed_moments->kurtosis) << '\n'
           << "transformed_lilliefors_p: "
           << num(r.transformed_normality->lilliefors.p_value, 4) << '\n'
           << "transformed_shapiro_wilk_p: "
           << num(r.transformed_normality->shapiro_wilk.p_value, 4) << '\n';
    }
    os << "\n## fits\n";
    for (const auto& f : r.fits) {
        os << to_text(f.model) << "n_params: " << f.n_params << '\n' << to_text(f.gof) << '\n';
    }
    for (const auto& s : r.skipped) {
        os << "skipped: " << model_name(s.kind) << ": " << s.reason << '\n';
    }
    os << "\n## decisions\n";
    for (const auto& d : r.decisions) os << "- " << d << '\n';
    os << "\nrecommendation: " << model_name(r.recommendation) << '\n';
    return os.str();
}

std::string to_text(const StudyReport& r) {
    std::ostringstream os;
    os << "# study\n"
       << "source: " << (r.config.source == StudySource::Laplace ? "laplace" : "gaussian")
       << '\n'
       << "n_samples: " << r.config.n_samples << '\n'
       << "sample_size: " << r.config.sample_size << '\n'
       << "alpha: " << num(r.config.alpha) << '\n'
       << "seed: " << r.config.seed << '\n'
       << "raw_accepted: " << r.raw_accepted << '\n'
       << "transformed_accepted: " << r.transformed_accepted << '\n'
       << '\n'
       << std::setw(6) << "index" << std::setw(11) << "kurtosis" << std::setw(8) << "exp"
       << std::setw(10) << "p_raw" << std::setw(10) << "p_trans" << '\n';
    for (const auto& row : r.rows) {
        os << std::setw(6) << row.index << std::setw(11) << fixed(row.kurtosis, 4)
           << std::setw(8) << (row.normalizing ? row.normalizing->to_string() : "-")
           << std::setw(10) << fixed(row.p_raw, 4) << std::setw(10)
           << fixed(row.p_transformed, 4) << '\n';
    }
    return os.str();
}

std::string table_to_text(const std::vector<KurtosisRow>& rows, int digits) {
    std::ostringstream os;
    os << std::setw(8) << "c" << std::setw(12) << "value" << std::setw(12) << "beta2" << '\n';
    for (const auto& row : rows) {
        os << std::setw(8) << row.c.to_string() << std::setw(12) << fixed(row.c.value(), 6)
           << std::setw(12) << format_significant(row.beta2, digits) << '\n';
    }
    return os.str();
}

std::string histogram_to_csv(const std::vector<HistogramRow>& rows) {
    std::ostringstream os;
    os << "lo,hi,count,density,overlay\n";
    for (const auto& row : rows) {
        os << num(row.lo, 10) << ',' << num(row.hi, 10) << ',' << row.count << ','
           << (row.density ? num(*row.density, 10) : "") << ','
           << (row.overlay ? num(*row.overlay, 10) : "") << '\n';
    }
    return os.str();
}

}  // namespace ngauss
