#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ngauss/distributions.hpp"
#include "ngauss/error.hpp"
#include "ngauss/gof.hpp"
#include "ngauss/moments.hpp"
#include "ngauss/pipeline.hpp"
#include "ngauss/power_transform.hpp"
#include "ngauss/report.hpp"
#include "ngauss/special_functions.hpp"

namespace py = pybind11;
using namespace ngauss;

namespace {

Sample to_sample(const std::vector<double>& values) { return Sample(values); }

OddRatio to_ratio(const py::object& obj) {
    if (py::isinstance<OddRatio>(obj)) return obj.cast<OddRatio>();
    if (py::isinstance<py::str>(obj)) return OddRatio::parse(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return OddRatio::from_fraction(obj.cast<std::int64_t>(), 1);
    throw InvalidInputError("exponent must be an OddRatio, a 'p/q' string or an odd integer");
}

ThinMode parse_thin(const std::string& s) {
    if (s == "on") return ThinMode::On;
    if (s == "off") return ThinMode::Off;
    if (s == "auto") return ThinMode::Auto;
    throw InvalidInputError("thin must be auto, on or off");
}

}  // namespace

PYBIND11_MODULE(_ngauss, m) {
    m.doc() = "Power transforms to normality and symmetric model fitting";

    static py::exception<Error> error_type(m, "NgaussError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), e.what());
        }
    });

    // moments
    py::class_<MomentSummary>(m, "MomentSummary")
        .def_readonly("n", &MomentSummary::n)
        .def_readonly("mean", &MomentSummary::mean)
        .def_readonly("sd", &MomentSummary::sd)
        .def_readonly("skewness", &MomentSummary::skewness)
        .def_readonly("kurtosis", &MomentSummary::kurtosis)
        .def("__repr__", [](const MomentSummary& s) {
            return "MomentSummary(n=" + std::to_string(s.n) + ", mean=" + std::to_string(s.mean) +
                   ", sd=" + std::to_string(s.sd) + ", skewness=" + std::to_string(s.skewness) +
                   ", kurtosis=" + std::to_string(s.kurtosis) + ")";
        });

    m.def("mean", [](const std::vector<double>& v) { return mean(to_sample(v)); });
    m.def(
        "central_moment",
        [](const std::vector<double>& v, int k) { return central_moment(to_sample(v), k); },
        py::arg("values"), py::arg("k"));
    m.def(
        "summary",
        [](const std::vector<double>& v, const std::string& divisor) {
            return summary(to_sample(v), divisor == "n" ? Divisor::N : Divisor::NMinusOne);
        },
        py::arg("values"), py::arg("divisor") = "n-1");
    m.def("center", [](const std::vector<double>& v) { return center(to_sample(v)).vector(); });

    // special functions
    m.def("ln_gamma", &ln_gamma);
    m.def("gamma_modulus_sq", &gamma_modulus_sq, py::arg("m"), py::arg("b"));
    m.def("chi_square_sf", &chi_square_sf, py::arg("x"), py::arg("df"));
    m.def("chi_square_cdf", &chi_square_cdf, py::arg("x"), py::arg("df"));
    m.def("normal_cdf", &normal_cdf);
    m.def("normal_quantile", &normal_quantile);
    m.def("gaussian_power_moment", &gaussian_power_moment);

    // power transform
    py::class_<OddRatio>(m, "OddRatio")
        .def(py::init([](std::int64_t p, std::int64_t q) { return OddRatio::from_fraction(p, q); }),
             py::arg("numerator"), py::arg("denominator") = 1)
        .def_static("parse", [](const std::string& s) { return OddRatio::parse(s); })
        .def_static("from_kj", &OddRatio::from_kj, py::arg("k"), py::arg("j"))
        .def_property_readonly("numerator", &OddRatio::numerator)
        .def_property_readonly("denominator", &OddRatio::denominator)
        .def_property_readonly("k", &OddRatio::k)
        .def_property_readonly("j", &OddRatio::j)
        .def_property_readonly("value", &OddRatio::value)
        .def("reciprocal", &OddRatio::reciprocal)
        .def("__float__", &OddRatio::value)
        .def("__str__", &OddRatio::to_string)
        .def("__repr__", [](const OddRatio& c) { return "OddRatio('" + c.to_string() + "')"; })
        .def("__eq__", [](const OddRatio& a, const OddRatio& b) { return a == b; });

    py::class_<ExponentCandidate>(m, "ExponentCandidate")
        .def_readonly("c", &ExponentCandidate::c)
        .def_readonly("beta2", &ExponentCandidate::beta2)
        .def_readonly("gap", &ExponentCandidate::gap)
        .def_property_readonly("normalizing", &ExponentCandidate::normalizing);

    m.def("signed_pow", [](double x, const py::object& c) { return signed_pow(x, to_ratio(c)); });
    m.def("transform", [](const std::vector<double>& v, const py::object& c) {
        return transform_sample(to_sample(v), to_ratio(c)).vector();
    });
    m.def("power_kurtosis", &power_kurtosis, py::arg("c"));
    m.def(
        "kurtosis_table",
        [](int max_odd) {
            std::vector<std::pair<std::string, double>> out;
            for (const auto& row : emit_table1(max_odd)) out.emplace_back(row.c.to_string(), row.beta2);
            return out;
        },
        py::arg("max_odd") = 39);
    m.def("select_exponent", &select_exponent, py::arg("b2"), py::arg("max_odd") = 31,
          py::arg("top_n") = 5);

    // distributions
    py::class_<GaussianParams>(m, "GaussianParams")
        .def(py::init<>())
        .def(py::init([](double mu, double sigma) { return GaussianParams{mu, sigma}; }),
             py::arg("mu"), py::arg("sigma"))
        .def_readwrite("mu", &GaussianParams::mu)
        .def_readwrite("sigma", &GaussianParams::sigma);
    py::class_<PowerNormalParams>(m, "PowerNormalParams")
        .def(py::init([](double mu, double sigma, const py::object& c) {
                 return PowerNormalParams{mu, sigma, to_ratio(c)};
             }),
             py::arg("mu"), py::arg("sigma"), py::arg("normalizing"))
        .def_readwrite("mu", &PowerNormalParams::mu)
        .def_readwrite("sigma", &PowerNormalParams::sigma)
        .def_readonly("normalizing", &PowerNormalParams::normalizing)
        .def_property_readonly("model_exponent", &PowerNormalParams::model_exponent);
    py::class_<LaplaceParams>(m, "LaplaceParams")
        .def(py::init([](double mu, double b) { return LaplaceParams{mu, b}; }), py::arg("mu"),
             py::arg("b"))
        .def_readwrite("mu", &LaplaceParams::mu)
        .def_readwrite("b", &LaplaceParams::b);
    py::class_<PearsonIVParams>(m, "PearsonIVParams")
        .def(py::init(&PearsonIVParams::make), py::arg("m"), py::arg("nu"), py::arg("a"),
             py::arg("lam"))
        .def_readonly("m", &PearsonIVParams::m)
        .def_readonly("nu", &PearsonIVParams::nu)
        .def_readonly("a", &PearsonIVParams::a)
        .def_readonly("lam", &PearsonIVParams::lambda)
        .def_readonly("k", &PearsonIVParams::k_norm);
    py::class_<DistributionMoments>(m, "DistributionMoments")
        .def_readonly("mean", &DistributionMoments::mean)
        .def_readonly("sd", &DistributionMoments::sd)
        .def_readonly("skewness", &DistributionMoments::skewness)
        .def_readonly("kurtosis", &DistributionMoments::kurtosis);

    m.def("pdf", [](const FittedModel& model, double x) { return pdf(model, x); });
    m.def("cdf", [](const FittedModel& model, double x) { return cdf(model, x); });
    m.def("fit_gaussian", [](const std::vector<double>& v) { return fit_gaussian(to_sample(v)); });
    m.def("fit_power_normal", [](const std::vector<double>& v, const py::object& e) {
        return fit_power_normal(to_sample(v), to_ratio(e));
    });
    m.def(
        "fit_laplace",
        [](const std::vector<double>& v, bool fix_mu_zero) {
            return fit_laplace(to_sample(v), fix_mu_zero);
        },
        py::arg("values"), py::arg("fix_mu_zero") = false);
    m.def("fit_pearson4_mom", [](const std::vector<double>& v) {
        return fit_pearson4_mom(summary(to_sample(v)));
    });
    m.def(
        "fit_pearson4_from_moments",
        [](double mean, double sd, double skewness, double kurtosis) {
            return fit_pearson4_mom(DistributionMoments{mean, sd, skewness, kurtosis});
        },
        py::arg("mean"), py::arg("sd"), py::arg("skewness"), py::arg("kurtosis"));
    m.def("pearson4_moments", &pearson4_moments);
    m.def(
        "sample_from",
        [](const FittedModel& model, std::size_t n, std::uint64_t seed) {
            return sample_from(model, n, seed).vector();
        },
        py::arg("model"), py::arg("n"), py::arg("seed"));

    // goodness of fit
    m.def(
        "chi_square_gof",
        [](const std::vector<double>& v, const FittedModel& model, const std::vector<double>& edges,
           int n_params, std::optional<int> df) {
            const auto r = chi_square_gof(
                to_sample(v), [&model](double x) { return cdf(model, x); }, BinScheme(edges),
                n_params, df);
            return to_json(r).dump();
        },
        py::arg("values"), py::arg("model"), py::arg("edges"), py::arg("n_params"),
        py::arg("df") = py::none());
    m.def(
        "lilliefors",
        [](const std::vector<double>& v, int reps, std::uint64_t seed) {
            const auto r = lilliefors(to_sample(v), reps, seed);
            return std::make_pair(r.statistic, r.p_value);
        },
        py::arg("values"), py::arg("reps") = 10000, py::arg("seed") = 0);
    m.def("shapiro_wilk", [](const std::vector<double>& v) {
        const auto r = shapiro_wilk(to_sample(v));
        return std::make_pair(r.statistic, r.p_value);
    });
    m.def(
        "acf",
        [](const std::vector<double>& v, int max_lag) {
            const auto r = acf(to_sample(v), max_lag);
            nlohmann::json j = to_json(r);
            j["whiteness"] = to_json(whiteness_check(r));
            return j.dump();
        },
        py::arg("values"), py::arg("max_lag") = 20);
    m.def(
        "thin_pairs",
        [](const std::vector<double>& v, bool keep_even) {
            return thin_pairs(to_sample(v), keep_even ? ThinKeep::Even : ThinKeep::Odd).vector();
        },
        py::arg("values"), py::arg("keep_even") = false);

    // pipeline
    m.def(
        "analyze",
        [](const std::vector<double>& v, const std::string& preset, std::optional<double> alpha,
           std::optional<std::uint64_t> seed, std::optional<std::string> thin,
           std::optional<int> reps) {
            if (preset != "default" && preset != "paper2011")
                throw InvalidInputError("unknown preset '" + preset + "'");
            AnalysisConfig cfg = preset == "paper2011" ? AnalysisConfig::paper2011() : AnalysisConfig{};
            if (alpha) cfg.alpha = *alpha;
            if (seed) cfg.seed = *seed;
            if (thin) cfg.thin = parse_thin(*thin);
            if (reps) cfg.lilliefors_reps = *reps;
            return to_json(analyze(to_sample(v), cfg)).dump();
        },
        py::arg("values"), py::arg("preset") = "default", py::arg("alpha") = py::none(),
        py::arg("seed") = py::none(), py::arg("thin") = py::none(), py::arg("reps") = py::none());
    m.def(
        "run_study",
        [](const std::string& source, int n_samples, int sample_size, double alpha,
           std::uint64_t seed, int reps) {
            StudyConfig cfg;
            cfg.source = source == "gaussian" ? StudySource::Gaussian : StudySource::Laplace;
            cfg.n_samples = n_samples;
            cfg.sample_size = sample_size;
            cfg.alpha = alpha;
            cfg.seed = seed;
            cfg.lilliefors_reps = reps;
            return to_json(run_study(cfg)).dump();
        },
        py::arg("source") = "laplace", py::arg("n_samples") = 100, py::arg("sample_size") = 100,
        py::arg("alpha") = 0.05, py::arg("seed") = 1, py::arg("reps") = 10000);
}
