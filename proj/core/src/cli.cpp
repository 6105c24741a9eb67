#include "arelab/cli.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "arelab/are.hpp"
#include "arelab/checks.hpp"
#include "arelab/errors.hpp"
#include "arelab/io.hpp"
#include "arelab/models.hpp"
#include "arelab/normal.hpp"
#include "arelab/power.hpp"
#include "arelab/rank_stats.hpp"

namespace arelab::cli {

namespace {

using nlohmann::json;

json value_or_inf(double v) {
    if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
    return json(v);
}

MicdVariant micd_variant_of(const std::string& model_name) {
    if (model_name == "micd-as") return MicdVariant::AS;
    if (model_name == "micd-al") return MicdVariant::AL;
    if (model_name == "micd-os") return MicdVariant::OS;
    if (model_name == "micd-ol") return MicdVariant::OL;
    throw ConfigError("closed-form method is only available for micd-* models, got '" +
                      model_name + "'");
}

json are_result_json(const AreResult& r) {
    json diag{{"mu_t_prime", r.diagnostics.mu_t_prime},
              {"mu_s_prime", r.diagnostics.mu_s_prime},
              {"sigma2_t", r.diagnostics.sigma2_t},
              {"sigma2_s", r.diagnostics.sigma2_s},
              {"fd_step", r.diagnostics.fd_step},
              {"richardson_residual", r.diagnostics.richardson_residual}};
    return json{{"model", r.model},
                {"theta0", r.theta0},
                {"side", std::string(side_name(r.side))},
                {"value", value_or_inf(r.value)},
                {"method", std::string(are_method_name(r.method))},
                {"diagnostics", diag}};
}

double curve_value(const DependenceModel& model, const std::string& method, double theta) {
    if (method == "closed-form" || method == "closed")
        return are_closed_micd(micd_variant_of(model.name()), theta);
    if (method == "numeric") return are_numeric(model, theta).value;
    throw ConfigError("unknown method '" + method + "' (closed-form|numeric)");
}

}  // namespace

int run_stat(const StatConfig& cfg, std::ostream& out) {
    const auto sample = read_xy_csv_file(cfg.input);
    if (sample.size() < 3) throw SizeError("stat requires at least 3 rows");
    const int n = static_cast<int>(sample.size());
    const double t = kendall_t(sample);
    const double s = spearman_s(sample);
    // Null z-statistics use the exact theta = 0 constants sigma_T^2 = 4/9,
    // sigma_S^2 = 1.
    const double z_t = t * std::sqrt(static_cast<double>(n)) / (2.0 / 3.0);
    const double z_s = s * std::sqrt(static_cast<double>(n));
    json rep{{"n", n},
             {"t", t},
             {"s", s},
             {"z_t", z_t},
             {"z_s", z_s},
             {"p_t", 1.0 - normal_cdf(z_t)},
             {"p_s", 1.0 - normal_cdf(z_s)}};
    out << rep.dump(2) << '\n';
    return 0;
}

int run_are(const AreConfig& cfg, std::ostream& out) {
    const auto& model = find_model(cfg.model);
    const Side side = side_from_string(cfg.side);
    AreResult result;
    if (cfg.method == "closed-form" || cfg.method == "closed") {
        result.model = model.name();
        result.theta0 = cfg.theta0;
        result.side = side;
        result.value = are_closed_micd(micd_variant_of(model.name()), cfg.theta0);
        result.method = AreMethod::ClosedForm;
    } else if (cfg.method == "numeric") {
        result = are_numeric(model, cfg.theta0, side);
    } else {
        throw ConfigError("unknown method '" + cfg.method + "' (closed-form|numeric)");
    }
    out << are_result_json(result).dump(2) << '\n';
    return 0;
}

int run_curve(const CurveConfig& cfg, std::ostream& out) {
    const auto& model = find_model(cfg.model);
    if (cfg.steps < 1) throw ConfigError("steps must be >= 1");
    if (cfg.steps == 1 && cfg.from != cfg.to)
        throw ConfigError("steps=1 requires from == to");
    if (cfg.steps > 1 && !(cfg.from < cfg.to))
        throw ConfigError("grid must be strictly increasing (from < to)");
    std::vector<CurvePoint> points;
    for (int i = 0; i < cfg.steps; ++i) {
        const double theta =
            cfg.steps == 1
                ? cfg.from
                : cfg.from + (cfg.to - cfg.from) * i / static_cast<double>(cfg.steps - 1);
        points.push_back({theta, curve_value(model, cfg.method, theta)});
    }
    write_curve_csv_file(cfg.out, points);
    out << "wrote " << points.size() << " rows to " << cfg.out << '\n';
    return 0;
}

int run_sample(const SampleConfig& cfg, std::ostream& out) {
    const auto& model = find_model(cfg.model);
    if (cfg.n < 1) throw ConfigError("n must be positive");
    const auto sample = model.sample(cfg.theta, cfg.n, cfg.seed);
    write_xy_csv_file(cfg.out, sample);
    out << "wrote " << sample.size() << " rows to " << cfg.out << '\n';
    return 0;
}

int run_power(const PowerConfig& cfg, std::ostream& out) {
    PowerExperiment exp{cfg.model, cfg.theta0, cfg.theta, cfg.alpha, cfg.beta, cfg.reps,
                        cfg.seed};
    exp.validate();
    const auto result = efficiency_ratio(exp);
    auto stat_json = [](const RequiredN& r, const PowerEstimate& size) {
        return json{{"n_required", r.n},
                    {"achieved_power", r.achieved_power},
                    {"power_se", r.power_se},
                    {"n_se", r.n_se},
                    {"analytic_start", r.analytic_start},
                    {"size", size.power},
                    {"size_se", size.std_error}};
    };
    json rep{{"model", cfg.model},
             {"theta0", cfg.theta0},
             {"theta", cfg.theta},
             {"alpha", cfg.alpha},
             {"beta", cfg.beta},
             {"replications", cfg.reps},
             {"seed", cfg.seed},
             {"t", stat_json(result.t, result.size_t_test)},
             {"s", stat_json(result.s, result.size_s_test)},
             {"ratio", result.ratio},
             {"ratio_se", result.ratio_se}};
    out << rep.dump(2) << '\n';
    return 0;
}

int run_check(const CheckConfig& cfg, std::ostream& out) {
    const auto report = run_check_suite(cfg.suite);
    print_report(report, out);
    return report.all_pass() ? 0 : 1;
}

}  // namespace arelab::cli
