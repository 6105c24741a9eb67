#include "arelab/power.hpp"

#include <algorithm>
#include <cmath>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/normal.hpp"
#include "arelab/rank_stats.hpp"
#include "arelab/rng.hpp"

namespace arelab {

void PowerExperiment::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
    if (!(beta > 0.0 && beta < 1.0 - alpha))
        throw ConfigError("beta must be in (0, 1-alpha): alpha+beta < 1 is required");
    if (replications < 1) throw ConfigError("replications must be positive");
}

double z_statistic(double value, const AsymptoticMoments& moments, Statistic which, int n) {
    if (n < 1) throw SizeError("z_statistic requires n >= 1");
    const double mu = which == Statistic::KendallT ? moments.mu_t : moments.mu_s;
    const double s2 = which == Statistic::KendallT ? moments.sigma2_t : moments.sigma2_s;
    if (!(s2 > 0.0)) throw DegeneracyError("z_statistic requires positive variance");
    return (value - mu) / (std::sqrt(s2) / std::sqrt(static_cast<double>(n)));
}

namespace {

constexpr int kSearchCap = 10'000'000;

PowerEstimate power_at(const DependenceModel& model, const PowerExperiment& exp,
                       const AsymptoticMoments& null_moments, Statistic which,
                       double theta_sample, int n) {
    if (n < 3) throw SizeError("power estimation requires n >= 3");
    const double za = z_alpha(exp.alpha);
    int rejections = 0;
    for (int r = 0; r < exp.replications; ++r) {
        const auto sample = model.sample(theta_sample, n, derive_seed(exp.seed, r));
        const double stat =
            which == Statistic::KendallT ? kendall_t(sample) : spearman_s(sample);
        if (z_statistic(stat, null_moments, which, n) > za) ++rejections;
    }
    const double p = static_cast<double>(rejections) / exp.replications;
    return {p, std::sqrt(p * (1.0 - p) / exp.replications), n, exp.replications};
}

double mu_of(const DependenceModel& model, Statistic which, double theta) {
    return which == Statistic::KendallT ? mu_t(model, theta) : mu_s(model, theta);
}

}  // namespace

PowerEstimate estimate_power(const PowerExperiment& experiment, Statistic which, int n) {
    experiment.validate();
    const auto& model = find_model(experiment.model);
    const auto null_moments = asymptotic_moments(model, experiment.theta0);
    return power_at(model, experiment, null_moments, which, experiment.theta_alt, n);
}

RequiredN required_n(const PowerExperiment& experiment, Statistic which,
                     double power_tolerance) {
    experiment.validate();
    const auto& model = find_model(experiment.model);
    const auto null_moments = asymptotic_moments(model, experiment.theta0);

    const double mu_null =
        which == Statistic::KendallT ? null_moments.mu_t : null_moments.mu_s;
    const double s2 = which == Statistic::KendallT ? null_moments.sigma2_t
                                                   : null_moments.sigma2_s;
    const double delta_mu = mu_of(model, which, experiment.theta_alt) - mu_null;
    if (std::abs(delta_mu) < 1e-12)
        throw NumericError("required_n: mu(theta_alt) equals mu(theta0)");
    if (delta_mu < 0.0)
        throw NumericError("required_n: right-side test has vanishing power (mu decreases)");

    const double zsum = z_alpha(experiment.alpha) + z_alpha(experiment.beta);
    const double analytic = std::pow(zsum * std::sqrt(s2) / delta_mu, 2.0);
    int n0 = std::max(8, static_cast<int>(std::ceil(analytic)));
    const double target = 1.0 - experiment.beta - power_tolerance;

    auto power = [&](int n) {
        return power_at(model, experiment, null_moments, which, experiment.theta_alt, n);
    };

    // Geometric bracketing from the plug-in start.
    int lo = 0, hi = 0;
    PowerEstimate p_lo{}, p_hi{};
    PowerEstimate p0 = power(n0);
    if (p0.power >= target) {
        hi = n0;
        p_hi = p0;
        int cand = n0;
        while (hi > 8) {
            cand = std::max(8, cand / 2);
            PowerEstimate pc = power(cand);
            if (pc.power >= target) {
                hi = cand;
                p_hi = pc;
                if (cand == 8) break;
            } else {
                lo = cand;
                p_lo = pc;
                break;
            }
        }
    } else {
        lo = n0;
        p_lo = p0;
        int cand = n0;
        while (true) {
            cand *= 2;
            if (cand > kSearchCap)
                throw NumericError("required_n: search cap of 1e7 exceeded");
            PowerEstimate pc = power(cand);
            if (pc.power >= target) {
                hi = cand;
                p_hi = pc;
                break;
            }
            lo = cand;
            p_lo = pc;
        }
    }

    // Bisection to ~2% relative granularity.
    while (lo > 0 && hi - lo > std::max(1, hi / 50)) {
        const int mid = lo + (hi - lo) / 2;
        PowerEstimate pm = power(mid);
        if (pm.power >= target) {
            hi = mid;
            p_hi = pm;
        } else {
            lo = mid;
            p_lo = pm;
        }
    }

    RequiredN out;
    out.n = hi;
    out.achieved_power = p_hi.power;
    out.power_se = p_hi.std_error;
    out.analytic_start = n0;
    double slope = 0.0;
    if (lo > 0 && hi > lo) slope = (p_hi.power - p_lo.power) / static_cast<double>(hi - lo);
    out.n_se = slope > 1e-12 ? p_hi.std_error / slope : 0.0;
    return out;
}

EfficiencyResult efficiency_ratio(const PowerExperiment& experiment) {
    experiment.validate();
    EfficiencyResult out;
    out.t = required_n(experiment, Statistic::KendallT);
    out.s = required_n(experiment, Statistic::SpearmanS);
    out.ratio = static_cast<double>(out.s.n) / static_cast<double>(out.t.n);
    const double rel_t = out.t.n_se / out.t.n;
    const double rel_s = out.s.n_se / out.s.n;
    out.ratio_se = out.ratio * std::sqrt(rel_t * rel_t + rel_s * rel_s);

    PowerExperiment null_run = experiment;
    null_run.theta_alt = experiment.theta0;
    out.size_t_test = estimate_power(null_run, Statistic::KendallT, out.t.n);
    out.size_s_test = estimate_power(null_run, Statistic::SpearmanS, out.s.n);
    return out;
}

}  // namespace arelab
