#include "arelab/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "arelab/errors.hpp"
#include "arelab/normal.hpp"
#include "arelab/rng.hpp"

namespace arelab {

void DependenceModel::require_theta(double theta) const {
    if (!std::isfinite(theta) || !theta_domain_.contains(theta))
        throw DomainError(name_ + ": theta " + std::to_string(theta) +
                          " outside the parameter domain");
}

double DependenceModel::marginal_x(double x) const {
    if (marginals_ == MarginalKind::StdNormal) return normal_cdf(x);
    if (x <= support_.x_lo) return 0.0;
    if (x >= support_.x_hi) return 1.0;
    return (x - support_.x_lo) / (support_.x_hi - support_.x_lo);
}

double DependenceModel::marginal_y(double y) const {
    if (marginals_ == MarginalKind::StdNormal) return normal_cdf(y);
    if (y <= support_.y_lo) return 0.0;
    if (y >= support_.y_hi) return 1.0;
    return (y - support_.y_lo) / (support_.y_hi - support_.y_lo);
}

double DependenceModel::marginal_density_x(double x) const {
    if (marginals_ == MarginalKind::StdNormal) return normal_pdf(x);
    if (x < support_.x_lo || x > support_.x_hi) return 0.0;
    return 1.0 / (support_.x_hi - support_.x_lo);
}

double DependenceModel::marginal_density_y(double y) const {
    if (marginals_ == MarginalKind::StdNormal) return normal_pdf(y);
    if (y < support_.y_lo || y > support_.y_hi) return 0.0;
    return 1.0 / (support_.y_hi - support_.y_lo);
}

quad::QuadResult DependenceModel::expectation_impl(double theta, const quad::Integrand2D& g,
                                                   int order) const {
    // Quadrature fallback: integrate g against the absolutely continuous
    // density over the support rectangle.
    quad::Integrand2D weighted = g;
    weighted.f = [this, theta, &g](double x, double y) {
        return g.f(x, y) * pdf(theta, x, y);
    };
    const quad::WeightedRect region[] = {{support_, 1.0}};
    return quad::integrate_2d(weighted, region, order > 0 ? order : quad::default_order());
}

PairedSample DependenceModel::sample(double theta, int n, std::uint64_t seed) const {
    require_theta(theta);
    if (n < 1) throw SizeError("sample size must be positive");
    Rng rng(seed);
    PairedSample out;
    out.theta_used = theta;
    out.seed = seed;
    out.x.reserve(static_cast<std::size_t>(n));
    out.y.reserve(static_cast<std::size_t>(n));

    // Draw point by point so a prefix of a longer run equals a shorter run
    // (common random numbers in the power search rely on this).  A draw that
    // collides with an existing coordinate is retried.
    std::unordered_set<double> seen_x, seen_y;
    PairedSample one;
    int guard = 0;
    while (out.x.size() < static_cast<std::size_t>(n)) {
        one.x.clear();
        one.y.clear();
        sample_impl(theta, 1, rng, one);
        const double x = one.x.back(), y = one.y.back();
        if (seen_x.count(x) || seen_y.count(y)) {
            if (++guard > 100 * n + 1000)
                throw NumericError(name_ + ": sampler could not avoid ties");
            continue;
        }
        seen_x.insert(x);
        seen_y.insert(y);
        out.x.push_back(x);
        out.y.push_back(y);
    }
    return out;
}

double association(const DependenceModel& model, double theta, double x, double y) {
    return model.cdf(theta, x, y) - model.marginal_x(x) * model.marginal_y(y);
}

namespace {

double variation_grid(const DependenceModel& model, double theta, int res) {
    // Midpoint rule of |f_theta - f_0| over the support; f_0 is the product
    // of the marginal densities.
    const auto& s = model.support();
    const double hx = (s.x_hi - s.x_lo) / res;
    const double hy = (s.y_hi - s.y_lo) / res;
    double sum = 0.0;
    for (int i = 0; i < res; ++i) {
        const double x = s.x_lo + (i + 0.5) * hx;
        const double fx = model.marginal_density_x(x);
        for (int j = 0; j < res; ++j) {
            const double y = s.y_lo + (j + 0.5) * hy;
            sum += std::abs(model.pdf(theta, x, y) - fx * model.marginal_density_y(y));
        }
    }
    return sum * hx * hy;
}

}  // namespace

DistanceResult variation_distance(const DependenceModel& model, double theta, int resolution) {
    model.require_theta(theta);
    if (resolution < 2) throw ConfigError("variation_distance resolution must be >= 2");
    if (auto exact = model.variation_exact(theta)) return {*exact, true, 0.0};
    if (theta == 0.0) return {0.0, true, 0.0};
    double coarse = variation_grid(model, theta, resolution);
    double fine = variation_grid(model, theta, 2 * resolution);
    double est = std::abs(fine - coarse);
    if (est > 0.05 * std::max(fine, 1e-6)) {
        double finer = variation_grid(model, theta, 4 * resolution);
        double est2 = std::abs(finer - fine);
        if (est2 > 0.05 * std::max(finer, 1e-6))
            throw ConvergenceError("variation_distance grid did not converge", finer, est2);
        return {finer, false, est2};
    }
    return {fine, false, est};
}

double kolmogorov_distance(const DependenceModel& model, double theta, int resolution) {
    model.require_theta(theta);
    if (resolution < 1) throw ConfigError("kolmogorov_distance resolution must be >= 1");
    const auto& s = model.support();
    double sup = 0.0;
    for (int i = 0; i <= resolution; ++i) {
        const double x = s.x_lo + (s.x_hi - s.x_lo) * i / resolution;
        const double gx = model.marginal_x(x);
        for (int j = 0; j <= resolution; ++j) {
            const double y = s.y_lo + (s.y_hi - s.y_lo) * j / resolution;
            sup = std::max(sup, std::abs(model.cdf(theta, x, y) - gx * model.marginal_y(y)));
        }
    }
    return sup;
}

}  // namespace arelab
