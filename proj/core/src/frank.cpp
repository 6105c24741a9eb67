#include <algorithm>
#include <cmath>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/rng.hpp"

namespace arelab {

namespace {

constexpr double kTaylorSwitch = 1e-6;

// Taylor coefficients of the Frank copula in theta around 0:
//   C = uv + th c1 + th^2 c2 + th^3 c3 + O(th^4)
double frank_c1(double u, double v) { return 0.5 * u * v * (1.0 - u) * (1.0 - v); }
double frank_c2(double u, double v) {
    return u * v * (u - 1.0) * (2.0 * u - 1.0) * (v - 1.0) * (2.0 * v - 1.0) / 12.0;
}
double frank_c3(double u, double v) {
    const double qu = u * u - u;
    const double qv = v * v - v;
    return u * v * (u - 1.0) * (v - 1.0) * ((6.0 * v * v - 6.0 * v + 1.0) * qu + qv) / 24.0;
}

}  // namespace

double frank_cdf(double theta, double u, double v) {
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    if (std::abs(theta) < kTaylorSwitch) {
        // 4-term expansion; cancellation-free near theta = 0.
        return u * v +
               theta * (frank_c1(u, v) +
                        theta * (frank_c2(u, v) + theta * frank_c3(u, v)));
    }
    // -expm1(-theta u) = 1 - e^{-theta u}, accurate for every theta.
    const double a = -std::expm1(-theta * u);
    const double b = -std::expm1(-theta * v);
    const double d = -std::expm1(-theta);
    return -std::log1p(-a * b / d) / theta;
}

FrankModel::FrankModel()
    : DependenceModel("frank", Interval{-1e308, 1e308}, quad::Rect{0.0, 1.0, 0.0, 1.0},
                      MarginalKind::UniformOnSupport) {}

double FrankModel::cdf_impl(double theta, double u, double v) const {
    return frank_cdf(theta, u, v);
}

double FrankModel::pdf(double theta, double u, double v) const {
    if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return 0.0;
    if (std::abs(theta) < kTaylorSwitch) {
        // d2/dudv of the expansion.
        const double d1 = 0.5 * (1.0 - 2.0 * u) * (1.0 - 2.0 * v);
        const double d2 =
            (6.0 * u * u - 6.0 * u + 1.0) * (6.0 * v * v - 6.0 * v + 1.0) / 12.0;
        return 1.0 + theta * (d1 + theta * d2);
    }
    const double d = -std::expm1(-theta);
    const double a = -std::expm1(-theta * u);
    const double b = -std::expm1(-theta * v);
    const double denom = d - a * b;
    return theta * d * std::exp(-theta * (u + v)) / (denom * denom);
}

double FrankModel::conditional_cdf(double theta, double u, double v) const {
    if (std::abs(theta) < kTaylorSwitch) {
        const double d1 = 0.5 * (1.0 - 2.0 * u) * v * (1.0 - v);
        return std::clamp(v + theta * d1, 0.0, 1.0);
    }
    const double d = -std::expm1(-theta);
    const double a = -std::expm1(-theta * u);
    const double b = -std::expm1(-theta * v);
    return std::clamp(std::exp(-theta * u) * b / (d - a * b), 0.0, 1.0);
}

void FrankModel::sample_impl(double theta, int n, Rng& rng, PairedSample& out) const {
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform_open();
        const double q = rng.uniform_open();
        const double v = invert_monotone(
            [&](double vv) { return conditional_cdf(theta, u, vv); },
            [&](double vv) { return pdf(theta, u, vv); }, q, 0.0, 1.0);
        out.x.push_back(u);
        out.y.push_back(v);
    }
}

std::shared_ptr<const DependenceModel> make_frank() { return std::make_shared<FrankModel>(); }

}  // namespace arelab
