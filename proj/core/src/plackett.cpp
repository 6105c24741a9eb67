#include <algorithm>
#include <cmath>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/rng.hpp"

namespace arelab {

double plackett_cdf(double theta, double u, double v) {
    if (!(theta > -1.0)) throw DomainError("plackett_cdf requires theta > -1");
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    const double disc =
        1.0 + 2.0 * theta * (u + v - 2.0 * u * v) + theta * theta * (u - v) * (u - v);
    return 2.0 * (theta + 1.0) * u * v / (1.0 + theta * (u + v) + std::sqrt(disc));
}

PlackettModel::PlackettModel()
    : DependenceModel("plackett", Interval{-1.0, 1e308}, quad::Rect{0.0, 1.0, 0.0, 1.0},
                      MarginalKind::UniformOnSupport) {}

double PlackettModel::cdf_impl(double theta, double u, double v) const {
    return plackett_cdf(theta, u, v);
}

double PlackettModel::pdf(double theta, double u, double v) const {
    if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return 0.0;
    const double disc =
        1.0 + 2.0 * theta * (u + v - 2.0 * u * v) + theta * theta * (u - v) * (u - v);
    return (1.0 + theta) * (1.0 + theta * (u + v - 2.0 * u * v)) / std::pow(disc, 1.5);
}

double PlackettModel::conditional_cdf(double theta, double u, double v) const {
    // dF/du from the implicit equation F - uv = theta (u - F)(v - F).
    const double F = plackett_cdf(theta, u, v);
    return std::clamp((v + theta * (v - F)) / (1.0 + theta * (u - F) + theta * (v - F)),
                      0.0, 1.0);
}

void PlackettModel::sample_impl(double theta, int n, Rng& rng, PairedSample& out) const {
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

std::shared_ptr<const DependenceModel> make_plackett() {
    return std::make_shared<PlackettModel>();
}

}  // namespace arelab
