#include "arelab/normal.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numbers>

#include "arelab/errors.hpp"
#include "arelab/quadrature.hpp"

namespace arelab {

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2_v<double> / 2.0); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile requires p in (0,1)");
    static const boost::math::normal_distribution<double> dist;
    return boost::math::quantile(dist, p);
}

double z_alpha(double alpha) { return normal_quantile(1.0 - alpha); }

double bvn_cdf(double rho, double x, double y) {
    if (!(std::abs(rho) < 1.0)) throw DomainError("bvn_cdf requires |rho| < 1");
    const double base = normal_cdf(x) * normal_cdf(y);
    if (rho == 0.0) return base;
    const double upper = std::asin(rho);
    const auto& rule = quad::gauss_legendre(64);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * upper * (rule.nodes[i] + 1.0);
        const double c = std::cos(t);
        sum += rule.weights[i] * std::exp(-(x * x + y * y - 2.0 * x * y * std::sin(t)) / (2.0 * c * c));
    }
    const double integral = 0.5 * upper * sum / (2.0 * std::numbers::pi);
    double v = base + integral;
    if (v < 0.0 && v > -1e-14) v = 0.0;
    if (v > 1.0 && v < 1.0 + 1e-14) v = 1.0;
    return v;
}

}  // namespace arelab
