#include <cmath>
#include <numbers>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/rng.hpp"

namespace arelab {

namespace {
// Phi(-8.5) ~ 1e-18: truncating the plane here loses nothing at double
// precision while keeping the quadrature domain finite.
constexpr double kBvnCut = 8.5;
}  // namespace

BvnModel::BvnModel()
    : DependenceModel("bvn", Interval{-1.0, 1.0},
                      quad::Rect{-kBvnCut, kBvnCut, -kBvnCut, kBvnCut},
                      MarginalKind::StdNormal) {}

double BvnModel::cdf_impl(double theta, double x, double y) const {
    return bvn_cdf(theta, x, y);
}

double BvnModel::pdf(double theta, double x, double y) const {
    const double s2 = 1.0 - theta * theta;
    return std::exp(-(x * x - 2.0 * theta * x * y + y * y) / (2.0 * s2)) /
           (2.0 * std::numbers::pi * std::sqrt(s2));
}

void BvnModel::sample_impl(double theta, int n, Rng& rng, PairedSample& out) const {
    // Cholesky factor of the 2x2 correlation matrix.
    const double s = std::sqrt(1.0 - theta * theta);
    for (int i = 0; i < n; ++i) {
        const double z1 = normal_quantile(rng.uniform_open());
        const double z2 = normal_quantile(rng.uniform_open());
        out.x.push_back(z1);
        out.y.push_back(theta * z1 + s * z2);
    }
}

std::shared_ptr<const DependenceModel> make_bvn() { return std::make_shared<BvnModel>(); }

}  // namespace arelab
