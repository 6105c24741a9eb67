#include <algorithm>
#include <cmath>
#include <utility>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/rng.hpp"

namespace arelab {

double invert_monotone(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double q, double lo,
                       double hi) {
    double flo = f(lo) - q;
    double fhi = f(hi) - q;
    if (flo > 0.0) return lo;
    if (fhi < 0.0) return hi;
    double v = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        if (hi - lo < 1e-12) break;
        double fv = f(v) - q;
        if (fv == 0.0) return v;
        (fv < 0.0 ? lo : hi) = v;
        double next = 0.0;
        bool newton_ok = false;
        if (df) {
            double d = df(v);
            if (d > 0.0) {
                next = v - fv / d;
                newton_ok = next > lo && next < hi;
            }
        }
        v = newton_ok ? next : 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

namespace {

constexpr double kFdStep = 1e-6;

LinearModel::Surface fd_du(LinearModel::Surface d) {
    return [d = std::move(d)](double u, double v) {
        const double lo = std::max(u - kFdStep, 0.0), hi = std::min(u + kFdStep, 1.0);
        return (d(hi, v) - d(lo, v)) / (hi - lo);
    };
}

LinearModel::Surface fd_dudv(LinearModel::Surface d) {
    return [d = std::move(d)](double u, double v) {
        const double ulo = std::max(u - kFdStep, 0.0), uhi = std::min(u + kFdStep, 1.0);
        const double vlo = std::max(v - kFdStep, 0.0), vhi = std::min(v + kFdStep, 1.0);
        return (d(uhi, vhi) - d(uhi, vlo) - d(ulo, vhi) + d(ulo, vlo)) /
               ((uhi - ulo) * (vhi - vlo));
    };
}

Interval estimate_linear_domain(const LinearModel::Surface& delta_dudv) {
    // 1 + theta * d2Delta must stay nonnegative; scan the mixed derivative on
    // a grid.  No sharpness claimed.
    double max_pos = 0.0, max_neg = 0.0;
    const int n = 201;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double d = delta_dudv(static_cast<double>(i) / n, static_cast<double>(j) / n);
            max_pos = std::max(max_pos, d);
            max_neg = std::max(max_neg, -d);
        }
    double hi = max_neg > 0.0 ? 1.0 / max_neg : 1e300;
    double lo = max_pos > 0.0 ? -1.0 / max_pos : -1e300;
    return Interval{lo, hi};
}

}  // namespace

LinearModel::LinearModel(std::string name, Surface delta, Surface delta_du,
                         Surface delta_dudv, Interval theta_domain)
    : DependenceModel(std::move(name), theta_domain, quad::Rect{0.0, 1.0, 0.0, 1.0},
                      MarginalKind::UniformOnSupport),
      delta_(std::move(delta)),
      delta_du_(std::move(delta_du)),
      delta_dudv_(std::move(delta_dudv)) {}

LinearModel::LinearModel(std::string name, Surface delta)
    : LinearModel(std::move(name), delta, fd_du(delta), fd_dudv(delta),
                  estimate_linear_domain(fd_dudv(delta))) {}

double LinearModel::cdf_impl(double theta, double u, double v) const {
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    return u * v + theta * delta_(u, v);
}

double LinearModel::pdf(double theta, double u, double v) const {
    if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return 0.0;
    return 1.0 + theta * delta_dudv_(u, v);
}

double LinearModel::conditional_cdf(double theta, double u, double v) const {
    return std::clamp(v + theta * delta_du_(u, v), 0.0, 1.0);
}

void LinearModel::sample_impl(double theta, int n, Rng& rng, PairedSample& out) const {
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

std::shared_ptr<const DependenceModel> make_fgm() {
    auto delta = [](double u, double v) { return u * v * (1.0 - u) * (1.0 - v); };
    auto delta_du = [](double u, double v) { return (1.0 - 2.0 * u) * v * (1.0 - v); };
    auto delta_dudv = [](double u, double v) { return (1.0 - 2.0 * u) * (1.0 - 2.0 * v); };
    return std::make_shared<LinearModel>("fgm", delta, delta_du, delta_dudv,
                                         Interval{-1.0, 1.0});
}

}  // namespace arelab
