#include "arelab/asymptotics.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "arelab/errors.hpp"

namespace arelab {

namespace {

constexpr double kVarianceFloor = 1e-12;

double clamp_to_unit(double v) {
    // The functionals are means of statistics bounded by 1; shave quadrature
    // overshoot but leave genuine violations visible.
    if (v > 1.0 && v < 1.0 + 1e-9) return 1.0;
    if (v < -1.0 && v > -1.0 - 1e-9) return -1.0;
    return v;
}

quad::Integrand2D cdf_integrand(const DependenceModel& model, double theta, quad::Fn2 f) {
    auto breaks = model.cdf_axis_breaks(theta);
    return quad::Integrand2D{std::move(f), breaks, breaks, model.cdf_diag_kink(theta)};
}

struct ValueCache {
    std::unordered_map<std::uint64_t, double> map;

    template <typename F>
    double get(double key, F&& compute) {
        const auto bits = std::bit_cast<std::uint64_t>(key);
        auto it = map.find(bits);
        if (it != map.end()) return it->second;
        double v = compute();
        map.emplace(bits, v);
        return v;
    }
};

// int F_theta(x, y) dH(y) as a function of x (and the transpose), evaluated
// by 1-D quadrature against the marginal density with the model's
// breakpoints (plus the diagonal-kink abscissa) inserted.
class InnerIntegrals {
public:
    InnerIntegrals(const DependenceModel& model, double theta, int order)
        : model_(model), theta_(theta) {
        order_ = order > 0 ? order : (model.has_exact_decomposition() ? 48 : 96);
        breaks_ = model.cdf_axis_breaks(theta);
        kink_ = model.cdf_diag_kink(theta);
    }

    double over_y(double x) {
        return x_cache_.get(x, [&] {
            auto cuts = breaks_;
            if (kink_ == quad::DiagKink::Main) cuts.push_back(x);
            if (kink_ == quad::DiagKink::Anti) cuts.push_back(-x);
            const auto& s = model_.support();
            return quad::integrate_1d(
                [&](double y) { return model_.cdf(theta_, x, y) * model_.marginal_density_y(y); },
                s.y_lo, s.y_hi, cuts, order_);
        });
    }

    double over_x(double y) {
        return y_cache_.get(y, [&] {
            auto cuts = breaks_;
            if (kink_ == quad::DiagKink::Main) cuts.push_back(y);
            if (kink_ == quad::DiagKink::Anti) cuts.push_back(-y);
            const auto& s = model_.support();
            return quad::integrate_1d(
                [&](double x) { return model_.cdf(theta_, x, y) * model_.marginal_density_x(x); },
                s.x_lo, s.x_hi, cuts, order_);
        });
    }

private:
    const DependenceModel& model_;
    double theta_;
    int order_;
    std::vector<double> breaks_;
    quad::DiagKink kink_;
    ValueCache x_cache_, y_cache_;
};

// Centered two-pass variance of an integrand under F_theta.
quad::QuadResult variance_of(const DependenceModel& model, double theta,
                             const quad::Integrand2D& g, int order) {
    auto mean = model.expectation_detailed(theta, g, order);
    quad::Integrand2D centered = g;
    const double m = mean.value;
    centered.f = [m, &g](double x, double y) {
        const double d = g.f(x, y) - m;
        return d * d;
    };
    auto var = model.expectation_detailed(theta, centered, order);
    return {var.value, var.est_error + 2.0 * std::abs(m) * mean.est_error};
}

quad::QuadResult mu_t_detailed(const DependenceModel& model, double theta, int order) {
    auto g = cdf_integrand(model, theta,
                           [&model, theta](double x, double y) { return model.cdf(theta, x, y); });
    auto e = model.expectation_detailed(theta, g, order);
    return {clamp_to_unit(4.0 * e.value - 1.0), 4.0 * e.est_error};
}

quad::QuadResult mu_s_detailed(const DependenceModel& model, double theta, int order) {
    quad::Integrand2D g{[&model](double x, double y) {
                            return model.marginal_x(x) * model.marginal_y(y);
                        },
                        {}, {}, quad::DiagKink::None};
    auto e = model.expectation_detailed(theta, g, order);
    return {clamp_to_unit(12.0 * e.value - 3.0), 12.0 * e.est_error};
}

quad::QuadResult sigma2_t_detailed(const DependenceModel& model, double theta, int order) {
    auto g = cdf_integrand(model, theta, [&model, theta](double x, double y) {
        return 2.0 * model.cdf(theta, x, y) - model.marginal_x(x) - model.marginal_y(y);
    });
    auto var = variance_of(model, theta, g, order);
    if (var.value < kVarianceFloor)
        throw DegeneracyError(model.name() + ": sigma2_t degenerate at theta=" +
                              std::to_string(theta));
    return {16.0 * var.value, 16.0 * var.est_error};
}

quad::QuadResult sigma2_s_detailed(const DependenceModel& model, double theta, int order) {
    auto inner = std::make_shared<InnerIntegrals>(model, theta, order);
    auto breaks = model.cdf_axis_breaks(theta);
    quad::Integrand2D g{[&model, inner](double x, double y) {
                            return (1.0 - model.marginal_x(x)) * (1.0 - model.marginal_y(y)) +
                                   inner->over_y(x) + inner->over_x(y);
                        },
                        breaks, breaks, quad::DiagKink::None};
    auto var = variance_of(model, theta, g, order);
    if (var.value < kVarianceFloor)
        throw DegeneracyError(model.name() + ": sigma2_s degenerate at theta=" +
                              std::to_string(theta));
    return {144.0 * var.value, 144.0 * var.est_error};
}

}  // namespace

double mu_t(const DependenceModel& model, double theta, int order) {
    return mu_t_detailed(model, theta, order).value;
}

double mu_s(const DependenceModel& model, double theta, int order) {
    return mu_s_detailed(model, theta, order).value;
}

double sigma2_t(const DependenceModel& model, double theta, int order) {
    return sigma2_t_detailed(model, theta, order).value;
}

double sigma2_s(const DependenceModel& model, double theta, int order) {
    return sigma2_s_detailed(model, theta, order).value;
}

AsymptoticMoments asymptotic_moments(const DependenceModel& model, double theta) {
    AsymptoticMoments m;
    m.theta = theta;
    auto mt = mu_t_detailed(model, theta, 0);
    auto ms = mu_s_detailed(model, theta, 0);
    auto st = sigma2_t_detailed(model, theta, 0);
    auto ss = sigma2_s_detailed(model, theta, 0);
    m.mu_t = mt.value;
    m.mu_s = ms.value;
    m.sigma2_t = st.value;
    m.sigma2_s = ss.value;
    m.method = model.has_exact_decomposition() ? MomentMethod::ExactDecomposition
                                               : MomentMethod::Quadrature;
    m.est_error = std::max({mt.est_error, ms.est_error, st.est_error, ss.est_error});
    return m;
}

}  // namespace arelab
