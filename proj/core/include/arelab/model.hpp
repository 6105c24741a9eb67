#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arelab/quadrature.hpp"

namespace arelab {

class Rng;

// Open-by-default parameter interval; MICD admits the closed endpoints.
struct Interval {
    double lo;
    double hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(double t) const {
        if (t < lo || t > hi) return false;
        if (t == lo && !lo_closed) return false;
        if (t == hi && !hi_closed) return false;
        return true;
    }
};

// n observation pairs with pairwise-distinct coordinates in each column.
struct PairedSample {
    std::vector<double> x;
    std::vector<double> y;
    double theta_used = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return x.size(); }
};

enum class MarginalKind { UniformOnSupport, StdNormal };

// A one-parameter family {F_theta} with theta-free marginals G, H and
// independence at theta = 0.  Instances are immutable and freely shareable;
// samplers take the seed as an argument and keep no state.
class DependenceModel {
public:
    DependenceModel(std::string name, Interval theta_domain, quad::Rect support,
                    MarginalKind marginals)
        : name_(std::move(name)),
          theta_domain_(theta_domain),
          support_(support),
          marginals_(marginals) {}
    virtual ~DependenceModel() = default;

    const std::string& name() const { return name_; }
    const Interval& theta_domain() const { return theta_domain_; }
    const quad::Rect& support() const { return support_; }
    MarginalKind marginal_kind() const { return marginals_; }

    // Marginal cdfs G and H (the same for every theta).
    double marginal_x(double x) const;
    double marginal_y(double y) const;
    // Marginal densities, used by the grid fallback of the variation distance.
    double marginal_density_x(double x) const;
    double marginal_density_y(double y) const;

    // Joint cdf F_theta(x, y).
    double cdf(double theta, double x, double y) const {
        require_theta(theta);
        return cdf_impl(theta, x, y);
    }

    // E_theta g(X, Y): exact decomposition where the model provides one,
    // tensor quadrature otherwise.  order = 0 selects the model default; the
    // result carries the order-doubling error estimate.
    quad::QuadResult expectation_detailed(double theta, const quad::Integrand2D& g,
                                          int order = 0) const {
        require_theta(theta);
        return expectation_impl(theta, g, order);
    }

    double expectation(double theta, const quad::Integrand2D& g, int order = 0) const {
        return expectation_detailed(theta, g, order).value;
    }

    double expectation(double theta, quad::Fn2 f) const {
        return expectation(theta, quad::Integrand2D{std::move(f), {}, {}, quad::DiagKink::None});
    }

    PairedSample sample(double theta, int n, std::uint64_t seed) const;

    // Structural hints for integrating functions of F_theta.
    virtual std::vector<double> cdf_axis_breaks(double /*theta*/) const { return {}; }
    virtual quad::DiagKink cdf_diag_kink(double /*theta*/) const { return quad::DiagKink::None; }

    virtual bool has_exact_decomposition() const { return false; }

    // Density of the absolutely continuous part w.r.t. Lebesgue measure on
    // the support (the full density for the smooth models).
    virtual double pdf(double theta, double x, double y) const = 0;

    // Exact total-variation distance ||F_theta - F_0|| when the model's
    // measure decomposition yields one in closed form.
    virtual std::optional<double> variation_exact(double /*theta*/) const { return std::nullopt; }

    void require_theta(double theta) const;

protected:
    virtual double cdf_impl(double theta, double x, double y) const = 0;
    virtual quad::QuadResult expectation_impl(double theta, const quad::Integrand2D& g,
                                              int order) const;
    virtual void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const = 0;

private:
    std::string name_;
    Interval theta_domain_;
    quad::Rect support_;
    MarginalKind marginals_;
};

// Association function a_theta(x, y) = F_theta(x, y) - G(x) H(y).
double association(const DependenceModel& model, double theta, double x, double y);

struct DistanceResult {
    double value = 0.0;
    bool exact = false;      // false: grid fallback, approximate
    double est_error = 0.0;  // refinement difference for the grid fallback
};

// Total variation ||F_theta - F_0||, in [0, 2].  Uses the model's closed-form
// decomposition when available, otherwise a midpoint grid of the density
// difference at the given resolution (flagged approximate).
DistanceResult variation_distance(const DependenceModel& model, double theta, int resolution);

// sup-norm distance between F_theta and F_0 on an inclusive
// (resolution+1) x (resolution+1) grid over the support.
double kolmogorov_distance(const DependenceModel& model, double theta, int resolution);

}  // namespace arelab
