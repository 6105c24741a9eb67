#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "arelab/model.hpp"
#include "arelab/normal.hpp"

namespace arelab {

// ---------------------------------------------------------------------------
// Closed-form copula evaluators
// ---------------------------------------------------------------------------

// Root of F - GH = theta (G - F)(H - F) satisfying the Frechet bounds,
// in the cancellation-free form 2(theta+1)uv / (1 + theta(u+v) + sqrt(disc)).
double plackett_cdf(double theta, double u, double v);

// -(1/theta) ln(1 - (1-e^{ -theta u})(1-e^{ -theta v})/(1-e^{ -theta})),
// continuously extended through theta = 0; switches to a 4-term Taylor
// expansion for |theta| < 1e-6.
double frank_cdf(double theta, double u, double v);

// bvn_cdf(rho, x, y) lives in normal.hpp.

// ---------------------------------------------------------------------------
// MICD mixtures: independence component uniform on a rectangle union A,
// complete-dependence component uniform on diagonal segments B,
// F_theta = (1-w) F_A + w F_B with w = |theta| (AS, AL) or theta^2 (OS, OL).
// For theta < 0 the segments flip to the anti-diagonal.
// ---------------------------------------------------------------------------

enum class MicdVariant { AS, AL, OS, OL };

std::string_view micd_variant_name(MicdVariant v);

struct MicdSpec {
    MicdVariant variant;

    // Mixture weight w_theta.
    double weight(double theta) const;
};

// Geometry of the mixture at a given theta: disjoint rectangles covering A,
// the x-ranges of the segments in B, and the axis breakpoints.
struct MicdGeometry {
    std::vector<quad::WeightedRect> rects;          // disjoint, coeff 1
    double area = 0.0;                              // |A|
    std::vector<std::pair<double, double>> segs;    // x-projections of B
    double seg_len = 0.0;
    double w = 0.0;
    bool anti = false;                              // segments on y = -x
    std::vector<double> breaks;                     // interior axis breakpoints
};

MicdGeometry micd_geometry(MicdVariant variant, double theta);

double micd_cdf(const MicdSpec& spec, double theta, double u, double v);

// Exact decomposition: area integral over A with its density plus the line
// integral over B, each piece by Gauss-Legendre between breakpoints.
double micd_expectation(const MicdSpec& spec, double theta, const quad::Integrand2D& g,
                        int order = 0);

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

// F_theta = F_0 + theta * Delta on the unit square, Delta vanishing on the
// boundary.  The admissible theta range keeps 1 + theta * d2Delta/dudv >= 0;
// when not supplied it is estimated on a grid (no sharpness claimed).
class LinearModel : public DependenceModel {
public:
    using Surface = std::function<double(double, double)>;

    LinearModel(std::string name, Surface delta, Surface delta_du, Surface delta_dudv,
                Interval theta_domain);
    // Derivatives by central differences, domain estimated numerically.
    LinearModel(std::string name, Surface delta);

    double pdf(double theta, double u, double v) const override;
    double conditional_cdf(double theta, double u, double v) const;

protected:
    double cdf_impl(double theta, double u, double v) const override;
    void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const override;

private:
    Surface delta_, delta_du_, delta_dudv_;
};

class PlackettModel : public DependenceModel {
public:
    PlackettModel();
    double pdf(double theta, double u, double v) const override;
    double conditional_cdf(double theta, double u, double v) const;

protected:
    double cdf_impl(double theta, double u, double v) const override;
    void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const override;
};

class FrankModel : public DependenceModel {
public:
    FrankModel();
    double pdf(double theta, double u, double v) const override;
    double conditional_cdf(double theta, double u, double v) const;

protected:
    double cdf_impl(double theta, double u, double v) const override;
    void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const override;
};

class BvnModel : public DependenceModel {
public:
    BvnModel();
    double pdf(double theta, double x, double y) const override;

protected:
    double cdf_impl(double theta, double x, double y) const override;
    void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const override;
};

class MicdModel : public DependenceModel {
public:
    explicit MicdModel(MicdVariant variant);

    MicdVariant variant() const { return spec_.variant; }

    bool has_exact_decomposition() const override { return true; }
    std::vector<double> cdf_axis_breaks(double theta) const override;
    quad::DiagKink cdf_diag_kink(double theta) const override;
    double pdf(double theta, double u, double v) const override;
    std::optional<double> variation_exact(double theta) const override;

protected:
    double cdf_impl(double theta, double u, double v) const override;
    quad::QuadResult expectation_impl(double theta, const quad::Integrand2D& g,
                                      int order) const override;
    void sample_impl(double theta, int n, Rng& rng, PairedSample& out) const override;

private:
    MicdSpec spec_;
};

// FGM instance of the linear family: F = uv + theta uv(1-u)(1-v).
std::shared_ptr<const DependenceModel> make_fgm();
std::shared_ptr<const DependenceModel> make_plackett();
std::shared_ptr<const DependenceModel> make_frank();
std::shared_ptr<const DependenceModel> make_bvn();
std::shared_ptr<const DependenceModel> make_micd(MicdVariant variant);

// Registry keyed by "fgm", "bvn", "plackett", "frank", "micd-as", "micd-al",
// "micd-os", "micd-ol".
const DependenceModel& find_model(std::string_view name);
std::shared_ptr<const DependenceModel> find_model_ptr(std::string_view name);
std::vector<std::string> model_names();

// Monotone inversion helper: smallest v in [lo, hi] with F(v) >= q for a
// nondecreasing F; bisection tightened by Newton steps when a derivative is
// supplied, 200-iteration cap, interval tolerance 1e-12.
double invert_monotone(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double q, double lo,
                       double hi);

}  // namespace arelab
