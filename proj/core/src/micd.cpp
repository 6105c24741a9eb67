#include <algorithm>
#include <cmath>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"
#include "arelab/rng.hpp"

namespace arelab {

std::string_view micd_variant_name(MicdVariant v) {
    switch (v) {
        case MicdVariant::AS: return "AS";
        case MicdVariant::AL: return "AL";
        case MicdVariant::OS: return "OS";
        case MicdVariant::OL: return "OL";
    }
    return "?";
}

double MicdSpec::weight(double theta) const {
    return (variant == MicdVariant::AS || variant == MicdVariant::AL)
               ? std::abs(theta)
               : theta * theta;
}

MicdGeometry micd_geometry(MicdVariant variant, double theta) {
    const double a = std::abs(theta);
    const double s = (1.0 - a) / 2.0;
    const double t = a / 2.0;
    MicdGeometry geo;
    geo.anti = theta < 0.0;
    geo.w = MicdSpec{variant}.weight(theta);

    auto add_rect = [&geo](double xlo, double xhi, double ylo, double yhi) {
        if (xhi > xlo && yhi > ylo) geo.rects.push_back({{xlo, xhi, ylo, yhi}, 1.0});
    };

    switch (variant) {
        case MicdVariant::AS:
            add_rect(-s, s, -s, s);
            break;
        case MicdVariant::OS:
            add_rect(-s, s, -0.5, 0.5);
            add_rect(-0.5, -s, -s, s);
            add_rect(s, 0.5, -s, s);
            break;
        case MicdVariant::AL:
            add_rect(-0.5, -t, -0.5, -t);
            add_rect(-0.5, -t, t, 0.5);
            add_rect(t, 0.5, -0.5, -t);
            add_rect(t, 0.5, t, 0.5);
            break;
        case MicdVariant::OL:
            add_rect(-0.5, -t, -0.5, 0.5);
            add_rect(t, 0.5, -0.5, 0.5);
            add_rect(-t, t, t, 0.5);
            add_rect(-t, t, -0.5, -t);
            break;
    }
    for (const auto& wr : geo.rects) geo.area += wr.rect.area();

    if (variant == MicdVariant::AS || variant == MicdVariant::OS) {
        if (s < 0.5) {
            geo.segs = {{-0.5, -s}, {s, 0.5}};
            geo.breaks = {-s, s};
        }
    } else {
        if (t > 0.0) {
            geo.segs = {{-t, t}};
            geo.breaks = {-t, t};
        }
    }
    for (const auto& seg : geo.segs) geo.seg_len += seg.second - seg.first;
    return geo;
}

namespace {

double rect_mass(double u, double v, const quad::Rect& r) {
    return std::max(0.0, std::min(u, r.x_hi) - r.x_lo) *
           std::max(0.0, std::min(v, r.y_hi) - r.y_lo);
}

double micd_cdf_geom(const MicdGeometry& geo, double u, double v) {
    double fa = 0.0;
    if (geo.w < 1.0) {
        for (const auto& wr : geo.rects) fa += rect_mass(u, v, wr.rect);
        fa /= geo.area;
    }
    double fb = 0.0;
    if (geo.w > 0.0) {
        if (!geo.anti) {
            const double m = std::min(u, v);
            for (const auto& seg : geo.segs)
                fb += std::max(0.0, std::min(m, seg.second) - seg.first);
        } else {
            for (const auto& seg : geo.segs)
                fb += std::max(0.0, std::min(u, seg.second) - std::max(-v, seg.first));
        }
        fb /= geo.seg_len;
    }
    return (1.0 - geo.w) * fa + geo.w * fb;
}

quad::QuadResult micd_expectation_geom(const MicdGeometry& geo, const quad::Integrand2D& g,
                                       int order, quad::DiagKink model_kink) {
    const int cell_order = order > 0 ? order : 16;
    quad::QuadResult total{0.0, 0.0};

    if (geo.w < 1.0) {
        quad::Integrand2D area_g = g;
        area_g.x_breaks.insert(area_g.x_breaks.end(), geo.breaks.begin(), geo.breaks.end());
        area_g.y_breaks.insert(area_g.y_breaks.end(), geo.breaks.begin(), geo.breaks.end());
        if (area_g.diag == quad::DiagKink::None) area_g.diag = model_kink;
        auto r = quad::integrate_2d(area_g, geo.rects, cell_order);
        const double scale = (1.0 - geo.w) / geo.area;
        total.value += scale * r.value;
        total.est_error += scale * r.est_error;
    }

    if (geo.w > 0.0) {
        const double sgn = geo.anti ? -1.0 : 1.0;
        auto line = [&](double z) { return g.f(z, sgn * z); };
        std::vector<double> cuts(geo.breaks);
        cuts.push_back(0.0);
        cuts.insert(cuts.end(), g.x_breaks.begin(), g.x_breaks.end());
        for (double b : g.y_breaks) cuts.push_back(sgn * b);
        double v1 = 0.0, v2 = 0.0;
        for (const auto& seg : geo.segs) {
            v1 += quad::integrate_1d(line, seg.first, seg.second, cuts, 2 * cell_order);
            v2 += quad::integrate_1d(line, seg.first, seg.second, cuts, 4 * cell_order);
        }
        const double scale = geo.w / geo.seg_len;
        const double est = scale * std::abs(v2 - v1);
        if (est > 1e-8 * (1.0 + std::abs(scale * v2)))
            throw ConvergenceError("segment quadrature did not converge", scale * v2, est);
        total.value += scale * v2;
        total.est_error += est;
    }
    return total;
}

}  // namespace

double micd_cdf(const MicdSpec& spec, double theta, double u, double v) {
    if (!(std::abs(theta) <= 1.0)) throw DomainError("micd_cdf requires |theta| <= 1");
    return micd_cdf_geom(micd_geometry(spec.variant, theta), u, v);
}

double micd_expectation(const MicdSpec& spec, double theta, const quad::Integrand2D& g,
                        int order) {
    if (!(std::abs(theta) <= 1.0)) throw DomainError("micd_expectation requires |theta| <= 1");
    const auto geo = micd_geometry(spec.variant, theta);
    const auto kink = geo.w > 0.0 ? (geo.anti ? quad::DiagKink::Anti : quad::DiagKink::Main)
                                  : quad::DiagKink::None;
    return micd_expectation_geom(geo, g, order, kink).value;
}

MicdModel::MicdModel(MicdVariant variant)
    : DependenceModel(std::string("micd-") +
                          (variant == MicdVariant::AS   ? "as"
                           : variant == MicdVariant::AL ? "al"
                           : variant == MicdVariant::OS ? "os"
                                                        : "ol"),
                      Interval{-1.0, 1.0, true, true}, quad::Rect{-0.5, 0.5, -0.5, 0.5},
                      MarginalKind::UniformOnSupport),
      spec_{variant} {}

namespace {

// Geometry rebuilds are cheap but frequent; one-slot cache per thread.
const MicdGeometry& cached_geometry(MicdVariant variant, double theta) {
    thread_local MicdVariant cv = MicdVariant::AS;
    thread_local double ct = -2.0;
    thread_local MicdGeometry geo;
    if (ct != theta || cv != variant) {
        geo = micd_geometry(variant, theta);
        cv = variant;
        ct = theta;
    }
    return geo;
}

}  // namespace

double MicdModel::cdf_impl(double theta, double u, double v) const {
    return micd_cdf_geom(cached_geometry(spec_.variant, theta), u, v);
}

std::vector<double> MicdModel::cdf_axis_breaks(double theta) const {
    return micd_geometry(spec_.variant, theta).breaks;
}

quad::DiagKink MicdModel::cdf_diag_kink(double theta) const {
    if (spec_.weight(theta) == 0.0) return quad::DiagKink::None;
    return theta > 0.0 ? quad::DiagKink::Main : quad::DiagKink::Anti;
}

double MicdModel::pdf(double theta, double u, double v) const {
    // Absolutely continuous part: uniform on A.
    const auto& geo = cached_geometry(spec_.variant, theta);
    if (geo.w >= 1.0) return 0.0;
    for (const auto& wr : geo.rects)
        if (u >= wr.rect.x_lo && u <= wr.rect.x_hi && v >= wr.rect.y_lo && v <= wr.rect.y_hi)
            return (1.0 - geo.w) / geo.area;
    return 0.0;
}

std::optional<double> MicdModel::variation_exact(double theta) const {
    const auto& geo = cached_geometry(spec_.variant, theta);
    if (geo.w == 0.0) return 0.0;
    // Singular segment mass w, plus the L1 distance between the absolutely
    // continuous densities (1-w)/|A| on A and 1 on the square.
    if (geo.w >= 1.0) return 2.0;
    return geo.w + std::abs(1.0 - geo.w - geo.area) + (1.0 - geo.area);
}

quad::QuadResult MicdModel::expectation_impl(double theta, const quad::Integrand2D& g,
                                             int order) const {
    const auto geo = micd_geometry(spec_.variant, theta);
    return micd_expectation_geom(geo, g, order, cdf_diag_kink(theta));
}

void MicdModel::sample_impl(double theta, int n, Rng& rng, PairedSample& out) const {
    const auto& geo = cached_geometry(spec_.variant, theta);
    for (int i = 0; i < n; ++i) {
        if (rng.bernoulli(geo.w)) {
            double r = rng.uniform(0.0, geo.seg_len);
            double z = 0.0;
            for (const auto& seg : geo.segs) {
                const double len = seg.second - seg.first;
                if (r <= len || &seg == &geo.segs.back()) {
                    z = seg.first + std::min(r, len);
                    break;
                }
                r -= len;
            }
            out.x.push_back(z);
            out.y.push_back(geo.anti ? -z : z);
        } else {
            double r = rng.uniform(0.0, geo.area);
            const quad::Rect* pick = &geo.rects.back().rect;
            for (const auto& wr : geo.rects) {
                const double a = wr.rect.area();
                if (r <= a) {
                    pick = &wr.rect;
                    break;
                }
                r -= a;
            }
            out.x.push_back(rng.uniform(pick->x_lo, pick->x_hi));
            out.y.push_back(rng.uniform(pick->y_lo, pick->y_hi));
        }
    }
}

std::shared_ptr<const DependenceModel> make_micd(MicdVariant variant) {
    return std::make_shared<MicdModel>(variant);
}

}  // namespace arelab
