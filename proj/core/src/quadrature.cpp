#include "arelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "arelab/errors.hpp"

namespace arelab::quad {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration from the Chebyshev-like initial guess; exploits the
    // symmetry of the roots.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
    static std::mutex mu;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

int default_order() {
    static const int order = [] {
        const char* env = std::getenv("ARE_LAB_QUAD_ORDER");
        if (env == nullptr || *env == '\0') return 96;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || v < 4 || v > 4096)
            throw ConfigError("ARE_LAB_QUAD_ORDER must be an integer in [4, 4096], got '" +
                              std::string(env) + "'");
        return static_cast<int>(v);
    }();
    return order;
}

std::vector<double> clip_breaks(std::span<const double> breaks, double lo, double hi) {
    std::vector<double> out;
    for (double b : breaks)
        if (b > lo && b < hi) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              out.end());
    return out;
}

namespace {

double integrate_interval(const Fn1& f, double a, double b, const GaussLegendre& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double integrate_1d_order(const Fn1& f, double lo, double hi,
                          const std::vector<double>& cuts, int order) {
    const auto& rule = gauss_legendre(order);
    double total = 0.0;
    double a = lo;
    for (double c : cuts) {
        total += integrate_interval(f, a, c, rule);
        a = c;
    }
    total += integrate_interval(f, a, hi, rule);
    return total;
}

}  // namespace

double integrate_1d(const Fn1& f, double lo, double hi,
                    std::span<const double> breaks, int order) {
    if (!(hi > lo)) return 0.0;
    auto cuts = clip_breaks(breaks, lo, hi);
    return integrate_1d_order(f, lo, hi, cuts, order);
}

double integrate_triangle(const Fn2& f, const double v0[2], const double v1[2],
                          const double v2[2], int order) {
    // Duffy map of the unit square onto the triangle: P(s,t) = v0 + s(v1-v0)
    // + st(v2-v1), Jacobian |cross(v1-v0, v2-v1)| * s.
    const double e1x = v1[0] - v0[0], e1y = v1[1] - v0[1];
    const double e2x = v2[0] - v1[0], e2y = v2[1] - v1[1];
    const double cross = std::abs(e1x * e2y - e1y * e2x);
    if (cross == 0.0) return 0.0;
    const auto& rule = gauss_legendre(order);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = 0.5 * (rule.nodes[i] + 1.0);
        const double ws = 0.5 * rule.weights[i];
        double inner = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double t = 0.5 * (rule.nodes[j] + 1.0);
            const double wt = 0.5 * rule.weights[j];
            const double x = v0[0] + s * e1x + s * t * e2x;
            const double y = v0[1] + s * e1y + s * t * e2y;
            inner += wt * f(x, y);
        }
        total += ws * s * inner;
    }
    return cross * total;
}

namespace {

double integrate_cell_tensor(const Fn2& f, const Rect& c, const GaussLegendre& rule) {
    const double mx = 0.5 * (c.x_lo + c.x_hi), hx = 0.5 * (c.x_hi - c.x_lo);
    const double my = 0.5 * (c.y_lo + c.y_hi), hy = 0.5 * (c.y_hi - c.y_lo);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mx + hx * rule.nodes[i];
        double inner = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            inner += rule.weights[j] * f(x, my + hy * rule.nodes[j]);
        total += rule.weights[i] * inner;
    }
    return hx * hy * total;
}

// Does the main (or anti) diagonal cross the open interior of the cell?
bool diag_crosses(const Rect& c, DiagKink diag) {
    if (diag == DiagKink::Main)
        return std::max(c.x_lo, c.y_lo) < std::min(c.x_hi, c.y_hi) - 1e-15;
    if (diag == DiagKink::Anti)
        return std::max(c.x_lo, -c.y_hi) < std::min(c.x_hi, -c.y_lo) - 1e-15;
    return false;
}

double integrate_cell(const Fn2& f, const Rect& c, DiagKink diag, int order) {
    const auto& rule = gauss_legendre(order);
    if (!diag_crosses(c, diag)) return integrate_cell_tensor(f, c, rule);
    // Breakpoint symmetrization guarantees the kink runs corner to corner, so
    // two triangles cover the cell exactly.
    if (diag == DiagKink::Main) {
        const double p[2] = {c.x_lo, c.y_lo}, q[2] = {c.x_hi, c.y_hi};
        const double r1[2] = {c.x_hi, c.y_lo}, r2[2] = {c.x_lo, c.y_hi};
        return integrate_triangle(f, p, r1, q, order) + integrate_triangle(f, p, q, r2, order);
    }
    const double p[2] = {c.x_lo, c.y_hi}, q[2] = {c.x_hi, c.y_lo};
    const double r1[2] = {c.x_lo, c.y_lo}, r2[2] = {c.x_hi, c.y_hi};
    return integrate_triangle(f, r1, q, p, order) + integrate_triangle(f, p, q, r2, order);
}

double integrate_region_order(const Integrand2D& g, std::span<const WeightedRect> region,
                              int order) {
    // Force symmetric break sets along a declared diagonal so straddled cells
    // are squares cut corner to corner; the region's own edges participate,
    // since a cell bounded by a rectangle edge on one axis only would be cut
    // mid-edge otherwise.
    std::vector<double> xb(g.x_breaks.begin(), g.x_breaks.end());
    std::vector<double> yb(g.y_breaks.begin(), g.y_breaks.end());
    if (g.diag != DiagKink::None) {
        for (const auto& wr : region) {
            xb.push_back(wr.rect.x_lo);
            xb.push_back(wr.rect.x_hi);
            yb.push_back(wr.rect.y_lo);
            yb.push_back(wr.rect.y_hi);
        }
    }
    if (g.diag == DiagKink::Main) {
        xb.insert(xb.end(), yb.begin(), yb.end());
        yb = xb;
    } else if (g.diag == DiagKink::Anti) {
        std::vector<double> xb0 = xb;
        for (double b : yb) xb.push_back(-b);
        for (double b : xb0) yb.push_back(-b);
    }
    double total = 0.0;
    for (const auto& wr : region) {
        if (wr.rect.x_hi <= wr.rect.x_lo || wr.rect.y_hi <= wr.rect.y_lo) continue;
        auto xcuts = clip_breaks(xb, wr.rect.x_lo, wr.rect.x_hi);
        auto ycuts = clip_breaks(yb, wr.rect.y_lo, wr.rect.y_hi);
        xcuts.insert(xcuts.begin(), wr.rect.x_lo);
        xcuts.push_back(wr.rect.x_hi);
        ycuts.insert(ycuts.begin(), wr.rect.y_lo);
        ycuts.push_back(wr.rect.y_hi);
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < xcuts.size(); ++i)
            for (std::size_t j = 0; j + 1 < ycuts.size(); ++j) {
                Rect cell{xcuts[i], xcuts[i + 1], ycuts[j], ycuts[j + 1]};
                acc += integrate_cell(g.f, cell, g.diag, order);
            }
        total += wr.coeff * acc;
    }
    return total;
}

}  // namespace

QuadResult integrate_2d(const Integrand2D& g, std::span<const WeightedRect> region,
                        int order, double tol) {
    double v1 = integrate_region_order(g, region, order);
    double v2 = integrate_region_order(g, region, 2 * order);
    double est = std::abs(v2 - v1);
    const double scale = 1.0 + std::abs(v2);
    if (est <= tol * scale) return {v2, est};
    double v4 = integrate_region_order(g, region, 4 * order);
    double est2 = std::abs(v4 - v2);
    if (est2 <= tol * scale) return {v4, est2};
    throw ConvergenceError("2-D quadrature did not converge (estimate " +
                               std::to_string(v4) + ", error " + std::to_string(est2) + ")",
                           v4, est2);
}

}  // namespace arelab::quad
