#pragma once

#include <functional>
#include <span>
#include <vector>

namespace arelab::quad {

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order (Newton iteration on P_n).
const GaussLegendre& gauss_legendre(int order);

// Tensor order used for smooth-model expectations; ARE_LAB_QUAD_ORDER
// overrides the default of 96.
int default_order();

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Integral of f over [lo, hi], split at the interior breakpoints so f only
// needs to be smooth between consecutive breaks.
double integrate_1d(const Fn1& f, double lo, double hi,
                    std::span<const double> breaks, int order);

// Orientation of a known kink line of a 2-D integrand.
enum class DiagKink { None, Main, Anti };

// A 2-D integrand together with structural hints: axis-aligned discontinuity
// or kink lines, and an optional diagonal kink (x = y or x = -y).
struct Integrand2D {
    Fn2 f;
    std::vector<double> x_breaks;
    std::vector<double> y_breaks;
    DiagKink diag = DiagKink::None;
};

struct Rect {
    double x_lo, x_hi, y_lo, y_hi;
    double area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
};

// A rectangle entering a region decomposition with a constant coefficient
// (coefficient < 0 expresses set subtraction, e.g. "square minus corners").
struct WeightedRect {
    Rect rect;
    double coeff = 1.0;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;  // |order n  -  order 2n| difference
};

// Integral of g over a union of weighted rectangles.  Every rectangle is
// subdivided at the integrand's breakpoints; cells straddling a declared
// diagonal kink are split into two triangles (Duffy transform).  The result
// carries an order-doubling error estimate; if the estimate fails to settle
// below tol after one refinement a ConvergenceError is thrown.
QuadResult integrate_2d(const Integrand2D& g, std::span<const WeightedRect> region,
                        int order, double tol = 1e-8);

// Integral of f over the triangle (v0, v1, v2) by the collapsed tensor rule.
double integrate_triangle(const Fn2& f, const double v0[2], const double v1[2],
                          const double v2[2], int order);

// Sorted deduplicated interior breakpoints of [lo, hi].
std::vector<double> clip_breaks(std::span<const double> breaks, double lo, double hi);

}  // namespace arelab::quad
