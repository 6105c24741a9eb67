#pragma once

namespace arelab {

// Standard normal pdf.
double normal_pdf(double x);

// Standard normal cdf via erfc.
double normal_cdf(double x);

// Inverse standard normal cdf, p in (0, 1).
double normal_quantile(double p);

// Upper quantile z_alpha = Phi^{-1}(1 - alpha).
double z_alpha(double alpha);

// Standard bivariate normal cdf with correlation rho in (-1, 1), evaluated by
// the arcsine-substituted correlation integral
//   Phi2(x,y;rho) = Phi(x)Phi(y)
//                 + (1/2pi) int_0^{asin rho} exp(-(x^2+y^2-2xy sin t)/(2cos^2 t)) dt,
// which is smooth and bounded on the whole parameter range.
double bvn_cdf(double rho, double x, double y);

}  // namespace arelab
