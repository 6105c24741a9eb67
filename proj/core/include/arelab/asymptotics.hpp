#pragma once

#include "arelab/model.hpp"

namespace arelab {

enum class MomentMethod { ExactDecomposition, Quadrature, MonteCarlo };

// Asymptotic mean/variance functionals of Kendall's T and Spearman's S at a
// given theta:
//   mu_T     = 4 E F(X,Y) - 1
//   sigma2_T = 16 Var(2F(X,Y) - G(X) - H(Y))
//   mu_S     = 12 E G(X)H(Y) - 3
//   sigma2_S = 144 Var((1-G(X))(1-H(Y)) + int F(X,y) dH(y) + int F(x,Y) dG(x))
// At theta = 0 these reduce to mu = 0, sigma2_T = 4/9, sigma2_S = 1.
struct AsymptoticMoments {
    double theta = 0.0;
    double mu_t = 0.0;
    double sigma2_t = 0.0;
    double mu_s = 0.0;
    double sigma2_s = 0.0;
    MomentMethod method = MomentMethod::Quadrature;
    double est_error = 0.0;
};

double mu_t(const DependenceModel& model, double theta, int order = 0);
double mu_s(const DependenceModel& model, double theta, int order = 0);
// Variances are computed in centered two-pass form; values below 1e-12
// raise DegeneracyError.
double sigma2_t(const DependenceModel& model, double theta, int order = 0);
double sigma2_s(const DependenceModel& model, double theta, int order = 0);

AsymptoticMoments asymptotic_moments(const DependenceModel& model, double theta);

}  // namespace arelab
