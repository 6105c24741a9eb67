#pragma once

#include <string>
#include <vector>

#include "arelab/model.hpp"
#include "arelab/models.hpp"

namespace arelab {

enum class Side { Left, Right, TwoSided };

Side side_from_string(std::string_view s);
std::string_view side_name(Side s);

enum class AreMethod { ClosedForm, DerivativeRatio, LimitRatio };
std::string_view are_method_name(AreMethod m);

struct AreDiagnostics {
    double mu_t_prime = 0.0;
    double mu_s_prime = 0.0;
    double sigma2_t = 0.0;
    double sigma2_s = 0.0;
    double fd_step = 0.0;
    double richardson_residual = 0.0;
};

// Pitman efficiency of T relative to S at theta0.  value is an extended
// real: +infinity is an explicit outcome (deep degeneracy of mu_S), never
// an overflow artifact.
struct AreResult {
    std::string model;
    double theta0 = 0.0;
    Side side = Side::TwoSided;
    double value = 0.0;
    AreMethod method = AreMethod::DerivativeRatio;
    AreDiagnostics diagnostics;
};

// value = (sigma2_S / sigma2_T) (mu_T' / mu_S')^2 with derivatives by
// Richardson-extrapolated finite differences (one-sided for side != two);
// falls back to the secant ratio along a shrinking theta sequence when one
// or both derivatives vanish below the 1e-6 degeneracy threshold.
AreResult are_numeric(const DependenceModel& model, double theta0, Side side = Side::TwoSided);

// Closed-form efficiency curves of the MICD mixtures, evaluated at |theta|
// (symmetric in theta); AL follows the a/0 = infinity convention at 0.
double are_closed_micd(MicdVariant variant, double theta);

enum class TheoremVerdict { AreIsOne, AreNotOne, Inconclusive };
std::string_view theorem_verdict_name(TheoremVerdict v);

// Ratios of the two association-function expectations over a decreasing
// positive theta grid:
//   ratio_ii  = E_theta a_theta / E_0 a_theta        (-> 1 iff ARE = 1)
//   ratio_iii = ratio_ii - 1, from the same expectations computed separately
// The verdict assumes the one-sided monotonicity of the mean functionals
// that underpins the z-tests.
struct TheoremCheck {
    std::vector<double> theta_grid;
    std::vector<double> e_theta_a;
    std::vector<double> e_null_a;
    std::vector<double> ratio_ii;
    std::vector<double> ratio_iii;
    TheoremVerdict verdict = TheoremVerdict::Inconclusive;
    double tolerance = 1e-3;
    bool nondegeneracy_failure = false;
    bool assumes_mu_condition = true;
};

TheoremCheck theorem_check(const DependenceModel& model, std::vector<double> theta_grid);

// Numeric smoothness/nondegeneracy diagnostics at a nonzero theta.
struct SndDiagnostics {
    double slope = 0.0;           // (1/theta) int (F_theta - F_0) dF_0
    double deriv_integral = 0.0;  // int (dF/dtheta|_0) dF_0, finite differences
    double variation = 0.0;       // d(theta)
    double kolmogorov = 0.0;      // rho(theta)
    double product_over_theta = 0.0;  // d * rho / |theta|
};

SndDiagnostics snd_diagnostics(const DependenceModel& model, double theta);

}  // namespace arelab
