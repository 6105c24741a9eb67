#pragma once

#include <cstdint>
#include <string>

#include "arelab/asymptotics.hpp"

namespace arelab {

enum class Statistic { KendallT, SpearmanS };

// Right-side asymptotic z-test pipeline: reject when
//   z = (statistic - mu(theta0)) / (sigma(theta0)/sqrt(n)) > z_alpha.
struct PowerExperiment {
    std::string model;
    double theta0 = 0.0;
    double theta_alt = 0.0;
    double alpha = 0.05;
    double beta = 0.1;
    int replications = 1000;
    std::uint64_t seed = 0;

    void validate() const;  // alpha in (0,1), beta in (0, 1-alpha), reps >= 1
};

double z_statistic(double value, const AsymptoticMoments& moments, Statistic which, int n);

struct PowerEstimate {
    double power = 0.0;
    double std_error = 0.0;  // binomial
    int n = 0;
    int replications = 0;
};

// Rejection rate over the replications, sampling at theta_alt; replicate r
// draws from seed xor hash(r), so results do not depend on evaluation order
// and are identical for every n prefix (common random numbers).
PowerEstimate estimate_power(const PowerExperiment& experiment, Statistic which, int n);

struct RequiredN {
    int n = 0;
    double achieved_power = 0.0;
    double power_se = 0.0;
    double n_se = 0.0;       // power_se propagated through the local slope
    int analytic_start = 0;  // plug-in ((z_a + z_b) sigma / delta mu)^2
};

// Smallest n on a geometric-then-bisection grid whose estimated power
// reaches 1 - beta - tolerance; search capped at n = 1e7.
RequiredN required_n(const PowerExperiment& experiment, Statistic which,
                     double power_tolerance = 0.005);

struct EfficiencyResult {
    RequiredN t;
    RequiredN s;
    double ratio = 0.0;     // n_S / n_T, the finite-sample ARE estimate
    double ratio_se = 0.0;
    PowerEstimate size_t_test;  // null rejection rate at the found n
    PowerEstimate size_s_test;
};

EfficiencyResult efficiency_ratio(const PowerExperiment& experiment);

}  // namespace arelab
