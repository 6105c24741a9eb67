#include "arelab/are.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "arelab/errors.hpp"
#include "arelab/rng.hpp"

using namespace arelab;

TEST(AreClosed, Anchors) {
    EXPECT_EQ(are_closed_micd(MicdVariant::AS, 0.0), 1.0);
    EXPECT_EQ(are_closed_micd(MicdVariant::OS, 0.0), 1.0);
    EXPECT_EQ(are_closed_micd(MicdVariant::OL, 0.0), 2.25);
    EXPECT_TRUE(std::isinf(are_closed_micd(MicdVariant::AL, 0.0)));
    EXPECT_THROW(are_closed_micd(MicdVariant::OL, 1.0), DomainError);
}

TEST(AreClosed, OlAtHalfRationalOracle) {
    // exact fraction 1311/620 by rational arithmetic on the polynomials
    EXPECT_NEAR(are_closed_micd(MicdVariant::OL, 0.5), 1311.0 / 620.0, 1e-15);
}

TEST(AreClosed, SymmetricInTheta) {
    for (auto v : {MicdVariant::AS, MicdVariant::AL, MicdVariant::OS, MicdVariant::OL})
        for (double th : {0.1, 0.45, 0.9})
            EXPECT_EQ(are_closed_micd(v, th), are_closed_micd(v, -th));
}

TEST(AreClosed, AtLeastOneOnFineGrid) {
    for (auto v : {MicdVariant::AS, MicdVariant::AL, MicdVariant::OS, MicdVariant::OL})
        for (int k = -999; k <= 999; ++k)
            EXPECT_GE(are_closed_micd(v, k * 1e-3), 1.0 - 1e-12);
}

TEST(AreNumeric, MicdAnchors) {
    EXPECT_NEAR(are_numeric(find_model("micd-as"), 0.3).value, 1.0, 5e-3);
    // deep degeneracy of mu_S at 0 for AL: explicit infinity
    const auto al = are_numeric(find_model("micd-al"), 0.0);
    EXPECT_TRUE(std::isinf(al.value));
    EXPECT_EQ(al.method, AreMethod::LimitRatio);
    // both functionals flatten for OL at 0; the secant ratio resolves 9/4
    const auto ol = are_numeric(find_model("micd-ol"), 0.0);
    EXPECT_NEAR(ol.value, 2.25, 0.01 * 2.25);
    EXPECT_EQ(ol.method, AreMethod::LimitRatio);
}

TEST(AreNumeric, SmoothModelsAtZero) {
    for (const char* name : {"fgm", "plackett", "frank", "bvn"}) {
        const auto r = are_numeric(find_model(name), 0.0);
        EXPECT_NEAR(r.value, 1.0, 1e-3) << name;
        EXPECT_EQ(r.method, AreMethod::DerivativeRatio) << name;
    }
}

TEST(AreNumeric, CrossValidationSubset) {
    for (auto v : {MicdVariant::AS, MicdVariant::AL, MicdVariant::OS, MicdVariant::OL}) {
        const auto& m = find_model(std::string("micd-") +
                                   (v == MicdVariant::AS   ? "as"
                                    : v == MicdVariant::AL ? "al"
                                    : v == MicdVariant::OS ? "os"
                                                           : "ol"));
        for (double th : {0.2, 0.5, 0.8}) {
            const double closed = are_closed_micd(v, th);
            EXPECT_NEAR(are_numeric(m, th).value / closed, 1.0, 5e-3) << m.name() << th;
        }
    }
}

TEST(AreNumeric, SymmetricInThetaForMicd) {
    const auto& os = find_model("micd-os");
    EXPECT_NEAR(are_numeric(os, -0.4).value, are_closed_micd(MicdVariant::OS, 0.4), 5e-3);
}

TEST(AreNumeric, RootIdentitySlopeRatio) {
    // with sigma2_S(0)/sigma2_T(0) = 9/4, efficiency 1 at the root forces the
    // slope ratio mu_T'/mu_S' to 2/3
    const auto r = are_numeric(find_model("fgm"), 0.0);
    EXPECT_NEAR(r.diagnostics.sigma2_s / r.diagnostics.sigma2_t, 2.25, 1e-8);
    EXPECT_NEAR(r.diagnostics.mu_t_prime / r.diagnostics.mu_s_prime, 2.0 / 3.0, 1e-6);
}

TEST(AreNumeric, DiagnosticsRecomputeValue) {
    const auto r = are_numeric(find_model("plackett"), 0.4);
    ASSERT_EQ(r.method, AreMethod::DerivativeRatio);
    const auto& d = r.diagnostics;
    const double recomputed =
        (d.sigma2_s / d.sigma2_t) * (d.mu_t_prime / d.mu_s_prime) * (d.mu_t_prime / d.mu_s_prime);
    EXPECT_NEAR(r.value, recomputed, 1e-12 * std::abs(r.value));
    EXPECT_GT(d.fd_step, 0.0);
}

TEST(AreNumeric, SidesAgreeForSymmetricModel) {
    const auto& as = find_model("micd-as");
    const double two = are_numeric(as, 0.3, Side::TwoSided).value;
    const double left = are_numeric(as, 0.3, Side::Left).value;
    const double right = are_numeric(as, 0.3, Side::Right).value;
    EXPECT_NEAR(left, two, 5e-3);
    EXPECT_NEAR(right, two, 5e-3);
}

TEST(AreNumeric, DomainErrors) {
    EXPECT_THROW(are_numeric(find_model("bvn"), 1.2), DomainError);
}

namespace {

// A family that never leaves independence: both mean functionals are
// identically zero and no ratio can stabilize.
class NullFamily : public DependenceModel {
public:
    NullFamily()
        : DependenceModel("null-family", Interval{-1.0, 1.0}, quad::Rect{0.0, 1.0, 0.0, 1.0},
                          MarginalKind::UniformOnSupport) {}
    double pdf(double, double, double) const override { return 1.0; }

protected:
    double cdf_impl(double, double u, double v) const override { return u * v; }
    void sample_impl(double, int, Rng&, PairedSample&) const override {
        throw NumericError("not sampled in this test");
    }
};

}  // namespace

TEST(AreNumeric, InconclusiveWhenNothingMoves) {
    NullFamily family;
    EXPECT_THROW(are_numeric(family, 0.0), InconclusiveError);
}

namespace {

// The OS model under the strictly increasing reparametrization
// tau = theta^2 sign(theta); ARE is invariant under such maps.
class ReparamOs : public DependenceModel {
public:
    ReparamOs()
        : DependenceModel("micd-os-reparam", Interval{-1.0, 1.0, true, true},
                          quad::Rect{-0.5, 0.5, -0.5, 0.5}, MarginalKind::UniformOnSupport),
          base_(find_model_ptr("micd-os")) {}

    static double to_theta(double tau) {
        return tau >= 0.0 ? std::sqrt(tau) : -std::sqrt(-tau);
    }

    bool has_exact_decomposition() const override { return true; }
    std::vector<double> cdf_axis_breaks(double tau) const override {
        return base_->cdf_axis_breaks(to_theta(tau));
    }
    quad::DiagKink cdf_diag_kink(double tau) const override {
        return base_->cdf_diag_kink(to_theta(tau));
    }
    double pdf(double tau, double x, double y) const override {
        return base_->pdf(to_theta(tau), x, y);
    }

protected:
    double cdf_impl(double tau, double x, double y) const override {
        return base_->cdf(to_theta(tau), x, y);
    }
    quad::QuadResult expectation_impl(double tau, const quad::Integrand2D& g,
                                      int order) const override {
        return base_->expectation_detailed(to_theta(tau), g, order);
    }
    void sample_impl(double, int, Rng&, PairedSample&) const override {
        throw NumericError("not sampled in this test");
    }

private:
    std::shared_ptr<const DependenceModel> base_;
};

}  // namespace

TEST(AreNumeric, ReparametrizationInvariance) {
    const double direct = are_numeric(find_model("micd-os"), 0.0).value;
    ReparamOs reparam;
    const double reparametrized = are_numeric(reparam, 0.0).value;
    EXPECT_NEAR(direct, 1.0, 5e-3);
    EXPECT_NEAR(reparametrized, direct, 5e-3);
}

TEST(Theorem, OlRatioIsTwo) {
    const auto chk = theorem_check(find_model("micd-ol"), {0.5, 0.4, 0.3, 0.2, 0.1, 0.05});
    for (double r : chk.ratio_ii) EXPECT_NEAR(r, 2.0, 1e-6);
    EXPECT_EQ(chk.verdict, TheoremVerdict::AreNotOne);
    EXPECT_FALSE(chk.nondegeneracy_failure);
    EXPECT_TRUE(chk.assumes_mu_condition);
}

TEST(Theorem, AlRatioDiverges) {
    const auto chk = theorem_check(find_model("micd-al"), {0.4, 0.2, 0.1, 0.05});
    for (std::size_t i = 0; i < chk.theta_grid.size(); ++i) {
        const double th = chk.theta_grid[i];
        EXPECT_NEAR(chk.ratio_ii[i], (3.0 - th) / th, 1e-6);
    }
    EXPECT_EQ(chk.verdict, TheoremVerdict::AreNotOne);
}

TEST(Theorem, PlackettTrendsToOne) {
    const auto chk = theorem_check(find_model("plackett"), {0.4, 0.2, 0.1, 0.05, 0.025});
    EXPECT_EQ(chk.verdict, TheoremVerdict::AreIsOne);
    for (std::size_t i = 0; i < chk.ratio_ii.size(); ++i)
        EXPECT_NEAR(chk.ratio_ii[i] - 1.0, chk.ratio_iii[i], 1e-9);
}

TEST(Theorem, GridValidation) {
    EXPECT_THROW(theorem_check(find_model("fgm"), {}), ConfigError);
    EXPECT_THROW(theorem_check(find_model("fgm"), {0.1, 0.2}), ConfigError);
    EXPECT_THROW(theorem_check(find_model("fgm"), {0.2, -0.1}), ConfigError);
}

TEST(Snd, PlackettDerivIntegral) {
    const auto d = snd_diagnostics(find_model("plackett"), 0.05);
    EXPECT_NEAR(d.deriv_integral, 1.0 / 36.0, 1e-6);
    EXPECT_GT(d.variation, 0.0);
    EXPECT_GT(d.kolmogorov, 0.0);
    EXPECT_NEAR(d.product_over_theta, d.variation * d.kolmogorov / 0.05, 1e-12);
}

TEST(Snd, AlDegenerateIntegralNonzeroPointwise) {
    const auto d = snd_diagnostics(find_model("micd-al"), 0.05);
    EXPECT_NEAR(d.deriv_integral, 0.0, 1e-6);
    // while the pointwise right-derivative of F in theta is nonzero a.e.
    const auto& al = find_model("micd-al");
    const double h = 1e-6;
    const double fd = (al.cdf(h, 0.2, 0.3) - al.cdf(0.0, 0.2, 0.3)) / h;
    EXPECT_GT(std::abs(fd), 0.01);
}

TEST(Snd, FgmSlopeConstant) {
    const auto d1 = snd_diagnostics(find_model("fgm"), 0.3);
    const auto d2 = snd_diagnostics(find_model("fgm"), 0.7);
    EXPECT_NEAR(d1.slope, 1.0 / 36.0, 1e-10);
    EXPECT_NEAR(d2.slope, 1.0 / 36.0, 1e-10);
}

TEST(Snd, RequiresNonzeroTheta) {
    EXPECT_THROW(snd_diagnostics(find_model("fgm"), 0.0), DomainError);
}
