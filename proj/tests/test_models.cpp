#include "arelab/models.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "arelab/errors.hpp"
#include "arelab/rng.hpp"

using namespace arelab;

TEST(Plackett, ClosedFormAnchors) {
    EXPECT_NEAR(plackett_cdf(0.0, 0.3, 0.8), 0.24, 1e-15);
    for (double u : {0.0, 0.2, 0.9}) {
        EXPECT_NEAR(plackett_cdf(1.7, 1.0, u), u, 1e-14);
        EXPECT_NEAR(plackett_cdf(1.7, u, 1.0), u, 1e-14);
    }
    // 2*2*0.25 / (2 + sqrt(2)) = 1/(2+sqrt 2), worked by hand
    EXPECT_NEAR(plackett_cdf(1.0, 0.5, 0.5), 0.29289321881345248, 1e-15);
}

TEST(Plackett, RootProperty) {
    // the closed form solves F - uv = theta (u - F)(v - F) everywhere
    double worst = 0.0;
    for (double th : {-0.9, -0.3, 0.5, 1.0, 4.0, 20.0})
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j <= 10; ++j) {
                const double u = i / 10.0, v = j / 10.0;
                const double f = plackett_cdf(th, u, v);
                worst = std::max(worst, std::abs(f - u * v - th * (u - f) * (v - f)));
            }
    EXPECT_LE(worst, 1e-10);
}

TEST(Plackett, DomainError) {
    EXPECT_THROW(plackett_cdf(-1.0, 0.5, 0.5), DomainError);
}

TEST(Plackett, DerivativeAtZeroMatchesProduct) {
    // dF/dtheta|_0 = u(1-u) v(1-v), via central differences
    const double h = 1e-5;
    for (double u : {0.2, 0.5, 0.8})
        for (double v : {0.1, 0.35, 0.9}) {
            const double fd = (plackett_cdf(h, u, v) - plackett_cdf(-h, u, v)) / (2.0 * h);
            EXPECT_NEAR(fd, u * (1.0 - u) * v * (1.0 - v), 1e-6);
        }
}

TEST(Plackett, DensityMatchesMixedDerivative) {
    const auto model = make_plackett();
    const auto* p = dynamic_cast<const PlackettModel*>(model.get());
    ASSERT_NE(p, nullptr);
    const double h = 1e-5;
    for (double th : {0.5, 3.0})
        for (double u : {0.3, 0.6})
            for (double v : {0.25, 0.75}) {
                const double mixed = (plackett_cdf(th, u + h, v + h) -
                                      plackett_cdf(th, u + h, v - h) -
                                      plackett_cdf(th, u - h, v + h) +
                                      plackett_cdf(th, u - h, v - h)) /
                                     (4.0 * h * h);
                EXPECT_NEAR(p->pdf(th, u, v), mixed, 1e-5);
            }
}

TEST(Frank, ClosedFormAnchors) {
    EXPECT_NEAR(frank_cdf(2.0, 0.5, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(frank_cdf(2.0, 0.0, 0.7), 0.0, 1e-15);
    // direct evaluation, cross-checked through two arithmetic paths
    EXPECT_NEAR(frank_cdf(2.0, 0.5, 0.5), 0.31005725347913876, 1e-14);
    const double alt = -std::log(1.0 + (std::exp(-1.0) - 1.0) * (std::exp(-1.0) - 1.0) /
                                           (std::exp(-2.0) - 1.0)) /
                       2.0;
    EXPECT_NEAR(frank_cdf(2.0, 0.5, 0.5), alt, 1e-14);
}

TEST(Frank, ContinuityThroughZero) {
    // theta -> 0 limit is the product copula; the Taylor switch at 1e-6 must
    // join the expm1/log1p path seamlessly.
    EXPECT_EQ(frank_cdf(0.0, 0.3, 0.7), 0.21);
    for (double th : {1e-12, 1e-8, 9.9e-7, 1.01e-6, 1e-5, 1e-3})
        for (double sign : {-1.0, 1.0}) {
            const double f = frank_cdf(sign * th, 0.3, 0.7);
            // linear prediction, quadratic-term allowance
            EXPECT_NEAR(f, 0.21 + sign * th * 0.5 * 0.3 * 0.7 * 0.7 * 0.3,
                        1e-3 * th * th + 1e-14);
        }
    // the two arithmetic paths agree inside the Taylor window
    for (double th : {1e-7, 5e-7, -8e-7}) {
        const double a = -std::expm1(-th * 0.4);
        const double b = -std::expm1(-th * 0.6);
        const double d = -std::expm1(-th);
        const double log_form = -std::log1p(-a * b / d) / th;
        EXPECT_NEAR(frank_cdf(th, 0.4, 0.6), log_form, 1e-14);
    }
}

TEST(Frank, DerivativeAtZeroIsHalfPlackett) {
    const double h = 1e-5;
    for (double u : {0.2, 0.5, 0.8})
        for (double v : {0.1, 0.35, 0.9}) {
            const double fd = (frank_cdf(h, u, v) - frank_cdf(-h, u, v)) / (2.0 * h);
            EXPECT_NEAR(fd, 0.5 * u * (1.0 - u) * v * (1.0 - v), 1e-6);
        }
}

TEST(Fgm, CdfAndDomain) {
    const auto& fgm = find_model("fgm");
    EXPECT_NEAR(fgm.cdf(0.5, 0.5, 0.5), 0.25 + 0.5 * 0.25 * 0.25, 1e-15);
    EXPECT_TRUE(fgm.theta_domain().contains(0.99));
    EXPECT_FALSE(fgm.theta_domain().contains(1.0));
    EXPECT_FALSE(fgm.theta_domain().contains(-1.0));
}

TEST(Fgm, AutoDomainEstimation) {
    // Same Delta surface without closed-form derivatives: the estimated
    // admissible interval should come out near (-1, 1).
    LinearModel generic("fgm-generic", [](double u, double v) {
        return u * v * (1.0 - u) * (1.0 - v);
    });
    EXPECT_NEAR(generic.theta_domain().lo, -1.0, 0.05);
    EXPECT_NEAR(generic.theta_domain().hi, 1.0, 0.05);
    EXPECT_NEAR(generic.cdf(0.5, 0.3, 0.6), find_model("fgm").cdf(0.5, 0.3, 0.6), 1e-9);
}

TEST(Micd, IndependenceAtZero) {
    for (const char* name : {"micd-as", "micd-al", "micd-os", "micd-ol"}) {
        const auto& m = find_model(name);
        for (double u : {-0.4, -0.1, 0.0, 0.25})
            for (double v : {-0.3, 0.0, 0.45})
                EXPECT_NEAR(m.cdf(0.0, u, v), (u + 0.5) * (v + 0.5), 1e-14) << name;
    }
}

TEST(Micd, OlAnchor) {
    EXPECT_NEAR(micd_cdf({MicdVariant::OL}, 0.2, 0.0, 0.0), 0.26, 1e-15);
}

TEST(Micd, AsFullMass) {
    EXPECT_EQ(micd_cdf({MicdVariant::AS}, 0.4, 0.5, 0.5), 1.0);
}

TEST(Micd, DomainError) {
    EXPECT_THROW(micd_cdf({MicdVariant::AS}, 1.5, 0.0, 0.0), DomainError);
}

TEST(Micd, OlAssociationFormula) {
    // a_theta(u,v) = (theta/2 + min)(theta/2 - max) on the open center square
    const auto& ol = find_model("micd-ol");
    const double th = 0.3, t = th / 2.0;
    for (double u : {-0.13, -0.02, 0.05, 0.12})
        for (double v : {-0.11, 0.0, 0.14}) {
            const double expected = (std::max(std::abs(u), std::abs(v)) < t)
                                        ? (t + std::min(u, v)) * (t - std::max(u, v))
                                        : 0.0;
            EXPECT_NEAR(ol.cdf(th, u, v) - (u + 0.5) * (v + 0.5), expected, 1e-14);
        }
}

TEST(Micd, AsRightDerivativeAtZero) {
    // dF/dtheta at 0+ equals 1/4 + uv inside the square.  The mixture is not
    // two-sidedly differentiable in theta at 0 (the segments flip to the
    // anti-diagonal), so the stencil is one-sided.
    const auto& as = find_model("micd-as");
    const double h = 1e-6;
    for (double u : {-0.3, 0.0, 0.2})
        for (double v : {-0.25, 0.1, 0.4}) {
            const double fd = (as.cdf(h, u, v) - as.cdf(0.0, u, v)) / h;
            EXPECT_NEAR(fd, 0.25 + u * v, 1e-6);
        }
}

TEST(Micd, OsDerivativesAtZero) {
    // First one-sided theta-derivative 0, second 1/2.
    const auto& os = find_model("micd-os");
    const double h = 1e-4;
    for (double u : {-0.3, 0.05, 0.2})
        for (double v : {-0.2, 0.0, 0.35}) {
            const double f0 = os.cdf(0.0, u, v);
            const double f1 = os.cdf(h, u, v);
            const double f2 = os.cdf(2.0 * h, u, v);
            EXPECT_NEAR((f1 - f0) / h, 0.0, 2e-4);
            EXPECT_NEAR((f2 - 2.0 * f1 + f0) / (h * h), 0.5, 1e-3);
        }
}

TEST(Micd, ReflectionSymmetry) {
    // theta < 0 is the theta > 0 model with Y mirrored:
    // F_{-theta}(u, v) = G(u) - F_theta(u, -v).
    for (const char* name : {"micd-as", "micd-al", "micd-os", "micd-ol"}) {
        const auto& m = find_model(name);
        for (double th : {0.25, 0.6})
            for (double u : {-0.4, -0.05, 0.3})
                for (double v : {-0.35, 0.0, 0.2})
                    EXPECT_NEAR(m.cdf(-th, u, v), (u + 0.5) - m.cdf(th, u, -v), 1e-13)
                        << name;
    }
}

TEST(Micd, ExpectationTotalMass) {
    for (const char* name : {"micd-as", "micd-al", "micd-os", "micd-ol"}) {
        const auto& m = find_model(name);
        for (double th : {-0.7, 0.0, 0.2, 1.0})
            EXPECT_NEAR(m.expectation(th, [](double, double) { return 1.0; }), 1.0, 1e-12)
                << name;
    }
}

TEST(Micd, ExpectationAlAssociationIdentity) {
    // E_theta a_theta = (3 - theta) theta^2 / 12 for AL
    const auto& al = find_model("micd-al");
    for (double th : {0.2, 0.5, 0.8}) {
        auto breaks = al.cdf_axis_breaks(th);
        quad::Integrand2D a{[&](double x, double y) { return association(al, th, x, y); },
                            breaks, breaks, al.cdf_diag_kink(th)};
        EXPECT_NEAR(al.expectation(th, a), (3.0 - th) * th * th / 12.0, 1e-12);
    }
}

TEST(Micd, ExpectationReproducesCdf) {
    // E_theta of the rectangle indicator is the cdf; 100 random probes.
    Rng rng(991);
    const char* names[] = {"micd-as", "micd-al", "micd-os", "micd-ol"};
    for (int c = 0; c < 100; ++c) {
        const auto& m = find_model(names[c % 4]);
        const double th = rng.uniform(-0.95, 0.95);
        const double x = rng.uniform(-0.5, 0.5);
        const double y = rng.uniform(-0.5, 0.5);
        quad::Integrand2D g{[x, y](double u, double v) {
                                return (u <= x && v <= y) ? 1.0 : 0.0;
                            },
                            {x}, {y}, quad::DiagKink::None};
        EXPECT_NEAR(m.expectation(th, g), m.cdf(th, x, y), 1e-10)
            << names[c % 4] << " theta=" << th;
    }
}

TEST(Micd, OpaqueDiscontinuityFailsLoudly) {
    // Without breakpoint hints an indicator integrand cannot converge to the
    // requested tolerance; the error carries the achieved estimate.
    const auto& m = find_model("micd-as");
    quad::Integrand2D g{[](double u, double v) {
                            return (u <= 0.123456 && v <= 0.05) ? 1.0 : 0.0;
                        },
                        {}, {}, quad::DiagKink::None};
    EXPECT_THROW(m.expectation(0.4, g), ConvergenceError);
}

TEST(Registry, NamesAndLookup) {
    const auto names = model_names();
    EXPECT_EQ(names.size(), 8u);
    for (const char* expected : {"fgm", "bvn", "plackett", "frank", "micd-as", "micd-al",
                                 "micd-os", "micd-ol"})
        EXPECT_NO_THROW(find_model(expected));
    EXPECT_THROW(find_model("gauss"), ConfigError);
}
