// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "arelab/are.hpp"
#include "arelab/asymptotics.hpp"
#include "arelab/cli.hpp"
#include "arelab/io.hpp"
#include "arelab/models.hpp"
#include "arelab/power.hpp"
#include "arelab/rank_stats.hpp"
#include "arelab/rng.hpp"

using namespace arelab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Criterion = std::function<Outcome()>;

// ---- helpers ---------------------------------------------------------------

PairedSample random_sample(Rng& rng, int n) {
    PairedSample s;
    for (int i = 0; i < n; ++i) {
        s.x.push_back(rng.uniform());
        s.y.push_back(rng.uniform());
    }
    return s;
}

double kendall_brute(const PairedSample& s) {
    const std::size_t n = s.size();
    long long c = 0, d = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            ((s.x[i] - s.x[j]) * (s.y[i] - s.y[j]) > 0 ? c : d) += 1;
    return static_cast<double>(c - d) / (static_cast<double>(n) * (n - 1) / 2.0);
}

double pearson_of_ranks(const PairedSample& s) {
    const auto rx = ranks(s.x);
    const auto ry = ranks(s.y);
    const std::size_t n = s.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

double u_tilde_brute(const PairedSample& s) {
    const std::size_t n = s.size();
    auto I = [&](std::size_t i, std::size_t j) { return s.x[i] > s.x[j] ? 1 : 0; };
    auto J = [&](std::size_t i, std::size_t j) { return s.y[i] > s.y[j] ? 1 : 0; };
    long long sum = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                sum += I(i, j) * J(i, k) + I(i, k) * J(i, j) + I(j, i) * J(j, k) +
                       I(j, k) * J(j, i) + I(k, i) * J(k, j) + I(k, j) * J(k, i);
    return static_cast<double>(sum) / (static_cast<double>(n) * (n - 1) * (n - 2) / 6.0);
}

const MicdVariant kVariants[] = {MicdVariant::AS, MicdVariant::AL, MicdVariant::OS,
                                 MicdVariant::OL};

const DependenceModel& micd_model(MicdVariant v) {
    switch (v) {
        case MicdVariant::AS: return find_model("micd-as");
        case MicdVariant::AL: return find_model("micd-al");
        case MicdVariant::OS: return find_model("micd-os");
        default: return find_model("micd-ol");
    }
}

std::string fmt(double v) { return format_double(v); }

// ---- criteria ---------------------------------------------------------------

Outcome criterion_null_constants() {
    double worst_t = 0.0, worst_s = 0.0;
    for (const auto& name : model_names()) {
        const auto& m = find_model(name);
        worst_t = std::max(worst_t, std::abs(sigma2_t(m, 0.0) - 4.0 / 9.0));
        worst_s = std::max(worst_s, std::abs(sigma2_s(m, 0.0) - 1.0));
    }
    return {worst_t <= 1e-9 && worst_s <= 1e-9,
            "max |sigma2_t - 4/9| = " + fmt(worst_t) + ", max |sigma2_s - 1| = " +
                fmt(worst_s) + " over " + std::to_string(model_names().size()) +
                " models (tol 1e-9)"};
}

Outcome criterion_closed_anchors() {
    const bool ok = are_closed_micd(MicdVariant::AS, 0.0) == 1.0 &&
                    are_closed_micd(MicdVariant::OS, 0.0) == 1.0 &&
                    are_closed_micd(MicdVariant::OL, 0.0) == 2.25 &&
                    std::isinf(are_closed_micd(MicdVariant::AL, 0.0));
    return {ok, "AS(0)=1, OS(0)=1, OL(0)=9/4, AL(0)=inf, all exact"};
}

Outcome criterion_cross_validation() {
    double worst = 0.0;
    std::string where;
    for (auto v : kVariants) {
        const auto& m = micd_model(v);
        for (int i = 1; i <= 9; ++i) {
            const double th = 0.1 * i;
            const double closed = are_closed_micd(v, th);
            const double numeric = are_numeric(m, th).value;
            const double rel = std::abs(numeric - closed) / closed;
            if (rel > worst) {
                worst = rel;
                where = m.name() + " theta=" + fmt(th);
            }
        }
    }
    return {worst <= 5e-3, "max relative deviation " + fmt(worst) + " at " + where +
                               " (tol 5e-3, all four variants, theta 0.1..0.9)"};
}

Outcome criterion_smooth_models() {
    double worst = 0.0;
    std::string where;
    for (const char* name : {"fgm", "plackett", "frank", "bvn"}) {
        const double dev = std::abs(are_numeric(find_model(name), 0.0).value - 1.0);
        if (dev > worst) {
            worst = dev;
            where = name;
        }
    }
    return {worst <= 1e-3,
            "max |are(0) - 1| = " + fmt(worst) + " at " + where + " (tol 1e-3)"};
}

Outcome criterion_theorem_degenerate() {
    std::vector<double> grid;
    for (int i = 10; i >= 1; --i) grid.push_back(0.05 * i);
    const auto ol = theorem_check(find_model("micd-ol"), grid);
    double worst_ratio = 0.0;
    for (double r : ol.ratio_ii) worst_ratio = std::max(worst_ratio, std::abs(r - 2.0));
    const auto al = theorem_check(find_model("micd-al"), grid);
    double worst_poly = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double th = grid[i];
        worst_poly = std::max(worst_poly, std::abs(al.e_null_a[i] - th * th * th / 12.0));
        worst_poly =
            std::max(worst_poly, std::abs(al.e_theta_a[i] - (3.0 - th) * th * th / 12.0));
    }
    return {worst_ratio <= 1e-6 && worst_poly <= 1e-9,
            "max |OL ratio - 2| = " + fmt(worst_ratio) + " (tol 1e-6), max AL polynomial dev = " +
                fmt(worst_poly) + " (tol 1e-9)"};
}

Outcome criterion_statistic_oracles() {
    Rng rng(60301);
    double worst_k = 0.0, worst_s = 0.0, worst_u = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform() * 199);
        const auto s = random_sample(rng, n);
        worst_k = std::max(worst_k, std::abs(kendall_t(s) - kendall_brute(s)));
        if (n >= 3) worst_s = std::max(worst_s, std::abs(spearman_s(s) - pearson_of_ranks(s)));
    }
    for (int n = 3; n <= 60; ++n) {
        const auto s = random_sample(rng, n);
        worst_u = std::max(worst_u, std::abs(spearman_u_tilde(s) - u_tilde_brute(s)));
    }
    return {worst_k == 0.0 && worst_s <= 1e-12 && worst_u == 0.0,
            "kendall exact (" + fmt(worst_k) + "), spearman vs pearson-of-ranks " +
                fmt(worst_s) + " (tol 1e-12), u-tilde exact (" + fmt(worst_u) + ")"};
}

Outcome criterion_s_relation() {
    Rng rng(60377);
    std::vector<double> max_per_n;
    for (int n : {10, 30, 100, 300}) {
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            const auto s = random_sample(rng, n);
            worst = std::max(
                worst, n * std::abs(spearman_s(s) - (2.0 * spearman_u_tilde(s) - 3.0)));
        }
        max_per_n.push_back(worst);
    }
    bool bounded = true;
    for (double v : max_per_n) bounded = bounded && v <= 100.0;
    const bool non_exploding = max_per_n.back() <= 1.5 * max_per_n.front() + 1.0;
    std::string detail = "n-scaled remainder maxima";
    for (double v : max_per_n) detail += " " + fmt(v);
    return {bounded && non_exploding, detail + " over n in {10,30,100,300}"};
}

Outcome criterion_are_at_least_one() {
    double lowest = std::numeric_limits<double>::infinity();
    for (auto v : kVariants)
        for (int k = -999; k <= 999; ++k)
            lowest = std::min(lowest, are_closed_micd(v, k * 1e-3));
    return {lowest >= 1.0 - 1e-12,
            "min closed-form value " + fmt(lowest) + " over the 1e-3 grid of all variants"};
}

Outcome criterion_monte_carlo_efficiency() {
    PowerExperiment main_exp{"bvn", 0.0, 0.15, 0.05, 0.1, 10000, 8191};
    const auto r1 = efficiency_ratio(main_exp);
    const bool size_ok = std::abs(r1.size_t_test.power - main_exp.alpha) <= 0.01 &&
                         std::abs(r1.size_s_test.power - main_exp.alpha) <= 0.01;
    const bool ratio_ok = r1.ratio >= 0.85 && r1.ratio <= 1.15;

    PowerExperiment alt_exp = main_exp;
    alt_exp.alpha = 0.10;
    alt_exp.beta = 0.20;
    alt_exp.seed = 9173;
    const auto r2 = efficiency_ratio(alt_exp);
    const bool invariant =
        std::abs(r1.ratio - r2.ratio) <= 2.0 * (r1.ratio_se + r2.ratio_se);

    return {size_ok && ratio_ok && invariant,
            "sizes " + fmt(r1.size_t_test.power) + "/" + fmt(r1.size_s_test.power) +
                " (alpha 0.05 +- 0.01), ratio " + fmt(r1.ratio) + " in [0.85, 1.15], second "
                "(alpha,beta) ratio " +
                fmt(r2.ratio) + " within 2 SE (" + fmt(2.0 * (r1.ratio_se + r2.ratio_se)) +
                ")"};
}

Outcome criterion_curves() {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "arelab_acceptance";
    fs::create_directories(dir);
    std::ostringstream sink;

    bool ok = true;
    std::string detail;

    // closed-form curves over [0, 0.95]
    for (auto v : kVariants) {
        const auto& m = micd_model(v);
        const auto path = (dir / (m.name() + "_closed.csv")).string();
        cli::run_curve({m.name(), 0.0, 0.95, 20, "closed-form", path}, sink);
        const auto pts = read_curve_csv_file(path);
        if (pts.size() != 20) ok = false;
        for (const auto& p : pts)
            if (!(std::isinf(p.are) || p.are >= 1.0 - 1e-12)) ok = false;
        switch (v) {
            case MicdVariant::AS:
                for (const auto& p : pts) ok = ok && p.are == 1.0;
                break;
            case MicdVariant::AL:
                ok = ok && std::isinf(pts.front().are);
                for (std::size_t i = 2; i < pts.size(); ++i)
                    ok = ok && pts[i].are < pts[i - 1].are && std::isfinite(pts[i].are);
                break;
            case MicdVariant::OS:
                ok = ok && pts.front().are == 1.0;
                break;
            case MicdVariant::OL:
                ok = ok && pts.front().are == 2.25;
                for (const auto& p : pts) ok = ok && std::isfinite(p.are);
                break;
        }
    }
    if (!ok) detail = "closed-form curve shapes failed; ";

    // numeric curves against the closed-form ones at theta 0.1..0.9
    double worst = 0.0;
    for (auto v : kVariants) {
        const auto& m = micd_model(v);
        const auto num_path = (dir / (m.name() + "_numeric.csv")).string();
        cli::run_curve({m.name(), 0.1, 0.9, 9, "numeric", num_path}, sink);
        const auto pts = read_curve_csv_file(num_path);
        for (const auto& p : pts)
            worst = std::max(worst,
                             std::abs(p.are - are_closed_micd(v, p.theta)) /
                                 are_closed_micd(v, p.theta));
    }
    ok = ok && worst <= 5e-3;
    return {ok, detail + "AS flat at 1, AL divergent at 0, OS/OL finite >= 1; numeric vs "
                         "closed max rel dev " +
                    fmt(worst) + " (tol 5e-3)"};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        Criterion run;
    };
    const std::vector<Entry> criteria = {
        {1, "exact null constants sigma2_t = 4/9, sigma2_s = 1", criterion_null_constants},
        {2, "closed-form MICD anchors at theta 0", criterion_closed_anchors},
        {3, "numeric vs closed-form cross-validation", criterion_cross_validation},
        {4, "smooth models have efficiency 1 at theta 0", criterion_smooth_models},
        {5, "degenerate-case ratio limits (OL constant 2, AL cubic)",
         criterion_theorem_degenerate},
        {6, "statistic oracles (fast vs brute force)", criterion_statistic_oracles},
        {7, "Spearman vs U-statistic remainder bounded", criterion_s_relation},
        {8, "closed-form efficiency >= 1 scan", criterion_are_at_least_one},
        {9, "Monte Carlo size and sample-size ratio", criterion_monte_carlo_efficiency},
        {10, "efficiency curve reproduction via the CLI", criterion_curves},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const auto secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s — %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                    c.id, c.label, outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
