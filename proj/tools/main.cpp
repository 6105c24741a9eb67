#include <iostream>

#include <CLI11.hpp>

#include "arelab/cli.hpp"
#include "arelab/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Pitman efficiency toolkit for Kendall's T vs Spearman's S"};
    app.require_subcommand(1);

    arelab::cli::StatConfig stat_cfg;
    auto* stat = app.add_subcommand("stat", "Rank statistics and null z-tests for a CSV sample");
    stat->add_option("--in", stat_cfg.input, "input CSV with header x,y")->required();

    arelab::cli::AreConfig are_cfg;
    auto* are = app.add_subcommand("are", "Asymptotic relative efficiency at theta0");
    are->add_option("--model", are_cfg.model)->required();
    are->add_option("--theta0", are_cfg.theta0)->required();
    are->add_option("--method", are_cfg.method, "closed-form|numeric")->required();
    are->add_option("--side", are_cfg.side, "left|right|two-sided");

    arelab::cli::CurveConfig curve_cfg;
    auto* curve = app.add_subcommand("curve", "Efficiency curve over a theta grid, CSV output");
    curve->add_option("--model", curve_cfg.model)->required();
    curve->add_option("--from", curve_cfg.from)->required();
    curve->add_option("--to", curve_cfg.to)->required();
    curve->add_option("--steps", curve_cfg.steps)->required();
    curve->add_option("--method", curve_cfg.method, "closed-form|numeric")->required();
    curve->add_option("--out", curve_cfg.out)->required();

    arelab::cli::SampleConfig sample_cfg;
    auto* sample = app.add_subcommand("sample", "Draw a reproducible sample from a model");
    sample->add_option("--model", sample_cfg.model)->required();
    sample->add_option("--theta", sample_cfg.theta)->required();
    sample->add_option("--n", sample_cfg.n)->required();
    sample->add_option("--seed", sample_cfg.seed)->required();
    sample->add_option("--out", sample_cfg.out)->required();

    arelab::cli::PowerConfig power_cfg;
    auto* power = app.add_subcommand("power", "Monte Carlo size/power and sample-size ratio");
    power->add_option("--model", power_cfg.model)->required();
    power->add_option("--theta0", power_cfg.theta0)->required();
    power->add_option("--theta", power_cfg.theta)->required();
    power->add_option("--alpha", power_cfg.alpha)->required();
    power->add_option("--beta", power_cfg.beta)->required();
    power->add_option("--reps", power_cfg.reps)->required();
    power->add_option("--seed", power_cfg.seed)->required();

    arelab::cli::CheckConfig check_cfg;
    auto* check = app.add_subcommand("check", "Verification suites with pass/fail lines");
    check->add_option("--suite", check_cfg.suite, "constants|micd|theorem|oracle")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*stat) return arelab::cli::run_stat(stat_cfg, std::cout);
        if (*are) return arelab::cli::run_are(are_cfg, std::cout);
        if (*curve) return arelab::cli::run_curve(curve_cfg, std::cout);
        if (*sample) return arelab::cli::run_sample(sample_cfg, std::cout);
        if (*power) return arelab::cli::run_power(power_cfg, std::cout);
        if (*check) return arelab::cli::run_check(check_cfg, std::cout);
    } catch (const arelab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
