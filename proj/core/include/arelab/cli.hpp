#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace arelab::cli {

struct StatConfig {
    std::string input;
};

struct AreConfig {
    std::string model;
    double theta0 = 0.0;
    std::string method = "numeric";  // closed-form | numeric
    std::string side = "two-sided";
};

struct CurveConfig {
    std::string model;
    double from = 0.0;
    double to = 0.0;
    int steps = 1;
    std::string method = "closed-form";
    std::string out;
};

struct SampleConfig {
    std::string model;
    double theta = 0.0;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct PowerConfig {
    std::string model;
    double theta0 = 0.0;
    double theta = 0.0;
    double alpha = 0.05;
    double beta = 0.1;
    int reps = 1000;
    std::uint64_t seed = 0;
};

struct CheckConfig {
    std::string suite;
};

// Each command writes its report to `out` and returns the process exit code
// (0 on success); failures surface as arelab::Error with the exit code
// attached (2 config, 3 numeric, 4 I/O).
int run_stat(const StatConfig& cfg, std::ostream& out);
int run_are(const AreConfig& cfg, std::ostream& out);
int run_curve(const CurveConfig& cfg, std::ostream& out);
int run_sample(const SampleConfig& cfg, std::ostream& out);
int run_power(const PowerConfig& cfg, std::ostream& out);
int run_check(const CheckConfig& cfg, std::ostream& out);

}  // namespace arelab::cli
