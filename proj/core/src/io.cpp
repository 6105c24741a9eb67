#include "arelab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "arelab/errors.hpp"

namespace arelab {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_field(std::string_view field, const std::string& source, std::size_t line_no,
                   bool allow_inf) {
    if (allow_inf && (field == "inf" || field == "+inf")) {
        return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(source + ":" + std::to_string(line_no) + ": cannot parse number '" +
                         std::string(field) + "'");
    return v;
}

void check_column_ties(const std::vector<double>& v, const char* column) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw TieError(std::string("tied values in column ") + column + " (value " +
                           format_double(sorted[i]) + ")");
}

}  // namespace

PairedSample read_xy_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "x,y")
        throw ParseError(source + ":1: expected header 'x,y'");
    PairedSample sample;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(source + ":" + std::to_string(line_no) + ": expected 'x,y' row");
        const double x = parse_field(std::string_view(line).substr(0, comma), source, line_no,
                                     false);
        const double y = parse_field(std::string_view(line).substr(comma + 1), source, line_no,
                                     false);
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError(source + ":" + std::to_string(line_no) + ": non-finite value");
        sample.x.push_back(x);
        sample.y.push_back(y);
    }
    check_column_ties(sample.x, "x");
    check_column_ties(sample.y, "y");
    return sample;
}

PairedSample read_xy_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_xy_csv(in, path);
}

void write_xy_csv(std::ostream& out, const PairedSample& sample) {
    out << "x,y\n";
    for (std::size_t i = 0; i < sample.size(); ++i)
        out << format_double(sample.x[i]) << ',' << format_double(sample.y[i]) << '\n';
}

void write_xy_csv_file(const std::string& path, const PairedSample& sample) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_xy_csv(out, sample);
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<CurvePoint> read_curve_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "theta,are")
        throw ParseError(source + ":1: expected header 'theta,are'");
    std::vector<CurvePoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(source + ":" + std::to_string(line_no) + ": expected 'theta,are'");
        CurvePoint p;
        p.theta = parse_field(std::string_view(line).substr(0, comma), source, line_no, false);
        p.are = parse_field(std::string_view(line).substr(comma + 1), source, line_no, true);
        points.push_back(p);
    }
    return points;
}

std::vector<CurvePoint> read_curve_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_curve_csv(in, path);
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "theta,are\n";
    for (const auto& p : points) {
        out << format_double(p.theta) << ',';
        if (std::isinf(p.are))
            out << "inf";
        else
            out << format_double(p.are);
        out << '\n';
    }
}

void write_curve_csv_file(const std::string& path, const std::vector<CurvePoint>& points) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_curve_csv(out, points);
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace arelab
