#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arelab/model.hpp"

namespace arelab {

// Shortest representation that round-trips through parsing (std::to_chars).
std::string format_double(double v);

// "x,y"-headed CSV of finite floats; throws ParseError with the line number,
// TieError naming the offending column.
PairedSample read_xy_csv(std::istream& in, const std::string& source_name);
PairedSample read_xy_csv_file(const std::string& path);

void write_xy_csv(std::ostream& out, const PairedSample& sample);
void write_xy_csv_file(const std::string& path, const PairedSample& sample);

struct CurvePoint {
    double theta = 0.0;
    double are = 0.0;  // +infinity serialized as "inf"
};

std::vector<CurvePoint> read_curve_csv(std::istream& in, const std::string& source_name);
std::vector<CurvePoint> read_curve_csv_file(const std::string& path);
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);
void write_curve_csv_file(const std::string& path, const std::vector<CurvePoint>& points);

}  // namespace arelab
