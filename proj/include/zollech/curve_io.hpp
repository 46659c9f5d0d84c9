#pragma once

#include <iosfwd>
#include <string>

#include "zollech/moment_map.hpp"

namespace zollech {

// CSV with header "j,x,y,err", one row per sample, ordered by j.
void write_curve_csv(std::ostream& out, const PlanarCurve& curve);
PlanarCurve read_curve_csv(std::istream& in);

// JSON array of {"j":..., "x":..., "y":..., "err":...} records.
std::string curve_to_json(const PlanarCurve& curve);
PlanarCurve curve_from_json(const std::string& text);

// Writes CSV or JSON depending on the file extension (".csv" vs anything
// else); reads back detecting the format from the content.
void save_curve(const std::string& path, const PlanarCurve& curve);
PlanarCurve load_curve(const std::string& path);

}  // namespace zollech
