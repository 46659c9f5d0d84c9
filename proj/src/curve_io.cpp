#include "zollech/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace zollech {

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace

void write_curve_csv(std::ostream& out, const PlanarCurve& curve) {
  curve.validate();
  out << "j,x,y,err\n";
  for (const auto& s : curve.samples) {
    out << format_double(s.j) << ',' << format_double(s.x) << ',' << format_double(s.y)
        << ',' << format_double(s.err) << '\n';
  }
}

PlanarCurve read_curve_csv(std::istream& in) {
  PlanarCurve curve;
  std::string line;
  if (!std::getline(in, line) || line.rfind("j,x,y,err", 0) != 0) {
    throw DomainError("curve CSV must start with the header j,x,y,err");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CurveSample s;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &s.j, &s.x, &s.y, &s.err) != 4) {
      throw DomainError("malformed curve CSV row: " + line);
    }
    curve.samples.push_back(s);
  }
  curve.validate();
  return curve;
}

std::string curve_to_json(const PlanarCurve& curve) {
  curve.validate();
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : curve.samples) {
    samples.push_back({{"j", s.j}, {"x", s.x}, {"y", s.y}, {"err", s.err}});
  }
  return samples.dump();
}

PlanarCurve curve_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (doc.is_object() && doc.contains("samples")) doc = doc["samples"];
  if (!doc.is_array()) throw DomainError("curve JSON must be an array of samples");
  PlanarCurve curve;
  for (const auto& item : doc) {
    curve.samples.push_back(CurveSample{item.at("j").get<double>(),
                                        item.at("x").get<double>(),
                                        item.at("y").get<double>(),
                                        item.at("err").get<double>()});
  }
  curve.validate();
  return curve;
}

void save_curve(const std::string& path, const PlanarCurve& curve) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    write_curve_csv(out, curve);
  } else {
    out << curve_to_json(curve) << '\n';
  }
}

PlanarCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (content[first] == '[' || content[first] == '{')) {
    return curve_from_json(content);
  }
  std::istringstream csv(content);
  return read_curve_csv(csv);
}

}  // namespace zollech
