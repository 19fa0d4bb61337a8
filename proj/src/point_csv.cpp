#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/measures.hpp"

namespace riesz {

void write_points_csv(std::ostream& out, const PointConfig& points) {
  for (std::size_t i = 0; i < points.dim(); ++i) out << (i ? ",x" : "x") << i + 1;
  out << "\n";
  char buf[32];
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto p = points[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      if (i) out << ',';
      out << buf;
    }
    out << "\n";
  }
}

PointConfig read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("points CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t dim = 0;
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name != "x" + std::to_string(dim + 1)) throw ParseError("points CSV header must be x1,...,xd; got '" + line + "'");
      ++dim;
    }
  }
  if (dim == 0) throw ParseError("points CSV header has no columns");
  PointConfig points(dim);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Point p;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(cell, &used));
        if (used != cell.size() || !std::isfinite(p.back())) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("points CSV row " + std::to_string(row) + ": bad number '" + cell + "'");
      }
    }
    if (p.size() != dim) throw ParseError("points CSV row " + std::to_string(row) + " has the wrong number of columns");
    points.push_back(p);
  }
  return points;
}

}  // namespace riesz
