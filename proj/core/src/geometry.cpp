#include "randg/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace randg {

void CellGeometry::validate() const {
  if (!(nucleus_radius > 0.0)) {
    throw std::invalid_argument("CellGeometry: nucleus_radius must be positive, got " +
                                std::to_string(nucleus_radius));
  }
  if (!(nucleus_radius < cell_radius)) {
    throw std::invalid_argument("CellGeometry: nucleus_radius (" + std::to_string(nucleus_radius) +
                                ") must be smaller than cell_radius (" +
                                std::to_string(cell_radius) + ")");
  }
  if (!std::isfinite(cell_radius) || !std::isfinite(center.x()) || !std::isfinite(center.y())) {
    throw std::invalid_argument("CellGeometry: non-finite geometry value");
  }
}

double CellGeometry::nucleus_area() const {
  return std::numbers::pi * nucleus_radius * nucleus_radius;
}

double CellGeometry::cytoplasm_area() const {
  return std::numbers::pi * (cell_radius * cell_radius - nucleus_radius * nucleus_radius);
}

double CellGeometry::envelope_perimeter() const {
  return 2.0 * std::numbers::pi * nucleus_radius;
}

}  // namespace randg
