#pragma once

#include <Eigen/Dense>

namespace randg {

using Vec2 = Eigen::Vector2d;

/// Circular cell with a concentric nuclear disk. All lengths in micrometers.
///
/// The cytoplasm is the annulus between nucleus_radius and cell_radius; the
/// nucleus is the inner disk. The plasma membrane is the outer circle, the
/// nuclear envelope the inner one.
struct CellGeometry {
  double cell_radius = 10.0;
  double nucleus_radius = 4.0;
  Vec2 center = Vec2::Zero();

  /// Throws std::invalid_argument unless 0 < nucleus_radius < cell_radius.
  void validate() const;

  double nucleus_area() const;
  double cytoplasm_area() const;
  double envelope_perimeter() const;  // length of the nuclear envelope circle
};

}  // namespace randg
