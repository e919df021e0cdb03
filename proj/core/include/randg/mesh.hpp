#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "randg/geometry.hpp"

namespace randg {

enum class Subdomain : std::uint8_t { Cytoplasm = 1, Nucleus = 2 };

/// Skeleton face classification. The skeleton decomposes into three disjoint
/// sets: faces on the plasma membrane, faces interior to one compartment, and
/// faces on the nuclear envelope (shared by a cytoplasm and a nucleus element).
enum class FaceKind : std::uint8_t { OuterBoundary, Interior, Transmission };

const char* to_string(FaceKind kind);
const char* to_string(Subdomain sub);

struct MeshElement {
  std::array<int, 3> v;  // vertex indices, counterclockwise
  Subdomain subdomain;
  int degree;  // polynomial degree tag m_kappa
};

struct MeshFace {
  std::array<int, 2> v;  // endpoint vertex indices
  int elem_plus;         // always a valid element; cytoplasm side on transmission faces
  int elem_minus;        // -1 on the outer boundary
  FaceKind kind;
  Vec2 normal;  // unit normal pointing out of elem_plus
  double length;
};

/// Per-element diameter h and degree m, plus their face means. On a shared
/// face the value is the average of the two neighbors; on a boundary face it
/// is the single neighbor's value.
struct MeshQuantities {
  std::vector<double> element_h;
  std::vector<double> face_h;
  std::vector<double> element_m;
  std::vector<double> face_m;
};

/// Conforming triangulation of the two-compartment cell. Immutable after
/// construction; concurrent reads are safe.
class Mesh {
 public:
  Mesh(CellGeometry geometry, std::vector<Vec2> vertices, std::vector<MeshElement> elements);

  const CellGeometry& geometry() const { return geometry_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<MeshElement>& elements() const { return elements_; }
  const std::vector<MeshFace>& faces() const { return faces_; }

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_elements() const { return static_cast<int>(elements_.size()); }
  int n_faces() const { return static_cast<int>(faces_.size()); }

  const Vec2& vertex(int v) const { return vertices_[v]; }
  const MeshElement& element(int e) const { return elements_[e]; }
  const MeshFace& face(int f) const;  // throws on unknown id

  FaceKind classify_face(int f) const { return face(f).kind; }

  /// Unit outward normal of `f` as seen from `from_element`; throws if the
  /// element is not adjacent to the face.
  Vec2 face_normal(int f, int from_element) const;

  double element_area(int e) const { return areas_[e]; }
  double element_diameter(int e) const { return diameters_[e]; }
  Vec2 element_centroid(int e) const;
  std::array<Vec2, 3> element_vertices(int e) const;

  double max_diameter() const;
  double subdomain_area(Subdomain s) const;
  double total_area() const { return subdomain_area(Subdomain::Cytoplasm) + subdomain_area(Subdomain::Nucleus); }
  /// Total length of the transmission faces (polygonal nuclear envelope).
  double transmission_perimeter() const;

  std::vector<int> faces_of_kind(FaceKind kind) const;

  MeshQuantities quantities() const;

  /// Plain-text dump: header line with counts, then vertex / element / face
  /// records. See README for the format.
  void write(std::ostream& os) const;

 private:
  void build_faces();

  CellGeometry geometry_;
  std::vector<Vec2> vertices_;
  std::vector<MeshElement> elements_;
  std::vector<MeshFace> faces_;
  std::vector<double> areas_;
  std::vector<double> diameters_;
};

/// Builds a conforming triangulation of the cell disk in which every element
/// lies entirely in one compartment and the nuclear envelope is resolved by a
/// closed polygon of element faces. Circles are approximated by straight
/// edges; vertices of the ring at nucleus_radius are shared by both
/// compartments. Throws std::invalid_argument on degenerate geometry,
/// non-positive target_h, or degree < 1.
Mesh build_disk_mesh(const CellGeometry& geometry, double target_h, int degree);

}  // namespace randg
