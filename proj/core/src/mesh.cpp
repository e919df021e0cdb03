#include "randg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace randg {

namespace {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

}  // namespace

const char* to_string(FaceKind kind) {
  switch (kind) {
    case FaceKind::OuterBoundary: return "boundary";
    case FaceKind::Interior: return "interior";
    case FaceKind::Transmission: return "transmission";
  }
  return "?";
}

const char* to_string(Subdomain sub) {
  return sub == Subdomain::Cytoplasm ? "cytoplasm" : "nucleus";
}

Mesh::Mesh(CellGeometry geometry, std::vector<Vec2> vertices, std::vector<MeshElement> elements)
    : geometry_(geometry), vertices_(std::move(vertices)), elements_(std::move(elements)) {
  geometry_.validate();
  areas_.reserve(elements_.size());
  diameters_.reserve(elements_.size());
  for (auto& el : elements_) {
    const Vec2& a = vertices_[el.v[0]];
    Vec2 b = vertices_[el.v[1]];
    Vec2 c = vertices_[el.v[2]];
    double area = signed_area(a, b, c);
    if (area < 0.0) {  // enforce counterclockwise orientation
      std::swap(el.v[1], el.v[2]);
      std::swap(b, c);
      area = -area;
    }
    if (!(area > 0.0)) {
      throw std::invalid_argument("Mesh: degenerate element with zero area");
    }
    areas_.push_back(area);
    diameters_.push_back(std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()}));
  }
  build_faces();
}

void Mesh::build_faces() {
  // Each undirected edge appears in at most two elements.
  std::map<std::pair<int, int>, std::array<int, 2>> edge_elems;
  for (int e = 0; e < n_elements(); ++e) {
    for (int k = 0; k < 3; ++k) {
      int a = elements_[e].v[k];
      int b = elements_[e].v[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto [it, inserted] = edge_elems.try_emplace({key.first, key.second}, std::array<int, 2>{e, -1});
      if (!inserted) {
        if (it->second[1] != -1) {
          throw std::invalid_argument("Mesh: edge shared by more than two elements");
        }
        it->second[1] = e;
      }
    }
  }

  faces_.reserve(edge_elems.size());
  for (const auto& [key, elems] : edge_elems) {
    MeshFace f;
    f.v = {key.first, key.second};
    f.elem_plus = elems[0];
    f.elem_minus = elems[1];
    if (f.elem_minus < 0) {
      f.kind = FaceKind::OuterBoundary;
    } else if (elements_[f.elem_plus].subdomain != elements_[f.elem_minus].subdomain) {
      f.kind = FaceKind::Transmission;
      // Keep the cytoplasm element on the plus side.
      if (elements_[f.elem_plus].subdomain != Subdomain::Cytoplasm) {
        std::swap(f.elem_plus, f.elem_minus);
      }
    } else {
      f.kind = FaceKind::Interior;
    }

    const Vec2& a = vertices_[f.v[0]];
    const Vec2& b = vertices_[f.v[1]];
    Vec2 tangent = b - a;
    f.length = tangent.norm();
    if (!(f.length > 0.0)) {
      throw std::invalid_argument("Mesh: zero-length face");
    }
    Vec2 n(tangent.y() / f.length, -tangent.x() / f.length);
    Vec2 mid = 0.5 * (a + b);
    if (n.dot(mid - element_centroid(f.elem_plus)) < 0.0) {
      n = -n;
    }
    f.normal = n;
    faces_.push_back(f);
  }
}

const MeshFace& Mesh::face(int f) const {
  if (f < 0 || f >= n_faces()) {
    throw std::invalid_argument("Mesh: unknown face id " + std::to_string(f));
  }
  return faces_[f];
}

Vec2 Mesh::face_normal(int f, int from_element) const {
  const MeshFace& fc = face(f);
  if (from_element == fc.elem_plus) return fc.normal;
  if (from_element == fc.elem_minus) return -fc.normal;
  throw std::invalid_argument("Mesh: element " + std::to_string(from_element) +
                              " is not adjacent to face " + std::to_string(f));
}

Vec2 Mesh::element_centroid(int e) const {
  const auto& el = elements_[e];
  return (vertices_[el.v[0]] + vertices_[el.v[1]] + vertices_[el.v[2]]) / 3.0;
}

std::array<Vec2, 3> Mesh::element_vertices(int e) const {
  const auto& el = elements_[e];
  return {vertices_[el.v[0]], vertices_[el.v[1]], vertices_[el.v[2]]};
}

double Mesh::max_diameter() const {
  return *std::max_element(diameters_.begin(), diameters_.end());
}

double Mesh::subdomain_area(Subdomain s) const {
  double area = 0.0;
  for (int e = 0; e < n_elements(); ++e) {
    if (elements_[e].subdomain == s) area += areas_[e];
  }
  return area;
}

double Mesh::transmission_perimeter() const {
  double len = 0.0;
  for (const auto& f : faces_) {
    if (f.kind == FaceKind::Transmission) len += f.length;
  }
  return len;
}

std::vector<int> Mesh::faces_of_kind(FaceKind kind) const {
  std::vector<int> ids;
  for (int f = 0; f < n_faces(); ++f) {
    if (faces_[f].kind == kind) ids.push_back(f);
  }
  return ids;
}

MeshQuantities Mesh::quantities() const {
  MeshQuantities q;
  q.element_h = diameters_;
  q.element_m.resize(elements_.size());
  for (int e = 0; e < n_elements(); ++e) {
    q.element_m[e] = static_cast<double>(elements_[e].degree);
  }
  q.face_h.resize(faces_.size());
  q.face_m.resize(faces_.size());
  for (int f = 0; f < n_faces(); ++f) {
    const MeshFace& fc = faces_[f];
    if (fc.elem_minus < 0) {
      q.face_h[f] = q.element_h[fc.elem_plus];
      q.face_m[f] = q.element_m[fc.elem_plus];
    } else {
      q.face_h[f] = 0.5 * (q.element_h[fc.elem_plus] + q.element_h[fc.elem_minus]);
      q.face_m[f] = 0.5 * (q.element_m[fc.elem_plus] + q.element_m[fc.elem_minus]);
    }
  }
  return q;
}

void Mesh::write(std::ostream& os) const {
  os << "# randg mesh v1: " << n_vertices() << " vertices, " << n_elements() << " elements, "
     << n_faces() << " faces\n";
  os.precision(17);
  for (const auto& v : vertices_) {
    os << "v " << v.x() << ' ' << v.y() << '\n';
  }
  for (const auto& el : elements_) {
    os << "e " << el.v[0] << ' ' << el.v[1] << ' ' << el.v[2] << ' '
       << static_cast<int>(el.subdomain) << ' ' << el.degree << '\n';
  }
  for (const auto& f : faces_) {
    os << "f " << f.v[0] << ' ' << f.v[1] << ' ' << f.elem_plus << ' ' << f.elem_minus << ' '
       << to_string(f.kind) << '\n';
  }
}

namespace {

// Ring layout for the structured disk mesh: concentric circles of vertices
// whose angular count may double from one ring to the next, which keeps the
// arc length (and hence the element aspect ratio) bounded under refinement.
struct Ring {
  double radius;
  int count;
  int first_vertex;
};

int ring_vertex(const Ring& ring, int k) {
  return ring.first_vertex + ((k % ring.count + ring.count) % ring.count);
}

void append_strip(const Ring& inner, const Ring& outer, Subdomain sub, int degree,
                  std::vector<MeshElement>& elements) {
  if (outer.count == inner.count) {
    for (int k = 0; k < inner.count; ++k) {
      int a0 = ring_vertex(inner, k), a1 = ring_vertex(inner, k + 1);
      int b0 = ring_vertex(outer, k), b1 = ring_vertex(outer, k + 1);
      elements.push_back({{a0, b0, b1}, sub, degree});
      elements.push_back({{a0, b1, a1}, sub, degree});
    }
  } else if (outer.count == 2 * inner.count) {
    for (int k = 0; k < inner.count; ++k) {
      int a0 = ring_vertex(inner, k), a1 = ring_vertex(inner, k + 1);
      int b0 = ring_vertex(outer, 2 * k), b1 = ring_vertex(outer, 2 * k + 1),
          b2 = ring_vertex(outer, 2 * k + 2);
      elements.push_back({{a0, b0, b1}, sub, degree});
      elements.push_back({{a0, b1, a1}, sub, degree});
      elements.push_back({{a1, b1, b2}, sub, degree});
    }
  } else {
    throw std::logic_error("append_strip: ring counts must match or double");
  }
}

}  // namespace

Mesh build_disk_mesh(const CellGeometry& geometry, double target_h, int degree) {
  geometry.validate();
  if (!(target_h > 0.0)) {
    throw std::invalid_argument("build_disk_mesh: target_h must be positive");
  }
  if (degree < 1) {
    throw std::invalid_argument("build_disk_mesh: degree must be >= 1");
  }

  const double a = geometry.nucleus_radius;
  const double R = geometry.cell_radius;

  // Radial subdivision hits both circles exactly.
  const int n_nuc = std::max(1, static_cast<int>(std::lround(a / target_h)));
  const int n_cyt = std::max(1, static_cast<int>(std::lround((R - a) / target_h)));
  std::vector<double> radii;
  for (int i = 1; i <= n_nuc; ++i) radii.push_back(a * i / n_nuc);
  for (int i = 1; i <= n_cyt; ++i) radii.push_back(a + (R - a) * i / n_cyt);

  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<Vec2> vertices;
  vertices.push_back(geometry.center);

  std::vector<Ring> rings;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    Ring ring;
    ring.radius = radii[j];
    if (j == 0) {
      ring.count = std::max(6, static_cast<int>(std::lround(two_pi * ring.radius / target_h)));
    } else {
      int prev = rings.back().count;
      ring.count = (two_pi * ring.radius / prev > 1.4 * target_h) ? 2 * prev : prev;
    }
    ring.first_vertex = static_cast<int>(vertices.size());
    for (int k = 0; k < ring.count; ++k) {
      double theta = two_pi * k / ring.count;
      vertices.push_back(geometry.center +
                         ring.radius * Vec2(std::cos(theta), std::sin(theta)));
    }
    rings.push_back(ring);
  }

  std::vector<MeshElement> elements;
  // Central fan.
  for (int k = 0; k < rings[0].count; ++k) {
    elements.push_back({{0, ring_vertex(rings[0], k), ring_vertex(rings[0], k + 1)},
                        Subdomain::Nucleus, degree});
  }
  for (std::size_t j = 0; j + 1 < rings.size(); ++j) {
    Subdomain sub = (rings[j + 1].radius <= a * (1.0 + 1e-12)) ? Subdomain::Nucleus
                                                               : Subdomain::Cytoplasm;
    append_strip(rings[j], rings[j + 1], sub, degree, elements);
  }

  return Mesh(geometry, std::move(vertices), std::move(elements));
}

}  // namespace randg
