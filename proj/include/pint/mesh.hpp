#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace pint {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

/// Three vertical strips of the unit square: [0,x0), [x0,x0+w), [x0+w,1].
struct StripGeometry {
  double x0;
  double w;

  /// Middle strip of width w centered in the square.
  static StripGeometry centered(double w) { return {(1.0 - w) / 2.0, w}; }

  /// Throws GeometryError unless 0 < x0, w > 0 and x0 + w < 1.
  void validate() const;

  /// Strip index in {1,2,3} for the half-open decomposition.
  int strip_of(double x) const {
    if (x < x0) return 1;
    if (x < x0 + w) return 2;
    return 3;
  }
};

/// Conforming triangulation of the unit square whose edges align with
/// the strip boundaries. Immutable once built; safe to share across
/// threads.
struct Mesh {
  std::vector<Point2D> nodes;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<std::uint8_t> boundary_node;    // 1 iff node lies on the square's boundary
  std::vector<int> strip_of_element;          // strip index in {1,2,3}

  int node_count() const { return static_cast<int>(nodes.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

struct WidthStats {
  double h_min;
  double h_max;
};

double signed_area(const Point2D& a, const Point2D& b, const Point2D& c);

/// True exactly for points with x in {0,1} or y in {0,1}.
bool on_unit_square_boundary(const Point2D& p);

/// Structured strip-aligned triangulation. Each x-axis segment between
/// strip boundaries is divided into ceil(length/target_h) cells, the
/// y-axis into ceil(1/target_h) cells; every rectangle is split along
/// the diagonal from its lower-left corner.
Mesh build_strip_mesh(const StripGeometry& geom, double target_h);

/// Split every triangle into four congruent children by edge midpoints.
Mesh refine_uniform(const Mesh& mesh);

/// Min/max over elements of the longest edge.
WidthStats mesh_width_stats(const Mesh& mesh);

/// Plain-text dump: one line per node "x y boundary_flag", then one line
/// per triangle "i j k strip".
void write_mesh_text(const Mesh& mesh, std::ostream& out);

}  // namespace pint
