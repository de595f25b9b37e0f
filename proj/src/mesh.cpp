#include "pint/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <utility>

#include "pint/errors.hpp"

namespace pint {

namespace {

int cells_for(double length, double h) {
  // ceil(length/h) with a tiny backoff so exact ratios don't round up
  const double ratio = length / h;
  return std::max(1, static_cast<int>(std::ceil(ratio - 1e-9 * std::max(1.0, ratio))));
}

// subdivision of [a,b] into n cells with exact endpoints
void append_points(double a, double b, int n, bool skip_first, std::vector<double>& out) {
  for (int i = skip_first ? 1 : 0; i <= n; ++i)
    out.push_back(i == 0 ? a : (i == n ? b : a + (b - a) * i / n));
}

double edge_length(const Point2D& p, const Point2D& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

void check_mesh(const Mesh& mesh) {
  const int nn = mesh.node_count();
  if (mesh.boundary_node.size() != mesh.nodes.size() ||
      mesh.strip_of_element.size() != mesh.triangles.size())
    throw GeometryError("mesh: inconsistent field sizes");
  for (const auto& t : mesh.triangles) {
    for (int v : t)
      if (v < 0 || v >= nn) throw GeometryError("mesh: node index out of range");
    if (signed_area(mesh.nodes[t[0]], mesh.nodes[t[1]], mesh.nodes[t[2]]) <= 0.0)
      throw GeometryError("mesh: non-positive element area");
  }
}

}  // namespace

void StripGeometry::validate() const {
  if (!(x0 > 0.0) || !(w > 0.0) || !(x0 + w < 1.0))
    throw GeometryError("strip geometry requires 0 < x0, w > 0, x0 + w < 1");
}

double signed_area(const Point2D& a, const Point2D& b, const Point2D& c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

bool on_unit_square_boundary(const Point2D& p) {
  return p.x == 0.0 || p.x == 1.0 || p.y == 0.0 || p.y == 1.0;
}

Mesh build_strip_mesh(const StripGeometry& geom, double target_h) {
  geom.validate();
  if (!(target_h > 0.0)) throw ConfigError("build_strip_mesh: target_h must be positive");

  const double x1 = geom.x0;
  const double x2 = geom.x0 + geom.w;
  const int n1 = cells_for(x1, target_h);
  const int n2 = cells_for(geom.w, target_h);
  const int n3 = cells_for(1.0 - x2, target_h);
  const int ny = cells_for(1.0, target_h);

  std::vector<double> xs;
  xs.reserve(n1 + n2 + n3 + 1);
  append_points(0.0, x1, n1, false, xs);
  append_points(x1, x2, n2, true, xs);
  append_points(x2, 1.0, n3, true, xs);
  std::vector<double> ys;
  ys.reserve(ny + 1);
  append_points(0.0, 1.0, ny, false, ys);

  const int nx = static_cast<int>(xs.size()) - 1;
  Mesh mesh;
  mesh.nodes.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  mesh.boundary_node.reserve(mesh.nodes.capacity());
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      mesh.nodes.push_back({xs[i], ys[j]});
      mesh.boundary_node.push_back(on_unit_square_boundary(mesh.nodes.back()) ? 1 : 0);
    }

  auto idx = [nx](int i, int j) { return j * (nx + 1) + i; };
  mesh.triangles.reserve(static_cast<std::size_t>(nx) * ny * 2);
  mesh.strip_of_element.reserve(mesh.triangles.capacity());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int ll = idx(i, j), lr = idx(i + 1, j);
      const int ul = idx(i, j + 1), ur = idx(i + 1, j + 1);
      // split along the diagonal from the lower-left corner
      mesh.triangles.push_back({ll, lr, ur});
      mesh.triangles.push_back({ll, ur, ul});
      const double cx = (xs[i] + xs[i + 1]) / 2.0;
      const int strip = geom.strip_of(cx);
      mesh.strip_of_element.push_back(strip);
      mesh.strip_of_element.push_back(strip);
    }
  return mesh;
}

Mesh refine_uniform(const Mesh& mesh) {
  check_mesh(mesh);

  Mesh fine;
  fine.nodes = mesh.nodes;
  fine.boundary_node = mesh.boundary_node;
  fine.triangles.reserve(mesh.triangles.size() * 4);
  fine.strip_of_element.reserve(mesh.triangles.size() * 4);

  std::map<std::pair<int, int>, int> midpoint_of_edge;
  auto midpoint = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint_of_edge.find(key);
    if (it != midpoint_of_edge.end()) return it->second;
    const Point2D m{0.5 * (mesh.nodes[a].x + mesh.nodes[b].x),
                    0.5 * (mesh.nodes[a].y + mesh.nodes[b].y)};
    const int id = fine.node_count();
    fine.nodes.push_back(m);
    fine.boundary_node.push_back(on_unit_square_boundary(m) ? 1 : 0);
    midpoint_of_edge.emplace(key, id);
    return id;
  };

  for (std::size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto [v0, v1, v2] = mesh.triangles[e];
    const int m01 = midpoint(v0, v1);
    const int m12 = midpoint(v1, v2);
    const int m20 = midpoint(v2, v0);
    const int strip = mesh.strip_of_element[e];
    fine.triangles.push_back({v0, m01, m20});
    fine.triangles.push_back({v1, m12, m01});
    fine.triangles.push_back({v2, m20, m12});
    fine.triangles.push_back({m01, m12, m20});
    for (int c = 0; c < 4; ++c) fine.strip_of_element.push_back(strip);
  }
  return fine;
}

WidthStats mesh_width_stats(const Mesh& mesh) {
  check_mesh(mesh);
  WidthStats stats{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& t : mesh.triangles) {
    const double h = std::max({edge_length(mesh.nodes[t[0]], mesh.nodes[t[1]]),
                               edge_length(mesh.nodes[t[1]], mesh.nodes[t[2]]),
                               edge_length(mesh.nodes[t[2]], mesh.nodes[t[0]])});
    stats.h_min = std::min(stats.h_min, h);
    stats.h_max = std::max(stats.h_max, h);
  }
  return stats;
}

void write_mesh_text(const Mesh& mesh, std::ostream& out) {
  out.precision(17);
  for (int i = 0; i < mesh.node_count(); ++i)
    out << mesh.nodes[i].x << ' ' << mesh.nodes[i].y << ' '
        << static_cast<int>(mesh.boundary_node[i]) << '\n';
  for (int e = 0; e < mesh.triangle_count(); ++e)
    out << mesh.triangles[e][0] << ' ' << mesh.triangles[e][1] << ' '
        << mesh.triangles[e][2] << ' ' << mesh.strip_of_element[e] << '\n';
}

}  // namespace pint
