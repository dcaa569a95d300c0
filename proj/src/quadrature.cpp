#include "trifsi/quadrature.hpp"

#include <array>
#include <cmath>

namespace trifsi {

int cell_dim(CellKind kind) {
  switch (kind) {
    case CellKind::tri3:
    case CellKind::tri6:
    case CellKind::quad4:
      return 2;
    case CellKind::tet4:
      return 3;
  }
  throw DomainError("unknown cell kind");
}

int cell_nodes(CellKind kind) {
  switch (kind) {
    case CellKind::tri3:
      return 3;
    case CellKind::tri6:
      return 6;
    case CellKind::quad4:
      return 4;
    case CellKind::tet4:
      return 4;
  }
  throw DomainError("unknown cell kind");
}

int cell_order(CellKind kind) { return kind == CellKind::tri6 ? 2 : 1; }

const char* cell_name(CellKind kind) {
  switch (kind) {
    case CellKind::tri3:
      return "tri3";
    case CellKind::tri6:
      return "tri6";
    case CellKind::quad4:
      return "quad4";
    case CellKind::tet4:
      return "tet4";
  }
  return "?";
}

CellKind cell_from_name(const std::string& name) {
  if (name == "tri3") return CellKind::tri3;
  if (name == "tri6") return CellKind::tri6;
  if (name == "quad4") return CellKind::quad4;
  if (name == "tet4") return CellKind::tet4;
  throw ConfigError("unknown element kind '" + name + "'");
}

namespace {

QuadratureRule make_rule(int dim, int degree, std::vector<VecN> pts, std::vector<double> w) {
  QuadratureRule r;
  r.dim = dim;
  r.degree = degree;
  r.points = std::move(pts);
  r.weights = std::move(w);
  return r;
}

VecN pt2(double x, double y) {
  VecN p(2);
  p << x, y;
  return p;
}

VecN pt3(double x, double y, double z) {
  VecN p(3);
  p << x, y, z;
  return p;
}

QuadratureRule tri_deg1() { return make_rule(2, 1, {pt2(1.0 / 3.0, 1.0 / 3.0)}, {0.5}); }

QuadratureRule tri_deg2() {
  return make_rule(2, 2,
                   {pt2(1.0 / 6.0, 1.0 / 6.0), pt2(2.0 / 3.0, 1.0 / 6.0), pt2(1.0 / 6.0, 2.0 / 3.0)},
                   {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0});
}

// 6-point rule, exact to degree 4, all weights positive.
QuadratureRule tri_deg4() {
  const double a = 0.445948490915965;
  const double wa = 0.223381589678011 * 0.5;
  const double b = 0.091576213509771;
  const double wb = 0.109951743655322 * 0.5;
  return make_rule(2, 4,
                   {pt2(a, a), pt2(1.0 - 2.0 * a, a), pt2(a, 1.0 - 2.0 * a), pt2(b, b),
                    pt2(1.0 - 2.0 * b, b), pt2(b, 1.0 - 2.0 * b)},
                   {wa, wa, wa, wb, wb, wb});
}

// 7-point rule, exact to degree 5.
QuadratureRule tri_deg5() {
  const double a = (6.0 + std::sqrt(15.0)) / 21.0;
  const double b = (6.0 - std::sqrt(15.0)) / 21.0;
  const double wa = (155.0 + std::sqrt(15.0)) / 1200.0 * 0.5 * 2.0;
  const double wb = (155.0 - std::sqrt(15.0)) / 1200.0 * 0.5 * 2.0;
  const double wc = 9.0 / 40.0 * 0.5;
  return make_rule(2, 5,
                   {pt2(1.0 / 3.0, 1.0 / 3.0), pt2(a, a), pt2(1.0 - 2.0 * a, a), pt2(a, 1.0 - 2.0 * a),
                    pt2(b, b), pt2(1.0 - 2.0 * b, b), pt2(b, 1.0 - 2.0 * b)},
                   {wc, wa, wa, wa, wb, wb, wb});
}

void gauss_points(int n, std::vector<double>& x, std::vector<double>& w) {
  switch (n) {
    case 1:
      x = {0.0};
      w = {2.0};
      return;
    case 2:
      x = {-1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
      w = {1.0, 1.0};
      return;
    case 3:
      x = {-std::sqrt(3.0 / 5.0), 0.0, std::sqrt(3.0 / 5.0)};
      w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      return;
    case 4: {
      const double x1 = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double x2 = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
      const double w1 = (18.0 + std::sqrt(30.0)) / 36.0;
      const double w2 = (18.0 - std::sqrt(30.0)) / 36.0;
      x = {-x2, -x1, x1, x2};
      w = {w2, w1, w1, w2};
      return;
    }
    default:
      throw ConfigError("gauss_points: unsupported point count");
  }
}

QuadratureRule quad_rule(int n) {
  std::vector<double> x, w;
  gauss_points(n, x, w);
  std::vector<VecN> pts;
  std::vector<double> ws;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pts.push_back(pt2(x[i], x[j]));
      ws.push_back(w[i] * w[j]);
    }
  return make_rule(2, 2 * n - 1, std::move(pts), std::move(ws));
}

QuadratureRule tet_deg1() { return make_rule(3, 1, {pt3(0.25, 0.25, 0.25)}, {1.0 / 6.0}); }

QuadratureRule tet_deg2() {
  const double a = 0.585410196624969;
  const double b = 0.138196601125011;
  const double w = 1.0 / 24.0;
  return make_rule(3, 2, {pt3(a, b, b), pt3(b, a, b), pt3(b, b, a), pt3(b, b, b)}, {w, w, w, w});
}

}  // namespace

QuadratureRule quadrature_for(CellKind kind, int degree) {
  if (degree < 1) throw ConfigError("quadrature degree must be >= 1");
  switch (kind) {
    case CellKind::tri3:
    case CellKind::tri6:
      return triangle_rule(degree);
    case CellKind::quad4: {
      const int n = degree / 2 + 1;
      if (n > 4) throw ConfigError("unsupported quadrature degree for quads");
      return quad_rule(n);
    }
    case CellKind::tet4:
      if (degree <= 1) return tet_deg1();
      if (degree <= 2) return tet_deg2();
      throw ConfigError("unsupported quadrature degree for tets");
  }
  throw DomainError("unknown cell kind");
}

QuadratureRule triangle_rule(int degree) {
  if (degree <= 1) return tri_deg1();
  if (degree <= 2) return tri_deg2();
  if (degree <= 4) return tri_deg4();
  if (degree <= 5) return tri_deg5();
  throw ConfigError("unsupported quadrature degree for triangles");
}

QuadratureRule gauss_segment(int degree) {
  const int n = degree / 2 + 1;
  if (n > 4) throw ConfigError("unsupported quadrature degree for segments");
  std::vector<double> x, w;
  gauss_points(n, x, w);
  std::vector<VecN> pts;
  for (double xi : x) {
    VecN p(1);
    p << xi;
    pts.push_back(p);
  }
  return {1, 2 * n - 1, std::move(pts), std::move(w)};
}

}  // namespace trifsi
