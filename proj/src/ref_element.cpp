#include "trifsi/ref_element.hpp"

#include <map>

namespace trifsi {

namespace {
VecN p2(double x, double y) {
  VecN p(2);
  p << x, y;
  return p;
}
VecN p3(double x, double y, double z) {
  VecN p(3);
  p << x, y, z;
  return p;
}
}  // namespace

RefElement::RefElement(CellKind kind)
    : kind_(kind), dim_(cell_dim(kind)), order_(cell_order(kind)), nn_(cell_nodes(kind)) {
  switch (kind) {
    case CellKind::tri3:
      nodes_ = {p2(0, 0), p2(1, 0), p2(0, 1)};
      faces_ = {{0, 1}, {1, 2}, {2, 0}};
      break;
    case CellKind::tri6:
      nodes_ = {p2(0, 0), p2(1, 0), p2(0, 1), p2(0.5, 0), p2(0.5, 0.5), p2(0, 0.5)};
      faces_ = {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}};
      break;
    case CellKind::quad4:
      nodes_ = {p2(-1, -1), p2(1, -1), p2(1, 1), p2(-1, 1)};
      faces_ = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
      break;
    case CellKind::tet4:
      nodes_ = {p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1)};
      faces_ = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
      break;
  }
  for (const auto& f : faces_) {
    std::vector<int> corners(f.begin(), f.begin() + (dim_ == 2 ? 2 : 3));
    face_corners_.push_back(corners);
  }
}

bool RefElement::inside(const VecN& xi, double tol) const {
  switch (kind_) {
    case CellKind::tri3:
    case CellKind::tri6:
      return xi[0] >= -tol && xi[1] >= -tol && xi[0] + xi[1] <= 1.0 + tol;
    case CellKind::quad4:
      return std::abs(xi[0]) <= 1.0 + tol && std::abs(xi[1]) <= 1.0 + tol;
    case CellKind::tet4:
      return xi[0] >= -tol && xi[1] >= -tol && xi[2] >= -tol && xi[0] + xi[1] + xi[2] <= 1.0 + tol;
  }
  return false;
}

void RefElement::shape(const VecN& xi, Vec& values, std::vector<VecN>& grads) const {
  if (!inside(xi, 1e-9)) throw DomainError("shape evaluation point outside reference element");
  shape_unchecked(xi, values, grads);
}

void RefElement::shape_unchecked(const VecN& xi, Vec& values, std::vector<VecN>& grads) const {
  values.resize(nn_);
  grads.assign(nn_, VecN::Zero(dim_));
  switch (kind_) {
    case CellKind::tri3: {
      values << 1.0 - xi[0] - xi[1], xi[0], xi[1];
      grads[0] << -1, -1;
      grads[1] << 1, 0;
      grads[2] << 0, 1;
      break;
    }
    case CellKind::tri6: {
      const double l1 = 1.0 - xi[0] - xi[1], l2 = xi[0], l3 = xi[1];
      values << l1 * (2 * l1 - 1), l2 * (2 * l2 - 1), l3 * (2 * l3 - 1), 4 * l1 * l2, 4 * l2 * l3,
          4 * l3 * l1;
      const VecN g1 = p2(-1, -1), g2 = p2(1, 0), g3 = p2(0, 1);
      grads[0] = (4 * l1 - 1) * g1;
      grads[1] = (4 * l2 - 1) * g2;
      grads[2] = (4 * l3 - 1) * g3;
      grads[3] = 4 * (l1 * g2 + l2 * g1);
      grads[4] = 4 * (l2 * g3 + l3 * g2);
      grads[5] = 4 * (l3 * g1 + l1 * g3);
      break;
    }
    case CellKind::quad4: {
      const double x = xi[0], y = xi[1];
      values << 0.25 * (1 - x) * (1 - y), 0.25 * (1 + x) * (1 - y), 0.25 * (1 + x) * (1 + y),
          0.25 * (1 - x) * (1 + y);
      grads[0] << -0.25 * (1 - y), -0.25 * (1 - x);
      grads[1] << 0.25 * (1 - y), -0.25 * (1 + x);
      grads[2] << 0.25 * (1 + y), 0.25 * (1 + x);
      grads[3] << -0.25 * (1 + y), 0.25 * (1 - x);
      break;
    }
    case CellKind::tet4: {
      values << 1.0 - xi[0] - xi[1] - xi[2], xi[0], xi[1], xi[2];
      grads[0] << -1, -1, -1;
      grads[1] << 1, 0, 0;
      grads[2] << 0, 1, 0;
      grads[3] << 0, 0, 1;
      break;
    }
  }
}

const RefElement& ref_element(CellKind kind) {
  static const std::map<CellKind, RefElement> cache = {
      {CellKind::tri3, RefElement(CellKind::tri3)},
      {CellKind::tri6, RefElement(CellKind::tri6)},
      {CellKind::quad4, RefElement(CellKind::quad4)},
      {CellKind::tet4, RefElement(CellKind::tet4)},
  };
  return cache.at(kind);
}

}  // namespace trifsi
