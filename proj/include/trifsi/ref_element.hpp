#pragma once

#include <vector>

#include "trifsi/quadrature.hpp"

namespace trifsi {

// Lagrange reference element: shape functions, reference node coordinates and
// face topology for tri3/tri6/quad4/tet4.
class RefElement {
 public:
  explicit RefElement(CellKind kind);

  CellKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int order() const { return order_; }
  int n_nodes() const { return nn_; }
  int n_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face_nodes(int f) const { return faces_[f]; }
  // Corner vertices of face f (ignores midside nodes); defines the face geometry map order.
  const std::vector<int>& face_corners(int f) const { return face_corners_[f]; }
  const VecN& node(int a) const { return nodes_[a]; }

  bool inside(const VecN& xi, double tol = 1e-12) const;

  // values[a] = N_a(xi), grads[a] = dN_a/dxi. Throws DomainError if xi is
  // outside the reference cell.
  void shape(const VecN& xi, Vec& values, std::vector<VecN>& grads) const;

  // Shape evaluation without the bounds check (used for face points and
  // extrapolation during point location).
  void shape_unchecked(const VecN& xi, Vec& values, std::vector<VecN>& grads) const;

 private:
  CellKind kind_;
  int dim_;
  int order_;
  int nn_;
  std::vector<VecN> nodes_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> face_corners_;
};

const RefElement& ref_element(CellKind kind);

}  // namespace trifsi
