#pragma once

#include <vector>

#include "trifsi/core.hpp"

namespace trifsi {

enum class CellKind { tri3, tri6, quad4, tet4 };

int cell_dim(CellKind kind);
int cell_nodes(CellKind kind);
int cell_order(CellKind kind);
const char* cell_name(CellKind kind);
CellKind cell_from_name(const std::string& name);

// Reference-element quadrature. Weights are positive and sum to the measure of
// the reference cell; the rule is exact for polynomials up to `degree`.
struct QuadratureRule {
  int dim = 0;
  int degree = 0;
  std::vector<VecN> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

// Smallest tabulated rule with exactness >= degree for the given cell family.
QuadratureRule quadrature_for(CellKind kind, int degree);

// Gauss-Legendre on [-1, 1]; used for edge integrals.
QuadratureRule gauss_segment(int degree);

// Rule on the reference triangle used for tet faces.
QuadratureRule triangle_rule(int degree);

}  // namespace trifsi
