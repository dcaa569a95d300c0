#pragma once

#include <functional>

#include "trifsi/mesh.hpp"

namespace trifsi {

// L2 norm of a nodal field with `ncomp` components per node (node-major layout),
// integrated with a quadrature exact for squared basis products.
double l2_norm(const Mesh& mesh, const Vec& nodal, int ncomp);

// L2 norm of (field - exact) where exact maps a physical point to ncomp values.
double l2_error(const Mesh& mesh, const Vec& nodal, int ncomp,
                const std::function<Vec(const VecN&)>& exact, int extra_degree = 3);

double domain_measure(const Mesh& mesh);

}  // namespace trifsi
