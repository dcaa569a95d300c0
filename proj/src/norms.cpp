#include "trifsi/norms.hpp"

#include <cmath>

namespace trifsi {

namespace {

template <class F>
double integrate(const Mesh& mesh, int degree_offset, const F& qp_value) {
  double acc = 0.0;
  for (int e = 0; e < mesh.n_elems(); ++e) {
    const auto& ref = ref_element(mesh.elem_kind(e));
    const auto rule = quadrature_for(ref.kind(), std::min(2 * ref.order() + degree_offset,
                                                          ref.kind() == CellKind::tet4 ? 2 : 5));
    const auto conn = mesh.elem_nodes(e);
    Vec N;
    std::vector<VecN> dN;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto g = mesh.geometry_map(e, rule.points[q]);
      ref.shape_unchecked(rule.points[q], N, dN);
      acc += rule.weights[q] * g.detJ * qp_value(e, conn, N, g.x);
    }
  }
  return acc;
}

}  // namespace

double l2_norm(const Mesh& mesh, const Vec& nodal, int ncomp) {
  if (nodal.size() != static_cast<Eigen::Index>(mesh.n_nodes()) * ncomp)
    throw DomainError("l2_norm: field size does not match mesh");
  const double s = integrate(
      mesh, 0, [&](int, const std::vector<int>& conn, const Vec& N, const VecN&) {
        double v2 = 0.0;
        for (int c = 0; c < ncomp; ++c) {
          double v = 0.0;
          for (std::size_t a = 0; a < conn.size(); ++a) v += N[a] * nodal[conn[a] * ncomp + c];
          v2 += v * v;
        }
        return v2;
      });
  return std::sqrt(s);
}

double l2_error(const Mesh& mesh, const Vec& nodal, int ncomp,
                const std::function<Vec(const VecN&)>& exact, int extra_degree) {
  const double s = integrate(
      mesh, extra_degree, [&](int, const std::vector<int>& conn, const Vec& N, const VecN& x) {
        const Vec ex = exact(x);
        double v2 = 0.0;
        for (int c = 0; c < ncomp; ++c) {
          double v = 0.0;
          for (std::size_t a = 0; a < conn.size(); ++a) v += N[a] * nodal[conn[a] * ncomp + c];
          const double d = v - ex[c];
          v2 += d * d;
        }
        return v2;
      });
  return std::sqrt(s);
}

double domain_measure(const Mesh& mesh) {
  return integrate(mesh, 0,
                   [](int, const std::vector<int>&, const Vec&, const VecN&) { return 1.0; });
}

}  // namespace trifsi
