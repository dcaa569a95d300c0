#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trifsi/ref_element.hpp"

namespace trifsi {

// A boundary face is addressed as (element id, local face id).
struct BoundaryFace {
  int elem = -1;
  int face = -1;
};

struct GeometryMap {
  VecN x;      // physical point
  MatN J;      // dx/dxi
  double detJ = 0.0;
  MatN J_inv;
};

struct FacePoint {
  VecN x;
  VecN normal;   // unit, outward with respect to the owning element
  double ds = 0.0;  // area element (per unit reference weight)
  Vec shape;        // element shape functions at the face point
};

// Unstructured mesh with tagged boundary sets. Nodal coordinates are the
// current configuration; the solid and ALE modules move them.
class Mesh {
 public:
  struct Block {
    CellKind kind;
    std::vector<int> conn;  // n_elems * nodes_per_elem, 0-based
    int n_elems() const { return static_cast<int>(conn.size()) / cell_nodes(kind); }
  };

  Mesh() = default;
  Mesh(int dim, std::vector<double> coords) : dim_(dim), X_(std::move(coords)) {}

  int dim() const { return dim_; }
  int n_nodes() const { return static_cast<int>(X_.size()) / dim_; }
  int n_elems() const;

  VecN node(int a) const;
  void set_node(int a, const VecN& x);
  std::vector<double>& coords() { return X_; }
  const std::vector<double>& coords() const { return X_; }

  void add_block(CellKind kind, std::vector<int> conn);
  const std::vector<Block>& blocks() const { return blocks_; }

  // Global element id -> (kind, connectivity span).
  CellKind elem_kind(int e) const;
  std::vector<int> elem_nodes(int e) const;

  void set_boundary(const std::string& tag, std::vector<BoundaryFace> faces);
  const std::map<std::string, std::vector<BoundaryFace>>& boundary_sets() const { return bsets_; }
  const std::vector<BoundaryFace>& boundary(const std::string& tag) const;
  std::vector<int> boundary_nodes(const std::string& tag) const;

  GeometryMap geometry_map(int elem, const VecN& xi) const;

  // Face evaluation for boundary integrals; t is a point of the reference face
  // ([-1,1] for edges, reference triangle for tet faces).
  FacePoint face_point(const BoundaryFace& bf, const VecN& t) const;

  // Element diameter: maximum node-pair distance.
  double h_elem(int e) const;

  // Locates the element containing x; returns (elem, xi) or nullopt.
  std::optional<std::pair<int, VecN>> locate(const VecN& x, double tol = 1e-8) const;

  // Checks connectivity ranges, positive Jacobians and boundary-set sanity.
  void validate() const;

 private:
  int dim_ = 0;
  std::vector<double> X_;
  std::vector<Block> blocks_;
  std::vector<int> block_offset_;  // first global element id of each block
  std::map<std::string, std::vector<BoundaryFace>> bsets_;
};

Mesh read_mesh(std::istream& in);
Mesh read_mesh_file(const std::string& path);
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh_file(const Mesh& mesh, const std::string& path);

}  // namespace trifsi
