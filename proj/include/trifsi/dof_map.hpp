#pragma once

#include <string>
#include <vector>

#include "trifsi/mesh.hpp"

namespace trifsi {

struct DirichletBc {
  int dof = -1;
  double value = 0.0;
};

// Nodal block DOF map: one contiguous index range per field, node-major within
// a field. Fields are registered in a fixed order so layouts are reproducible.
class DofMap {
 public:
  struct Field {
    std::string name;
    int ncomp = 1;
    int offset = 0;
  };

  explicit DofMap(int n_nodes) : n_nodes_(n_nodes) {}

  int add_field(const std::string& name, int ncomp);
  int n_dofs() const { return n_dofs_; }
  int n_nodes() const { return n_nodes_; }
  int n_fields() const { return static_cast<int>(fields_.size()); }
  const Field& field(int f) const { return fields_[f]; }

  int index(int f, int node, int comp) const {
    return fields_[f].offset + node * fields_[f].ncomp + comp;
  }

  // Element scatter vector for the given fields in registration order.
  std::vector<int> elem_dofs(const std::vector<int>& nodes) const;

  void constrain(int f, int node, int comp, double value);
  void clear_constraints() { bcs_.clear(); }
  const std::vector<DirichletBc>& constraints() const { return bcs_; }

 private:
  int n_nodes_;
  int n_dofs_ = 0;
  std::vector<Field> fields_;
  std::vector<DirichletBc> bcs_;
};

}  // namespace trifsi
