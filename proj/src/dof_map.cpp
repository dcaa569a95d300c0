#include "trifsi/dof_map.hpp"

namespace trifsi {

int DofMap::add_field(const std::string& name, int ncomp) {
  fields_.push_back({name, ncomp, n_dofs_});
  n_dofs_ += n_nodes_ * ncomp;
  return static_cast<int>(fields_.size()) - 1;
}

std::vector<int> DofMap::elem_dofs(const std::vector<int>& nodes) const {
  std::vector<int> dofs;
  dofs.reserve(nodes.size() * static_cast<std::size_t>(n_dofs_ / std::max(1, n_nodes_)));
  for (const auto& f : fields_)
    for (int node : nodes)
      for (int c = 0; c < f.ncomp; ++c) dofs.push_back(f.offset + node * f.ncomp + c);
  return dofs;
}

void DofMap::constrain(int f, int node, int comp, double value) {
  bcs_.push_back({index(f, node, comp), value});
}

}  // namespace trifsi
