#include "trifsi/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace trifsi {

int Mesh::n_elems() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.n_elems();
  return n;
}

VecN Mesh::node(int a) const {
  VecN x(dim_);
  for (int i = 0; i < dim_; ++i) x[i] = X_[a * dim_ + i];
  return x;
}

void Mesh::set_node(int a, const VecN& x) {
  for (int i = 0; i < dim_; ++i) X_[a * dim_ + i] = x[i];
}

void Mesh::add_block(CellKind kind, std::vector<int> conn) {
  if (cell_dim(kind) != dim_) throw DomainError("element kind dimension does not match mesh");
  if (conn.size() % cell_nodes(kind) != 0) throw DomainError("ragged connectivity block");
  block_offset_.push_back(n_elems());
  blocks_.push_back({kind, std::move(conn)});
}

CellKind Mesh::elem_kind(int e) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const int local = e - block_offset_[b];
    if (local >= 0 && local < blocks_[b].n_elems()) return blocks_[b].kind;
  }
  throw DomainError("element id out of range");
}

std::vector<int> Mesh::elem_nodes(int e) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const int local = e - block_offset_[b];
    if (local >= 0 && local < blocks_[b].n_elems()) {
      const int nn = cell_nodes(blocks_[b].kind);
      auto first = blocks_[b].conn.begin() + static_cast<std::ptrdiff_t>(local) * nn;
      return std::vector<int>(first, first + nn);
    }
  }
  throw DomainError("element id out of range");
}

void Mesh::set_boundary(const std::string& tag, std::vector<BoundaryFace> faces) {
  if (bsets_.count(tag)) throw DomainError("duplicate boundary tag '" + tag + "'");
  bsets_[tag] = std::move(faces);
}

const std::vector<BoundaryFace>& Mesh::boundary(const std::string& tag) const {
  auto it = bsets_.find(tag);
  if (it == bsets_.end()) throw DomainError("unknown boundary tag '" + tag + "'");
  return it->second;
}

std::vector<int> Mesh::boundary_nodes(const std::string& tag) const {
  std::set<int> nodes;
  for (const auto& bf : boundary(tag)) {
    const auto& ref = ref_element(elem_kind(bf.elem));
    const auto conn = elem_nodes(bf.elem);
    for (int ln : ref.face_nodes(bf.face)) nodes.insert(conn[ln]);
  }
  return std::vector<int>(nodes.begin(), nodes.end());
}

GeometryMap Mesh::geometry_map(int elem, const VecN& xi) const {
  const auto& ref = ref_element(elem_kind(elem));
  const auto conn = elem_nodes(elem);
  Vec N;
  std::vector<VecN> dN;
  ref.shape_unchecked(xi, N, dN);

  GeometryMap g;
  g.x = VecN::Zero(dim_);
  g.J = MatN::Zero(dim_, dim_);
  for (int a = 0; a < ref.n_nodes(); ++a) {
    const VecN xa = node(conn[a]);
    g.x += N[a] * xa;
    g.J += xa * dN[a].transpose();
  }
  g.detJ = g.J.determinant();
  if (!(g.detJ > 0.0))
    throw InvertedElementError("non-positive Jacobian in element " + std::to_string(elem));
  g.J_inv = g.J.inverse();
  return g;
}

FacePoint Mesh::face_point(const BoundaryFace& bf, const VecN& t) const {
  const auto& ref = ref_element(elem_kind(bf.elem));
  const auto conn = elem_nodes(bf.elem);
  const auto& fnodes = ref.face_nodes(bf.face);

  FacePoint fp;
  VecN xi;
  if (dim_ == 2) {
    // Map t in [-1,1] onto the (possibly curved) edge in reference space, then
    // push tangents through the element geometry.
    const double s = 0.5 * (1.0 + t[0]);
    VecN dxi_ds;
    if (fnodes.size() == 2) {
      xi = (1.0 - s) * ref.node(fnodes[0]) + s * ref.node(fnodes[1]);
      dxi_ds = ref.node(fnodes[1]) - ref.node(fnodes[0]);
    } else {
      // quadratic edge: corner, corner, midside
      const VecN a = ref.node(fnodes[0]), b = ref.node(fnodes[1]);
      xi = (1.0 - s) * a + s * b;
      dxi_ds = b - a;
    }
    const GeometryMap g = geometry_map(bf.elem, xi);
    Vec N;
    std::vector<VecN> dN;
    ref.shape_unchecked(xi, N, dN);
    VecN tau = g.J * dxi_ds * 0.5;  // dx/dt, t in [-1,1]
    fp.ds = tau.norm();
    fp.normal = VecN(2);
    fp.normal << tau[1], -tau[0];
    fp.normal /= fp.normal.norm();
    fp.x = g.x;
    fp.shape = N;
  } else {
    const VecN a = ref.node(fnodes[0]), b = ref.node(fnodes[1]), c = ref.node(fnodes[2]);
    xi = (1.0 - t[0] - t[1]) * a + t[0] * b + t[1] * c;
    const GeometryMap g = geometry_map(bf.elem, xi);
    Vec N;
    std::vector<VecN> dN;
    ref.shape_unchecked(xi, N, dN);
    const VecN t1 = g.J * (b - a);
    const VecN t2 = g.J * (c - a);
    Eigen::Vector3d cr = Eigen::Vector3d(t1[0], t1[1], t1[2]).cross(Eigen::Vector3d(t2[0], t2[1], t2[2]));
    fp.ds = cr.norm();
    fp.normal = VecN(3);
    fp.normal << cr[0] / fp.ds, cr[1] / fp.ds, cr[2] / fp.ds;
    fp.x = g.x;
    fp.shape = N;
  }

  // Orient outward: away from the element centroid.
  VecN centroid = VecN::Zero(dim_);
  for (int n : conn) centroid += node(n);
  centroid /= static_cast<double>(conn.size());
  if (fp.normal.dot(fp.x - centroid) < 0.0) fp.normal = -fp.normal;
  return fp;
}

double Mesh::h_elem(int e) const {
  const auto conn = elem_nodes(e);
  double h = 0.0;
  for (std::size_t a = 0; a < conn.size(); ++a)
    for (std::size_t b = a + 1; b < conn.size(); ++b)
      h = std::max(h, (node(conn[a]) - node(conn[b])).norm());
  return h;
}

std::optional<std::pair<int, VecN>> Mesh::locate(const VecN& x, double tol) const {
  for (int e = 0; e < n_elems(); ++e) {
    const auto& ref = ref_element(elem_kind(e));
    // Newton inversion of the geometry map, started at the cell center.
    VecN xi = VecN::Zero(dim_);
    if (ref.kind() != CellKind::quad4) xi.setConstant(dim_ == 2 ? 1.0 / 3.0 : 0.25);
    bool ok = true;
    for (int it = 0; it < 30; ++it) {
      GeometryMap g;
      try {
        g = geometry_map(e, xi);
      } catch (const InvertedElementError&) {
        ok = false;
        break;
      }
      const VecN r = g.x - x;
      if (r.norm() < 1e-13 + 1e-13 * x.norm()) break;
      xi -= (g.J_inv * r).eval();
      if (xi.norm() > 10.0) {
        ok = false;
        break;
      }
    }
    if (ok && ref.inside(xi, tol)) {
      GeometryMap g = geometry_map(e, xi);
      if ((g.x - x).norm() < tol * (1.0 + x.norm())) return std::make_pair(e, xi);
    }
  }
  return std::nullopt;
}

void Mesh::validate() const {
  const int nn = n_nodes();
  for (const auto& b : blocks_)
    for (int c : b.conn)
      if (c < 0 || c >= nn) throw DomainError("connectivity index out of range");

  for (int e = 0; e < n_elems(); ++e) {
    const auto& ref = ref_element(elem_kind(e));
    const auto rule = quadrature_for(ref.kind(), 2 * ref.order());
    for (const auto& xi : rule.points) geometry_map(e, xi);  // throws on detJ <= 0
  }

  // Each tagged face must reference a valid (element, local face) and must lie
  // on the mesh boundary, i.e. its node set is not shared with another element's face.
  std::map<std::vector<int>, int> face_count;
  for (int e = 0; e < n_elems(); ++e) {
    const auto& ref = ref_element(elem_kind(e));
    const auto conn = elem_nodes(e);
    for (int f = 0; f < ref.n_faces(); ++f) {
      std::vector<int> key;
      for (int ln : ref.face_corners(f)) key.push_back(conn[ln]);
      std::sort(key.begin(), key.end());
      face_count[key]++;
    }
  }
  for (const auto& [tag, faces] : bsets_) {
    for (const auto& bf : faces) {
      if (bf.elem < 0 || bf.elem >= n_elems())
        throw DomainError("boundary '" + tag + "' references invalid element");
      const auto& ref = ref_element(elem_kind(bf.elem));
      if (bf.face < 0 || bf.face >= ref.n_faces())
        throw DomainError("boundary '" + tag + "' references invalid local face");
      const auto conn = elem_nodes(bf.elem);
      std::vector<int> key;
      for (int ln : ref.face_corners(bf.face)) key.push_back(conn[ln]);
      std::sort(key.begin(), key.end());
      if (face_count.at(key) != 1)
        throw DomainError("boundary '" + tag + "' face is interior (shared by two elements)");
    }
  }
}

namespace {
std::string next_token(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw IoError("unexpected end of mesh stream");
  return tok;
}
}  // namespace

Mesh read_mesh(std::istream& in) {
  std::string tok;
  int dim = 0;
  std::vector<double> coords;
  Mesh mesh;
  bool have_nodes = false;
  while (in >> tok) {
    if (tok == "$nodes") {
      dim = std::stoi(next_token(in));
      if (dim != 2 && dim != 3) throw IoError("mesh dimension must be 2 or 3");
      const int n = std::stoi(next_token(in));
      coords.resize(static_cast<std::size_t>(n) * dim);
      for (double& c : coords) c = std::stod(next_token(in));
      mesh = Mesh(dim, std::move(coords));
      have_nodes = true;
    } else if (tok == "$elements") {
      if (!have_nodes) throw IoError("$elements before $nodes");
      const CellKind kind = cell_from_name(next_token(in));
      const int m = std::stoi(next_token(in));
      std::vector<int> conn(static_cast<std::size_t>(m) * cell_nodes(kind));
      for (int& c : conn) c = std::stoi(next_token(in));
      mesh.add_block(kind, std::move(conn));
    } else if (tok == "$boundary") {
      if (!have_nodes) throw IoError("$boundary before $nodes");
      const std::string tag = next_token(in);
      const int f = std::stoi(next_token(in));
      std::vector<BoundaryFace> faces(f);
      for (auto& bf : faces) {
        bf.elem = std::stoi(next_token(in));
        bf.face = std::stoi(next_token(in));
      }
      mesh.set_boundary(tag, std::move(faces));
    } else {
      throw IoError("unknown mesh block '" + tok + "'");
    }
  }
  if (!have_nodes) throw IoError("mesh stream has no $nodes block");
  mesh.validate();
  return mesh;
}

Mesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mesh file '" + path + "'");
  return read_mesh(in);
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out << std::setprecision(17);
  out << "$nodes " << mesh.dim() << " " << mesh.n_nodes() << "\n";
  for (int a = 0; a < mesh.n_nodes(); ++a) {
    const VecN x = mesh.node(a);
    for (int i = 0; i < mesh.dim(); ++i) out << (i ? " " : "") << x[i];
    out << "\n";
  }
  for (const auto& b : mesh.blocks()) {
    const int nn = cell_nodes(b.kind);
    out << "$elements " << cell_name(b.kind) << " " << b.n_elems() << "\n";
    for (int e = 0; e < b.n_elems(); ++e) {
      for (int a = 0; a < nn; ++a) out << (a ? " " : "") << b.conn[e * nn + a];
      out << "\n";
    }
  }
  for (const auto& [tag, faces] : mesh.boundary_sets()) {
    out << "$boundary " << tag << " " << faces.size() << "\n";
    for (const auto& bf : faces) out << bf.elem << " " << bf.face << "\n";
  }
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mesh(mesh, out);
}

}  // namespace trifsi
