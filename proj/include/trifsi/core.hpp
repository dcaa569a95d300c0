#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>
#include <string>

namespace trifsi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;

// Small vectors/matrices sized by the spatial dimension (2 or 3), stack allocated.
using VecN = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using MatN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Out-of-range evaluation points, invalid ids, inconsistent sizes.
struct DomainError : Error {
  using Error::Error;
};

// Non-positive Jacobians: tangled ALE meshes or inverted solid configurations.
struct InvertedElementError : Error {
  using Error::Error;
};

struct SolverError : Error {
  using Error::Error;
};

struct InterfaceError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

inline int sym_components(int dim) { return dim * (dim + 1) / 2; }

// Component order of symmetric tensor fields: 2D (xx, yy, xy); 3D (xx, yy, zz, xy, yz, xz).
inline std::pair<int, int> sym_index_pair(int dim, int c) {
  if (dim == 2) {
    constexpr int ij[3][2] = {{0, 0}, {1, 1}, {0, 1}};
    return {ij[c][0], ij[c][1]};
  }
  constexpr int ij[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}};
  return {ij[c][0], ij[c][1]};
}

// Basis tensor E_c of the symmetric interpolation: e_i ox e_i on the diagonal,
// e_i ox e_j + e_j ox e_i off diagonal.
inline MatN sym_basis(int dim, int c) {
  auto [i, j] = sym_index_pair(dim, c);
  MatN e = MatN::Zero(dim, dim);
  e(i, j) += 1.0;
  e(j, i) += 1.0;
  if (i == j) e(i, j) = 1.0;
  return e;
}

inline MatN sym_to_full(int dim, const Eigen::Ref<const Vec>& s) {
  MatN m(dim, dim);
  if (dim == 2) {
    m << s[0], s[2], s[2], s[1];
  } else {
    m << s[0], s[3], s[5], s[3], s[1], s[4], s[5], s[4], s[2];
  }
  return m;
}

inline VecN full_to_sym(const MatN& m) {
  const int dim = static_cast<int>(m.rows());
  VecN s(sym_components(dim));
  if (dim == 2) {
    s << m(0, 0), m(1, 1), 0.5 * (m(0, 1) + m(1, 0));
  } else {
    s << m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(1, 2) + m(2, 1)),
        0.5 * (m(0, 2) + m(2, 0));
  }
  return s;
}

}  // namespace trifsi
