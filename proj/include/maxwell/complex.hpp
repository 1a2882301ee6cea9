#ifndef MAXWELL_COMPLEX_HPP
#define MAXWELL_COMPLEX_HPP

#include <functional>
#include <vector>

#include "maxwell/mesh.hpp"
#include "maxwell/sparse.hpp"

namespace maxwell {

using VectorField = std::function<Vec3(const Vec3&)>;

/// Free-DOF bookkeeping under the impedance boundary conditions:
/// p on interior vertices, E on edges off Gamma_o, B on faces off Gamma_o,
/// L2 on all tets.
struct DofMaps {
  // global entity id -> free index, or -1 if constrained
  std::vector<int> vertex_free;
  std::vector<int> edge_free;
  std::vector<int> face_free;

  // free index -> global entity id
  std::vector<int> free_vertices;
  std::vector<int> free_edges;
  std::vector<int> free_faces;

  int p_dofs() const { return static_cast<int>(free_vertices.size()); }
  int e_dofs() const { return static_cast<int>(free_edges.size()); }
  int b_dofs() const { return static_cast<int>(free_faces.size()); }
};

/// Signed incidence matrices of the discrete gradient, curl, and
/// divergence, restricted to free DOFs. Entries are exact integers.
struct IncidenceMatrices {
  IntMatrix G;  // e_dofs x p_dofs
  IntMatrix K;  // b_dofs x e_dofs
  IntMatrix D;  // num_tets x b_dofs

  SparseMatrix Gd, Kd, Dd;  // the same matrices with double entries
};

DofMaps build_dof_maps(const TetMesh& mesh);
IncidenceMatrices build_incidence(const TetMesh& mesh, const DofMaps& dofs);

/// Canonical interpolation into the edge (Nedelec) space: per free edge,
/// the circulation of f computed with 2-point Gauss quadrature.
std::vector<double> interp_curl(const TetMesh& mesh, const DofMaps& dofs,
                                const VectorField& f);

/// Canonical interpolation into the face (Raviart-Thomas) space: per free
/// face, the flux of f computed with the degree-2 triangle rule.
std::vector<double> interp_div(const TetMesh& mesh, const DofMaps& dofs,
                               const VectorField& f);

}  // namespace maxwell

#endif  // MAXWELL_COMPLEX_HPP
