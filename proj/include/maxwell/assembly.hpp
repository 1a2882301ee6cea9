#ifndef MAXWELL_ASSEMBLY_HPP
#define MAXWELL_ASSEMBLY_HPP

#include <stdexcept>
#include <vector>

#include "maxwell/complex.hpp"
#include "maxwell/mesh.hpp"
#include "maxwell/sparse.hpp"

namespace maxwell {

struct InvalidCoefficientError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Piecewise-constant material coefficients, sampled at cell centroids.
struct CoefficientField {
  std::vector<double> eps;     // permittivity per tet
  std::vector<double> mu_inv;  // inverse permeability per tet

  static CoefficientField constant(const TetMesh& mesh, double eps,
                                   double mu_inv);

  /// Jump coefficient: value `jump` on cells whose centroid max-norm
  /// distance from the box center lies in [band_lo, band_hi), 1 elsewhere.
  /// The stand-in for a radial-shell jump on box domains.
  static CoefficientField box_band_jump(const TetMesh& mesh, double band_lo,
                                        double band_hi, double eps_jump,
                                        double mu_inv_jump);
};

struct AssembledForms {
  SparseMatrix Mp;  // p x p
  SparseMatrix Me;  // e x e, eps-weighted
  SparseMatrix Mb;  // b x b, mu^-1-weighted
  SparseMatrix M0;  // diagonal of tet volumes
  SparseMatrix Z;   // e x e, (1+gamma)-scaled impedance surface matrix
  double gamma = 0.0;
};

SparseMatrix assemble_mass_p(const TetMesh& mesh, const DofMaps& dofs);
SparseMatrix assemble_mass_E(const TetMesh& mesh, const DofMaps& dofs,
                             const CoefficientField& coeff);
SparseMatrix assemble_mass_B(const TetMesh& mesh, const DofMaps& dofs,
                             const CoefficientField& coeff);
SparseMatrix assemble_mass_L2(const TetMesh& mesh);
SparseMatrix assemble_impedance(const TetMesh& mesh, const DofMaps& dofs,
                                double gamma);

AssembledForms assemble_all(const TetMesh& mesh, const DofMaps& dofs,
                            const CoefficientField& coeff, double gamma);

}  // namespace maxwell

#endif  // MAXWELL_ASSEMBLY_HPP
