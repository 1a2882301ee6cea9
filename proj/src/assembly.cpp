#include "maxwell/assembly.hpp"

#include <cmath>

#include "maxwell/whitney.hpp"

namespace maxwell {

namespace {

void check_positive(const std::vector<double>& v, const char* name) {
  for (double x : v)
    if (!(x > 0.0))
      throw InvalidCoefficientError(std::string(name) +
                                    " must be positive on every cell");
}

}  // namespace

CoefficientField CoefficientField::constant(const TetMesh& mesh, double eps,
                                            double mu_inv) {
  CoefficientField c;
  c.eps.assign(mesh.num_tets(), eps);
  c.mu_inv.assign(mesh.num_tets(), mu_inv);
  check_positive(c.eps, "eps");
  check_positive(c.mu_inv, "mu_inv");
  return c;
}

CoefficientField CoefficientField::box_band_jump(const TetMesh& mesh,
                                                 double band_lo, double band_hi,
                                                 double eps_jump,
                                                 double mu_inv_jump) {
  CoefficientField c;
  c.eps.resize(mesh.num_tets());
  c.mu_inv.resize(mesh.num_tets());
  for (int t = 0; t < mesh.num_tets(); ++t) {
    Vec3 cen = mesh.tet_centroid(t);
    double dist = 0.0;
    for (int d = 0; d < 3; ++d)
      dist = std::max(dist, std::abs(cen[d] - 0.5));
    bool in_band = dist >= band_lo && dist < band_hi;
    c.eps[t] = in_band ? eps_jump : 1.0;
    c.mu_inv[t] = in_band ? mu_inv_jump : 1.0;
  }
  check_positive(c.eps, "eps");
  check_positive(c.mu_inv, "mu_inv");
  return c;
}

SparseMatrix assemble_mass_p(const TetMesh& mesh, const DofMaps& dofs) {
  static const TetRule4 rule;
  std::vector<SparseMatrix::Triplet> trip;
  for (int t = 0; t < mesh.num_tets(); ++t) {
    const double v = mesh.tet_volume(t);
    for (int i = 0; i < 4; ++i) {
      int gi = dofs.vertex_free[mesh.tets[t][i]];
      if (gi < 0) continue;
      for (int j = 0; j < 4; ++j) {
        int gj = dofs.vertex_free[mesh.tets[t][j]];
        if (gj < 0) continue;
        double m = 0.0;
        for (int q = 0; q < 4; ++q)
          m += rule.weight[q] * rule.point[q][i] * rule.point[q][j];
        trip.push_back({gi, gj, v * m});
      }
    }
  }
  return SparseMatrix::from_triplets(dofs.p_dofs(), dofs.p_dofs(),
                                     std::move(trip));
}

SparseMatrix assemble_mass_E(const TetMesh& mesh, const DofMaps& dofs,
                             const CoefficientField& coeff) {
  check_positive(coeff.eps, "eps");
  static const TetRule4 rule;
  std::vector<SparseMatrix::Triplet> trip;
  for (int t = 0; t < mesh.num_tets(); ++t) {
    TetGeometry geo(mesh, t);
    const double w = coeff.eps[t] * geo.volume;
    std::array<int, 6> gdof;
    for (int le = 0; le < 6; ++le)
      gdof[le] = dofs.edge_free[mesh.tet_to_edges[t][le].index];
    std::array<std::array<Vec3, 6>, 4> basis;
    for (int q = 0; q < 4; ++q)
      for (int le = 0; le < 6; ++le)
        basis[q][le] = geo.edge_basis(le, rule.point[q]);
    for (int i = 0; i < 6; ++i) {
      if (gdof[i] < 0) continue;
      for (int j = 0; j < 6; ++j) {
        if (gdof[j] < 0) continue;
        double m = 0.0;
        for (int q = 0; q < 4; ++q)
          m += rule.weight[q] * vdot(basis[q][i], basis[q][j]);
        trip.push_back({gdof[i], gdof[j], w * m});
      }
    }
  }
  return SparseMatrix::from_triplets(dofs.e_dofs(), dofs.e_dofs(),
                                     std::move(trip));
}

SparseMatrix assemble_mass_B(const TetMesh& mesh, const DofMaps& dofs,
                             const CoefficientField& coeff) {
  check_positive(coeff.mu_inv, "mu_inv");
  static const TetRule4 rule;
  std::vector<SparseMatrix::Triplet> trip;
  for (int t = 0; t < mesh.num_tets(); ++t) {
    TetGeometry geo(mesh, t);
    const double w = coeff.mu_inv[t] * geo.volume;
    std::array<int, 4> gdof;
    for (int lf = 0; lf < 4; ++lf)
      gdof[lf] = dofs.face_free[mesh.tet_to_faces[t][lf].index];
    std::array<std::array<Vec3, 4>, 4> basis;
    for (int q = 0; q < 4; ++q)
      for (int lf = 0; lf < 4; ++lf)
        basis[q][lf] = geo.face_basis(lf, rule.point[q]);
    for (int i = 0; i < 4; ++i) {
      if (gdof[i] < 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (gdof[j] < 0) continue;
        double m = 0.0;
        for (int q = 0; q < 4; ++q)
          m += rule.weight[q] * vdot(basis[q][i], basis[q][j]);
        trip.push_back({gdof[i], gdof[j], w * m});
      }
    }
  }
  return SparseMatrix::from_triplets(dofs.b_dofs(), dofs.b_dofs(),
                                     std::move(trip));
}

SparseMatrix assemble_mass_L2(const TetMesh& mesh) {
  std::vector<double> vols(mesh.num_tets());
  for (int t = 0; t < mesh.num_tets(); ++t) vols[t] = mesh.tet_volume(t);
  return diagonal_matrix(vols);
}

SparseMatrix assemble_impedance(const TetMesh& mesh, const DofMaps& dofs,
                                double gamma) {
  if (!(gamma > -1.0)) throw InvalidCoefficientError("gamma must exceed -1");
  static const TriangleRule3 rule;

  // One adjacent tet per face.
  std::vector<int> face_tet(mesh.num_faces(), -1);
  for (int t = 0; t < mesh.num_tets(); ++t)
    for (const auto& fref : mesh.tet_to_faces[t])
      if (face_tet[fref.index] < 0) face_tet[fref.index] = t;

  std::vector<SparseMatrix::Triplet> trip;
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (mesh.face_label[f] != FaceLabel::GammaI) continue;
    const int t = face_tet[f];
    TetGeometry geo(mesh, t);

    int lf = -1;
    for (int c = 0; c < 4; ++c)
      if (mesh.tet_to_faces[t][c].index == f) lf = c;
    const auto& fv = geo.face_vertex[lf];
    const int opposite = 6 - fv[0] - fv[1] - fv[2];

    // The three tet edges lying in the face.
    std::array<int, 3> face_edge{};
    int ne = 0;
    for (int le = 0; le < 6; ++le) {
      int a = geo.edge_tail[le], b = geo.edge_head[le];
      if (a != opposite && b != opposite) face_edge[ne++] = le;
    }

    Vec3 an = mesh.face_area_normal(f);
    double area = std::sqrt(vdot(an, an));
    Vec3 nhat{an[0] / area, an[1] / area, an[2] / area};

    std::array<std::array<Vec3, 3>, 3> tangential;  // [q][edge]
    for (int q = 0; q < 3; ++q) {
      std::array<double, 4> bary{0, 0, 0, 0};
      for (int s = 0; s < 3; ++s) bary[fv[s]] = rule.point[q][s];
      for (int e = 0; e < 3; ++e) {
        Vec3 w = geo.edge_basis(face_edge[e], bary);
        double wn = vdot(w, nhat);
        tangential[q][e] = {w[0] - wn * nhat[0], w[1] - wn * nhat[1],
                            w[2] - wn * nhat[2]};
      }
    }

    for (int i = 0; i < 3; ++i) {
      int gi = dofs.edge_free[mesh.tet_to_edges[t][face_edge[i]].index];
      if (gi < 0) continue;
      for (int j = 0; j < 3; ++j) {
        int gj = dofs.edge_free[mesh.tet_to_edges[t][face_edge[j]].index];
        if (gj < 0) continue;
        double m = 0.0;
        for (int q = 0; q < 3; ++q)
          m += rule.weight[q] * vdot(tangential[q][i], tangential[q][j]);
        trip.push_back({gi, gj, (1.0 + gamma) * area * m});
      }
    }
  }
  return SparseMatrix::from_triplets(dofs.e_dofs(), dofs.e_dofs(),
                                     std::move(trip));
}

AssembledForms assemble_all(const TetMesh& mesh, const DofMaps& dofs,
                            const CoefficientField& coeff, double gamma) {
  AssembledForms forms;
  forms.Mp = assemble_mass_p(mesh, dofs);
  forms.Me = assemble_mass_E(mesh, dofs, coeff);
  forms.Mb = assemble_mass_B(mesh, dofs, coeff);
  forms.M0 = assemble_mass_L2(mesh);
  forms.Z = assemble_impedance(mesh, dofs, gamma);
  forms.gamma = gamma;
  return forms;
}

}  // namespace maxwell
