#include "maxwell/complex.hpp"

#include "maxwell/whitney.hpp"

namespace maxwell {

DofMaps build_dof_maps(const TetMesh& mesh) {
  std::vector<bool> vertex_on_boundary(mesh.num_vertices(), false);
  std::vector<bool> edge_on_gamma_o(mesh.num_edges(), false);

  // Edge -> faces containing it, via tet maps.
  std::vector<std::vector<int>> face_edges(mesh.num_faces());
  for (int t = 0; t < mesh.num_tets(); ++t) {
    for (const auto& fref : mesh.tet_to_faces[t]) {
      auto& fe = face_edges[fref.index];
      if (!fe.empty()) continue;
      const auto& tri = mesh.faces[fref.index];
      for (const auto& eref : mesh.tet_to_edges[t]) {
        const auto& e = mesh.edges[eref.index];
        bool a_in = e[0] == tri[0] || e[0] == tri[1] || e[0] == tri[2];
        bool b_in = e[1] == tri[0] || e[1] == tri[1] || e[1] == tri[2];
        if (a_in && b_in) fe.push_back(eref.index);
      }
    }
  }

  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (mesh.face_label[f] == FaceLabel::Interior) continue;
    for (int v : mesh.faces[f]) vertex_on_boundary[v] = true;
    if (mesh.face_label[f] == FaceLabel::GammaO)
      for (int e : face_edges[f]) edge_on_gamma_o[e] = true;
  }

  DofMaps dofs;
  dofs.vertex_free.assign(mesh.num_vertices(), -1);
  dofs.edge_free.assign(mesh.num_edges(), -1);
  dofs.face_free.assign(mesh.num_faces(), -1);
  for (int v = 0; v < mesh.num_vertices(); ++v)
    if (!vertex_on_boundary[v]) {
      dofs.vertex_free[v] = static_cast<int>(dofs.free_vertices.size());
      dofs.free_vertices.push_back(v);
    }
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (!edge_on_gamma_o[e]) {
      dofs.edge_free[e] = static_cast<int>(dofs.free_edges.size());
      dofs.free_edges.push_back(e);
    }
  for (int f = 0; f < mesh.num_faces(); ++f)
    if (mesh.face_label[f] != FaceLabel::GammaO) {
      dofs.face_free[f] = static_cast<int>(dofs.free_faces.size());
      dofs.free_faces.push_back(f);
    }
  return dofs;
}

IncidenceMatrices build_incidence(const TetMesh& mesh, const DofMaps& dofs) {
  using Trip = IntMatrix::Triplet;

  std::vector<Trip> g;
  for (int fe = 0; fe < dofs.e_dofs(); ++fe) {
    const auto& edge = mesh.edges[dofs.free_edges[fe]];
    if (int col = dofs.vertex_free[edge[1]]; col >= 0)
      g.push_back({fe, col, +1});
    if (int col = dofs.vertex_free[edge[0]]; col >= 0)
      g.push_back({fe, col, -1});
  }

  // Face circulation in ascending-vertex order (a,b,c): +(a,b) +(b,c) -(a,c).
  std::vector<Trip> k;
  {
    std::vector<std::vector<std::pair<int, int>>> head_by_tail(
        mesh.num_vertices());
    for (int e = 0; e < mesh.num_edges(); ++e)
      head_by_tail[mesh.edges[e][0]].push_back({mesh.edges[e][1], e});
    auto edge_id = [&](int a, int b) {
      for (const auto& [head, id] : head_by_tail[a])
        if (head == b) return id;
      return -1;
    };
    for (int ff = 0; ff < dofs.b_dofs(); ++ff) {
      const auto& tri = mesh.faces[dofs.free_faces[ff]];
      const std::array<std::array<int, 3>, 3> bnd = {
          {{tri[0], tri[1], +1}, {tri[1], tri[2], +1}, {tri[0], tri[2], -1}}};
      for (const auto& [a, b, sign] : bnd) {
        int e = edge_id(a, b);
        if (int col = dofs.edge_free[e]; col >= 0)
          k.push_back({ff, col, sign});
      }
    }
  }

  std::vector<Trip> d;
  for (int t = 0; t < mesh.num_tets(); ++t)
    for (const auto& fref : mesh.tet_to_faces[t])
      if (int col = dofs.face_free[fref.index]; col >= 0)
        d.push_back({t, col, fref.sign});

  IncidenceMatrices inc;
  inc.G = IntMatrix::from_triplets(dofs.e_dofs(), dofs.p_dofs(), std::move(g));
  inc.K = IntMatrix::from_triplets(dofs.b_dofs(), dofs.e_dofs(), std::move(k));
  inc.D =
      IntMatrix::from_triplets(mesh.num_tets(), dofs.b_dofs(), std::move(d));
  inc.Gd = inc.G.cast<double>();
  inc.Kd = inc.K.cast<double>();
  inc.Dd = inc.D.cast<double>();
  return inc;
}

std::vector<double> interp_curl(const TetMesh& mesh, const DofMaps& dofs,
                                const VectorField& f) {
  static const SegmentRule2 rule;
  std::vector<double> coeff(dofs.e_dofs(), 0.0);
  for (int fe = 0; fe < dofs.e_dofs(); ++fe) {
    const auto& edge = mesh.edges[dofs.free_edges[fe]];
    const Vec3& tail = mesh.vertices[edge[0]];
    Vec3 dir = vsub(mesh.vertices[edge[1]], tail);
    double val = 0.0;
    for (int q = 0; q < 2; ++q) {
      Vec3 x{tail[0] + rule.point[q] * dir[0], tail[1] + rule.point[q] * dir[1],
             tail[2] + rule.point[q] * dir[2]};
      val += rule.weight[q] * vdot(f(x), dir);
    }
    coeff[fe] = val;
  }
  return coeff;
}

std::vector<double> interp_div(const TetMesh& mesh, const DofMaps& dofs,
                               const VectorField& f) {
  static const TriangleRule3 rule;
  std::vector<double> coeff(dofs.b_dofs(), 0.0);
  for (int ff = 0; ff < dofs.b_dofs(); ++ff) {
    const int face = dofs.free_faces[ff];
    const auto& tri = mesh.faces[face];
    Vec3 n = mesh.face_area_normal(face);  // area-weighted canonical normal
    double val = 0.0;
    for (int q = 0; q < 3; ++q) {
      Vec3 x{0, 0, 0};
      for (int s = 0; s < 3; ++s)
        for (int dcomp = 0; dcomp < 3; ++dcomp)
          x[dcomp] += rule.point[q][s] * mesh.vertices[tri[s]][dcomp];
      val += rule.weight[q] * vdot(f(x), n);
    }
    coeff[ff] = val;
  }
  return coeff;
}

}  // namespace maxwell
