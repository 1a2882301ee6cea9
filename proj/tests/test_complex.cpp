#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "maxwell/complex.hpp"
#include "test_support.hpp"

using namespace maxwell;

namespace {

/// Single reference tet with all entities free (labels cleared), the
/// hand-enumeration oracle mesh.
TetMesh make_free_tet() {
  const std::string path = "/tmp/test_free_tet.txt";
  {
    std::ofstream out(path);
    out << "tetmesh v1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n"
           "tets 1\n0 1 2 3\nboundary 4\n"
           "1 2 3 i\n0 2 3 i\n0 1 3 i\n0 1 2 i\n";
  }
  TetMesh mesh = read_mesh(path);
  std::remove(path.c_str());
  // Clear labels so no DOF is constrained (pure-complex oracle setting).
  for (auto& l : mesh.face_label) l = FaceLabel::Interior;
  return mesh;
}

int int_nnz(const IntMatrix& a) { return a.nnz(); }

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("dof counts under boundary conditions") {
  // All-GammaO n=1 box: every vertex on the boundary.
  testsupport::Fixture all_o(testsupport::box_spec(1, ImpedanceRule::AllGammaO));
  CHECK(all_o.dofs.p_dofs() == 0);

  // Default n=1 box: b_dofs = Gamma_i faces + interior faces.
  testsupport::Fixture def(testsupport::box_spec(1));
  int interior = def.mesh.num_faces() - def.mesh.boundary_face_count();
  CHECK(def.dofs.b_dofs() == def.mesh.gamma_i_face_count() + interior);

  // n=2 box: the single interior vertex.
  testsupport::Fixture n2(testsupport::box_spec(2));
  CHECK(n2.dofs.p_dofs() == 1);

  // Edge membership: an edge is constrained iff it lies in a Gamma_o face.
  for (int e = 0; e < n2.mesh.num_edges(); ++e) {
    bool on_gamma_o = false;
    for (int f = 0; f < n2.mesh.num_faces(); ++f) {
      if (n2.mesh.face_label[f] != FaceLabel::GammaO) continue;
      const auto& tri = n2.mesh.faces[f];
      const auto& edge = n2.mesh.edges[e];
      bool a = edge[0] == tri[0] || edge[0] == tri[1] || edge[0] == tri[2];
      bool b = edge[1] == tri[0] || edge[1] == tri[1] || edge[1] == tri[2];
      on_gamma_o = on_gamma_o || (a && b);
    }
    CHECK((n2.dofs.edge_free[e] < 0) == on_gamma_o);
  }
}

TEST_CASE("incidence on the free reference tet") {
  TetMesh mesh = make_free_tet();
  DofMaps dofs = build_dof_maps(mesh);
  REQUIRE(dofs.p_dofs() == 4);
  REQUIRE(dofs.e_dofs() == 6);
  REQUIRE(dofs.b_dofs() == 4);
  IncidenceMatrices inc = build_incidence(mesh, dofs);
  CHECK(inc.G.rows() == 6);
  CHECK(inc.G.cols() == 4);
  for (int r = 0; r < 6; ++r) {
    int plus = 0, minus = 0;
    for (int k = inc.G.row_ptr()[r]; k < inc.G.row_ptr()[r + 1]; ++k) {
      if (inc.G.values()[k] == 1) ++plus;
      if (inc.G.values()[k] == -1) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
  CHECK(int_nnz(spgemm(inc.K, inc.G)) == 0);
  CHECK(int_nnz(spgemm(inc.D, inc.K)) == 0);
}

TEST_CASE("KG = 0 and DK = 0 integer-exact across the mesh ladder") {
  for (int n : {1, 2, 3}) {
    testsupport::Fixture fx(testsupport::box_spec(n));
    CHECK(int_nnz(spgemm(fx.inc.K, fx.inc.G)) == 0);
    CHECK(int_nnz(spgemm(fx.inc.D, fx.inc.K)) == 0);
  }
  testsupport::Fixture cav(testsupport::cavity_spec(4));
  CHECK(int_nnz(spgemm(cav.inc.K, cav.inc.G)) == 0);
  CHECK(int_nnz(spgemm(cav.inc.D, cav.inc.K)) == 0);
}

TEST_CASE("interp_curl of a constant field gives exact circulations") {
  testsupport::Fixture fx(testsupport::box_spec(2, ImpedanceRule::AllGammaI));
  auto f = [](const Vec3&) -> Vec3 { return {1.0, 0.0, 0.0}; };
  std::vector<double> c = interp_curl(fx.mesh, fx.dofs, f);
  for (int fe = 0; fe < fx.dofs.e_dofs(); ++fe) {
    const auto& edge = fx.mesh.edges[fx.dofs.free_edges[fe]];
    double want =
        fx.mesh.vertices[edge[1]][0] - fx.mesh.vertices[edge[0]][0];
    CHECK(c[fe] == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("interp_curl commutes with grad on linears") {
  TetMesh mesh = make_free_tet();
  DofMaps dofs = build_dof_maps(mesh);
  IncidenceMatrices inc = build_incidence(mesh, dofs);
  auto v = [](const Vec3& x) { return 2.0 * x[0] - x[1] + 0.5 * x[2] + 3.0; };
  std::vector<double> vv(4);
  for (int p = 0; p < 4; ++p) vv[p] = v(mesh.vertices[dofs.free_vertices[p]]);
  std::vector<double> via_g = inc.Gd.apply(vv);
  auto gradv = [](const Vec3&) -> Vec3 { return {2.0, -1.0, 0.5}; };
  std::vector<double> direct = interp_curl(mesh, dofs, gradv);
  for (int e = 0; e < 6; ++e)
    CHECK(direct[e] == doctest::Approx(via_g[e]).epsilon(1e-14));
}

TEST_CASE("K annihilates interpolated gradients of quadratics") {
  testsupport::Fixture fx(testsupport::box_spec(2, ImpedanceRule::AllGammaI));
  // grad(x^2 y + z^2) is quadratic and curl-free.
  auto f = [](const Vec3& x) -> Vec3 {
    return {2.0 * x[0] * x[1], x[0] * x[0], 2.0 * x[2]};
  };
  std::vector<double> c = interp_curl(fx.mesh, fx.dofs, f);
  std::vector<double> kc = fx.inc.Kd.apply(c);
  CHECK(norm_inf(kc) <= 1e-12 * std::max(1.0, norm_inf(c)));
}

TEST_CASE("interp_div flux examples") {
  testsupport::Fixture fx(testsupport::box_spec(2, ImpedanceRule::AllGammaI));

  // Constant field: DOF = area normal dot f.
  auto f = [](const Vec3&) -> Vec3 { return {0.3, -0.7, 1.1}; };
  std::vector<double> c = interp_div(fx.mesh, fx.dofs, f);
  for (int ff = 0; ff < fx.dofs.b_dofs(); ++ff) {
    Vec3 n = fx.mesh.face_area_normal(fx.dofs.free_faces[ff]);
    double want = 0.3 * n[0] - 0.7 * n[1] + 1.1 * n[2];
    CHECK(c[ff] == doctest::Approx(want).epsilon(1e-13));
  }

  // curl of a quadratic potential: solenoidal, linear field.
  auto curlg = [](const Vec3& x) -> Vec3 {
    // curl of g = (0, x^2 z, x y^2) evaluated by hand
    return {2.0 * x[0] * x[1] - x[0] * x[0], -x[1] * x[1], 2.0 * x[0] * x[2]};
  };
  std::vector<double> b = interp_div(fx.mesh, fx.dofs, curlg);
  std::vector<double> db = fx.inc.Dd.apply(b);
  CHECK(norm_inf(db) <= 1e-12 * std::max(1.0, norm_inf(b)));

  // f = (x,y,z): divergence theorem gives 3 * volume per tet.
  auto fid = [](const Vec3& x) -> Vec3 { return x; };
  std::vector<double> r = interp_div(fx.mesh, fx.dofs, fid);
  std::vector<double> dr = fx.inc.Dd.apply(r);
  for (int t = 0; t < fx.mesh.num_tets(); ++t)
    CHECK(dr[t] == doctest::Approx(3.0 * fx.mesh.tet_volume(t)).epsilon(1e-12));
}

TEST_CASE("commuting diagram for degree-1 fields") {
  testsupport::Fixture fx(testsupport::box_spec(2, ImpedanceRule::AllGammaI));
  // f linear; curl f constant.
  auto f = [](const Vec3& x) -> Vec3 {
    return {x[1] + 2.0 * x[2], 3.0 * x[0] - x[2], x[0] + x[1]};
  };
  auto curlf = [](const Vec3&) -> Vec3 {
    return {1.0 + 1.0, 2.0 - 1.0, 3.0 - 1.0};
  };
  std::vector<double> lhs = fx.inc.Kd.apply(interp_curl(fx.mesh, fx.dofs, f));
  std::vector<double> rhs = interp_div(fx.mesh, fx.dofs, curlf);
  REQUIRE(lhs.size() == rhs.size());
  for (size_t i = 0; i < lhs.size(); ++i)
    CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));

  // D interp_div(f) = cellwise integral of div f (constant here).
  std::vector<double> db = fx.inc.Dd.apply(interp_div(fx.mesh, fx.dofs, f));
  const double divf = 0.0;  // div of the f above
  for (int t = 0; t < fx.mesh.num_tets(); ++t)
    CHECK(std::abs(db[t] - divf * fx.mesh.tet_volume(t)) <= 1e-13);
}

}  // TEST_SUITE
