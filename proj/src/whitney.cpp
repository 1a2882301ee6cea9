#include "maxwell/whitney.hpp"

#include <cmath>

namespace maxwell {

namespace {
constexpr std::array<std::array<int, 2>, 6> kLocalEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 3>, 4> kLocalFaces = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
}  // namespace

TetGeometry::TetGeometry(const TetMesh& mesh, int t) {
  const auto& tet = mesh.tets[t];
  for (int s = 0; s < 4; ++s) vertex[s] = mesh.vertices[tet[s]];

  volume = mesh.tet_volume(t);
  // grad lambda_i = (opposite face area normal, inward) / (3 V); computed
  // from the cofactor form n_i = (v_j - v_l) x (v_k - v_l) oriented inward.
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4, k = (i + 2) % 4, l = (i + 3) % 4;
    Vec3 n = vcross(vsub(vertex[j], vertex[l]), vsub(vertex[k], vertex[l]));
    double s = vdot(n, vsub(vertex[i], vertex[l]));
    double c = (s > 0 ? 1.0 : -1.0) / (6.0 * volume);
    grad_bary[i] = {n[0] * c, n[1] * c, n[2] * c};
  }

  for (int le = 0; le < 6; ++le) {
    int a = kLocalEdges[le][0], b = kLocalEdges[le][1];
    if (tet[a] < tet[b]) {
      edge_tail[le] = a;
      edge_head[le] = b;
    } else {
      edge_tail[le] = b;
      edge_head[le] = a;
    }
  }
  for (int lf = 0; lf < 4; ++lf) {
    face_vertex[lf] = kLocalFaces[lf];
    auto& fv = face_vertex[lf];
    // sort locals by global id (3 elements)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2 - i; ++j)
        if (tet[fv[j]] > tet[fv[j + 1]]) std::swap(fv[j], fv[j + 1]);
  }
}

Vec3 TetGeometry::point(const std::array<double, 4>& bary) const {
  Vec3 p{0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int d = 0; d < 3; ++d) p[d] += bary[i] * vertex[i][d];
  return p;
}

Vec3 TetGeometry::edge_basis(int le, const std::array<double, 4>& bary) const {
  const int a = edge_tail[le], b = edge_head[le];
  Vec3 w;
  for (int d = 0; d < 3; ++d)
    w[d] = bary[a] * grad_bary[b][d] - bary[b] * grad_bary[a][d];
  return w;
}

Vec3 TetGeometry::face_basis(int lf, const std::array<double, 4>& bary) const {
  const auto& fv = face_vertex[lf];
  const Vec3& ga = grad_bary[fv[0]];
  const Vec3& gb = grad_bary[fv[1]];
  const Vec3& gc = grad_bary[fv[2]];
  Vec3 bc = vcross(gb, gc), ca = vcross(gc, ga), ab = vcross(ga, gb);
  Vec3 w;
  for (int d = 0; d < 3; ++d)
    w[d] = 2.0 * (bary[fv[0]] * bc[d] + bary[fv[1]] * ca[d] +
                  bary[fv[2]] * ab[d]);
  return w;
}

SegmentRule2::SegmentRule2() {
  const double off = 0.5 / std::sqrt(3.0);
  point = {0.5 - off, 0.5 + off};
  weight = {0.5, 0.5};
}

TriangleRule3::TriangleRule3() {
  point = {{{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}}};
  weight = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
}

TetRule4::TetRule4() {
  const double a = 0.5854101966249685;  // (5 + 3 sqrt(5)) / 20
  const double b = 0.1381966011250105;  // (5 - sqrt(5)) / 20
  point = {{{a, b, b, b}, {b, a, b, b}, {b, b, a, b}, {b, b, b, a}}};
  weight = {0.25, 0.25, 0.25, 0.25};
}

}  // namespace maxwell
