#ifndef MAXWELL_WHITNEY_HPP
#define MAXWELL_WHITNEY_HPP

#include <array>

#include "maxwell/mesh.hpp"

namespace maxwell {

/// Per-tet geometry for lowest-order (Whitney) elements: constant
/// barycentric gradients and the local entity bookkeeping shared by
/// interpolation and assembly.
struct TetGeometry {
  std::array<Vec3, 4> vertex;     // tet vertices in stored order
  std::array<Vec3, 4> grad_bary;  // constant gradients of lambda_i
  double volume;                  // positive

  // Local edge le spans local vertices edge_tail/edge_head ordered so the
  // global orientation (smaller id -> larger id) is followed directly.
  std::array<int, 6> edge_tail;
  std::array<int, 6> edge_head;

  // Local face lf lists its local vertices sorted by global id (the
  // canonical face orientation).
  std::array<std::array<int, 3>, 4> face_vertex;

  TetGeometry(const TetMesh& mesh, int t);

  Vec3 point(const std::array<double, 4>& bary) const;

  /// Whitney edge function of local edge le at barycentric coordinates.
  Vec3 edge_basis(int le, const std::array<double, 4>& bary) const;

  /// Whitney face (Raviart-Thomas) function of local face lf; unit flux
  /// through the face under its canonical orientation.
  Vec3 face_basis(int lf, const std::array<double, 4>& bary) const;
};

// Quadrature rules, exact for the polynomial degrees met at lowest order.
struct SegmentRule2 {
  std::array<double, 2> point;   // parameters in [0,1]
  std::array<double, 2> weight;  // sum to 1
  SegmentRule2();
};

struct TriangleRule3 {
  // Edge-midpoint rule, degree-2 exact; barycentric points, weights sum to 1.
  std::array<std::array<double, 3>, 3> point;
  std::array<double, 3> weight;
  TriangleRule3();
};

struct TetRule4 {
  // Four-point degree-2 rule; barycentric points, weights sum to 1.
  std::array<std::array<double, 4>, 4> point;
  std::array<double, 4> weight;
  TetRule4();
};

inline Vec3 vsub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 vcross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double vdot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace maxwell

#endif  // MAXWELL_WHITNEY_HPP
