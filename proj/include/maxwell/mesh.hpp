#ifndef MAXWELL_MESH_HPP
#define MAXWELL_MESH_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxwell {

using Vec3 = std::array<double, 3>;

enum class FaceLabel { Interior, GammaI, GammaO };

/// Rule assigning boundary faces to the impedance (GammaI) or essential
/// (GammaO) part of the boundary.
enum class ImpedanceRule {
  Default,    // box: x = 0 face impedance; cavity: cavity surface impedance
  AllGammaI,  // whole boundary impedance
  AllGammaO,  // whole boundary essential (Gamma_i empty)
};

enum class DomainKind { Box, BoxWithCavity };

struct DomainSpec {
  DomainKind kind = DomainKind::Box;
  int n = 1;  // subdivisions per axis of the unit cube
  // BoxWithCavity only: axis-aligned cavity, must align with the grid.
  Vec3 cavity_lo{0.25, 0.25, 0.25};
  Vec3 cavity_hi{0.75, 0.75, 0.75};
  ImpedanceRule impedance_assignment = ImpedanceRule::Default;
};

struct InvalidSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MeshParseError : std::runtime_error {
  MeshParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  int line_number;
};

/// Tetrahedral mesh with canonically oriented entities: edges stored as
/// (tail, head) with tail < head, faces as ascending vertex triples.
/// Immutable after construction.
struct TetMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;  // positive signed volume order
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> faces;

  struct SignedRef {
    int index;
    int sign;  // local orientation relative to the canonical entity
  };
  std::vector<std::array<SignedRef, 6>> tet_to_edges;
  std::vector<std::array<SignedRef, 4>> tet_to_faces;

  std::vector<FaceLabel> face_label;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_tets() const { return static_cast<int>(tets.size()); }

  double tet_volume(int t) const;
  Vec3 tet_centroid(int t) const;
  Vec3 face_centroid(int f) const;
  /// Area-weighted canonical normal of face (a,b,c): (b-a) x (c-a) / 2.
  Vec3 face_area_normal(int f) const;

  int boundary_face_count() const;
  int gamma_i_face_count() const;
};

TetMesh generate_box(const DomainSpec& spec);
TetMesh generate_box_with_cavity(const DomainSpec& spec);
TetMesh generate(const DomainSpec& spec);

void write_mesh(const std::string& path, const TetMesh& mesh);
TetMesh read_mesh(const std::string& path);

}  // namespace maxwell

#endif  // MAXWELL_MESH_HPP
