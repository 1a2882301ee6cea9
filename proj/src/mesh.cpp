#include "maxwell/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace maxwell {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double signed_volume(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                     const Vec3& p3) {
  return dot3(cross(sub(p1, p0), sub(p2, p0)), sub(p3, p0)) / 6.0;
}

constexpr std::array<std::array<int, 2>, 6> kLocalEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Face l is opposite local vertex l.
constexpr std::array<std::array<int, 3>, 4> kLocalFaces = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

/// Derives edges, faces, and signed local-to-global maps from
/// vertices + tets. Tets are reordered to positive volume first.
void build_connectivity(TetMesh& mesh) {
  for (auto& tet : mesh.tets) {
    if (signed_volume(mesh.vertices[tet[0]], mesh.vertices[tet[1]],
                      mesh.vertices[tet[2]], mesh.vertices[tet[3]]) < 0.0)
      std::swap(tet[2], tet[3]);
  }

  std::map<std::array<int, 2>, int> edge_id;
  std::map<std::array<int, 3>, int> face_id;
  mesh.tet_to_edges.resize(mesh.tets.size());
  mesh.tet_to_faces.resize(mesh.tets.size());

  for (int t = 0; t < mesh.num_tets(); ++t) {
    const auto& tet = mesh.tets[t];
    for (int le = 0; le < 6; ++le) {
      int a = tet[kLocalEdges[le][0]];
      int b = tet[kLocalEdges[le][1]];
      int sign = a < b ? 1 : -1;
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] =
          edge_id.try_emplace(key, static_cast<int>(mesh.edges.size()));
      if (inserted) mesh.edges.push_back(key);
      mesh.tet_to_edges[t][le] = {it->second, sign};
    }
    for (int lf = 0; lf < 4; ++lf) {
      std::array<int, 3> key{tet[kLocalFaces[lf][0]], tet[kLocalFaces[lf][1]],
                             tet[kLocalFaces[lf][2]]};
      std::sort(key.begin(), key.end());
      auto [it, inserted] =
          face_id.try_emplace(key, static_cast<int>(mesh.faces.size()));
      if (inserted) mesh.faces.push_back(key);
      mesh.tet_to_faces[t][lf] = {it->second, 0};  // sign filled below
    }
  }

  // Face sign: +1 when the canonical normal points out of the tet.
  for (int t = 0; t < mesh.num_tets(); ++t) {
    Vec3 tc = mesh.tet_centroid(t);
    for (auto& ref : mesh.tet_to_faces[t]) {
      Vec3 n = mesh.face_area_normal(ref.index);
      Vec3 fc = mesh.face_centroid(ref.index);
      ref.sign = dot3(n, sub(fc, tc)) > 0.0 ? 1 : -1;
    }
  }

  mesh.face_label.assign(mesh.faces.size(), FaceLabel::Interior);
}

std::vector<int> face_tet_count(const TetMesh& mesh) {
  std::vector<int> count(mesh.faces.size(), 0);
  for (const auto& refs : mesh.tet_to_faces)
    for (const auto& ref : refs) ++count[ref.index];
  return count;
}

bool is_integer_multiple(double x, int n) {
  double scaled = x * n;
  return std::abs(scaled - std::round(scaled)) < 1e-12;
}

}  // namespace

double TetMesh::tet_volume(int t) const {
  const auto& tet = tets[t];
  return signed_volume(vertices[tet[0]], vertices[tet[1]], vertices[tet[2]],
                       vertices[tet[3]]);
}

Vec3 TetMesh::tet_centroid(int t) const {
  Vec3 c{0, 0, 0};
  for (int v : tets[t])
    for (int d = 0; d < 3; ++d) c[d] += vertices[v][d] / 4.0;
  return c;
}

Vec3 TetMesh::face_centroid(int f) const {
  Vec3 c{0, 0, 0};
  for (int v : faces[f])
    for (int d = 0; d < 3; ++d) c[d] += vertices[v][d] / 3.0;
  return c;
}

Vec3 TetMesh::face_area_normal(int f) const {
  const auto& tri = faces[f];
  Vec3 n = cross(sub(vertices[tri[1]], vertices[tri[0]]),
                 sub(vertices[tri[2]], vertices[tri[0]]));
  return {n[0] / 2.0, n[1] / 2.0, n[2] / 2.0};
}

int TetMesh::boundary_face_count() const {
  int c = 0;
  for (FaceLabel l : face_label)
    if (l != FaceLabel::Interior) ++c;
  return c;
}

int TetMesh::gamma_i_face_count() const {
  int c = 0;
  for (FaceLabel l : face_label)
    if (l == FaceLabel::GammaI) ++c;
  return c;
}

TetMesh generate_box(const DomainSpec& spec) {
  if (spec.kind != DomainKind::Box)
    throw InvalidSpecError("generate_box requires kind=Box");
  if (spec.n < 1) throw InvalidSpecError("subdivision count must be >= 1");

  const int n = spec.n;
  TetMesh mesh;
  auto vid = [n](int i, int j, int k) {
    return (i * (n + 1) + j) * (n + 1) + k;
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        mesh.vertices.push_back(
            {double(i) / n, double(j) / n, double(k) / n});

  // Kuhn subdivision: six tets per subcube, all sharing the main diagonal.
  constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (const auto& perm : kPerms) {
          std::array<int, 3> corner{i, j, k};
          std::array<int, 4> tet;
          tet[0] = vid(corner[0], corner[1], corner[2]);
          for (int s = 0; s < 3; ++s) {
            ++corner[perm[s]];
            tet[s + 1] = vid(corner[0], corner[1], corner[2]);
          }
          mesh.tets.push_back(tet);
        }

  build_connectivity(mesh);

  auto count = face_tet_count(mesh);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (count[f] != 1) continue;
    bool on_x0 = true;
    for (int v : mesh.faces[f]) on_x0 = on_x0 && mesh.vertices[v][0] == 0.0;
    switch (spec.impedance_assignment) {
      case ImpedanceRule::Default:
        mesh.face_label[f] = on_x0 ? FaceLabel::GammaI : FaceLabel::GammaO;
        break;
      case ImpedanceRule::AllGammaI:
        mesh.face_label[f] = FaceLabel::GammaI;
        break;
      case ImpedanceRule::AllGammaO:
        mesh.face_label[f] = FaceLabel::GammaO;
        break;
    }
  }
  return mesh;
}

TetMesh generate_box_with_cavity(const DomainSpec& spec) {
  if (spec.kind != DomainKind::BoxWithCavity)
    throw InvalidSpecError("generate_box_with_cavity requires kind=BoxWithCavity");
  if (spec.n < 1) throw InvalidSpecError("subdivision count must be >= 1");
  const int n = spec.n;
  for (int d = 0; d < 3; ++d) {
    if (!(spec.cavity_lo[d] > 0.0 && spec.cavity_hi[d] < 1.0 &&
          spec.cavity_lo[d] < spec.cavity_hi[d]))
      throw InvalidSpecError("cavity must lie strictly inside the unit box");
    if (!is_integer_multiple(spec.cavity_lo[d], n) ||
        !is_integer_multiple(spec.cavity_hi[d], n))
      throw InvalidSpecError("cavity faces must align with the grid");
  }

  std::array<int, 3> clo, chi;
  for (int d = 0; d < 3; ++d) {
    clo[d] = static_cast<int>(std::lround(spec.cavity_lo[d] * n));
    chi[d] = static_cast<int>(std::lround(spec.cavity_hi[d] * n));
  }
  auto in_cavity = [&](int i, int j, int k) {
    return i >= clo[0] && i < chi[0] && j >= clo[1] && j < chi[1] &&
           k >= clo[2] && k < chi[2];
  };

  DomainSpec full = spec;
  full.kind = DomainKind::Box;
  full.impedance_assignment = ImpedanceRule::AllGammaO;
  TetMesh box = generate_box(full);

  // Drop tets inside the cavity, compacting vertex ids.
  TetMesh mesh;
  std::vector<int> vmap(box.vertices.size(), -1);
  for (int t = 0; t < box.num_tets(); ++t) {
    Vec3 c = box.tet_centroid(t);
    int ci = static_cast<int>(c[0] * n), cj = static_cast<int>(c[1] * n),
        ck = static_cast<int>(c[2] * n);
    if (in_cavity(ci, cj, ck)) continue;
    std::array<int, 4> tet;
    for (int s = 0; s < 4; ++s) {
      int v = box.tets[t][s];
      if (vmap[v] < 0) {
        vmap[v] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(box.vertices[v]);
      }
      tet[s] = vmap[v];
    }
    mesh.tets.push_back(tet);
  }

  build_connectivity(mesh);

  auto count = face_tet_count(mesh);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (count[f] != 1) continue;
    bool on_outer = false;
    for (int d = 0; d < 3; ++d) {
      bool all0 = true, all1 = true;
      for (int v : mesh.faces[f]) {
        all0 = all0 && mesh.vertices[v][d] == 0.0;
        all1 = all1 && mesh.vertices[v][d] == 1.0;
      }
      on_outer = on_outer || all0 || all1;
    }
    switch (spec.impedance_assignment) {
      case ImpedanceRule::Default:
        mesh.face_label[f] = on_outer ? FaceLabel::GammaO : FaceLabel::GammaI;
        break;
      case ImpedanceRule::AllGammaI:
        mesh.face_label[f] = FaceLabel::GammaI;
        break;
      case ImpedanceRule::AllGammaO:
        mesh.face_label[f] = FaceLabel::GammaO;
        break;
    }
  }
  return mesh;
}

TetMesh generate(const DomainSpec& spec) {
  return spec.kind == DomainKind::Box ? generate_box(spec)
                                      : generate_box_with_cavity(spec);
}

void write_mesh(const std::string& path, const TetMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "tetmesh v1\n";
  out << "vertices " << mesh.num_vertices() << "\n";
  char buf[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << buf;
  }
  out << "tets " << mesh.num_tets() << "\n";
  for (const auto& t : mesh.tets)
    out << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  out << "boundary " << mesh.boundary_face_count() << "\n";
  for (int f = 0; f < mesh.num_faces(); ++f) {
    if (mesh.face_label[f] == FaceLabel::Interior) continue;
    out << mesh.faces[f][0] << " " << mesh.faces[f][1] << " "
        << mesh.faces[f][2] << " "
        << (mesh.face_label[f] == FaceLabel::GammaI ? "i" : "o") << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

TetMesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  int line_no = 0;
  std::string line;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(in, line)) throw MeshParseError("unexpected end of file", line_no);
    ++line_no;
    return line;
  };

  if (next_line() != "tetmesh v1")
    throw MeshParseError("expected header 'tetmesh v1'", line_no);

  auto expect_count = [&](const std::string& keyword) {
    std::istringstream s(next_line());
    std::string word;
    int count;
    if (!(s >> word >> count) || word != keyword || count < 0)
      throw MeshParseError("expected '" + keyword + " N'", line_no);
    return count;
  };

  TetMesh mesh;
  const int nv = expect_count("vertices");
  mesh.vertices.reserve(nv);
  for (int i = 0; i < nv; ++i) {
    std::istringstream s(next_line());
    Vec3 v;
    if (!(s >> v[0] >> v[1] >> v[2]))
      throw MeshParseError("malformed vertex line", line_no);
    mesh.vertices.push_back(v);
  }

  const int nt = expect_count("tets");
  std::set<std::array<int, 4>> seen;
  for (int i = 0; i < nt; ++i) {
    std::istringstream s(next_line());
    std::array<int, 4> t;
    if (!(s >> t[0] >> t[1] >> t[2] >> t[3]))
      throw MeshParseError("malformed tet line", line_no);
    for (int v : t)
      if (v < 0 || v >= nv)
        throw MeshParseError("vertex id out of range", line_no);
    std::array<int, 4> key = t;
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2] || key[2] == key[3])
      throw MeshParseError("degenerate tet", line_no);
    if (!seen.insert(key).second)
      throw MeshParseError("duplicated tet", line_no);
    mesh.tets.push_back(t);
  }

  build_connectivity(mesh);

  std::map<std::array<int, 3>, int> face_id;
  for (int f = 0; f < mesh.num_faces(); ++f) face_id[mesh.faces[f]] = f;
  auto count = face_tet_count(mesh);

  const int nb = expect_count("boundary");
  for (int i = 0; i < nb; ++i) {
    std::istringstream s(next_line());
    std::array<int, 3> tri;
    std::string label;
    if (!(s >> tri[0] >> tri[1] >> tri[2] >> label) ||
        (label != "i" && label != "o"))
      throw MeshParseError("malformed boundary face line", line_no);
    std::sort(tri.begin(), tri.end());
    auto it = face_id.find(tri);
    if (it == face_id.end())
      throw MeshParseError("boundary face not present in mesh", line_no);
    if (count[it->second] != 1)
      throw MeshParseError("labeled face is not a boundary face", line_no);
    mesh.face_label[it->second] =
        label == "i" ? FaceLabel::GammaI : FaceLabel::GammaO;
  }
  for (int f = 0; f < mesh.num_faces(); ++f)
    if (count[f] == 1 && mesh.face_label[f] == FaceLabel::Interior)
      throw MeshParseError("boundary face " + std::to_string(f) + " unlabeled",
                           line_no);
  return mesh;
}

}  // namespace maxwell
