#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandlink/error.hpp"
#include "bandlink/ids.hpp"

namespace bandlink {

/// Graph cellularly embedded in a closed orientable surface, given as a
/// rotation system on darts 1..2E.
///
/// `alpha` pairs the two darts of each edge and `sigma` lists the darts around
/// each vertex counterclockwise. Faces are the orbits of phi = sigma o alpha.
/// The map is immutable; well-formedness of the permutations is checked by
/// `validate`, only array sizes and image ranges are checked on construction.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  /// Throws MalformedPermutation when the arrays differ in size or hold an
  /// image outside 1..dart_count.
  CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma, int declared_genus,
                   std::vector<int> component_genera = {});

  std::size_t dart_count() const { return alpha_.size(); }

  Dart alpha(Dart d) const { return alpha_[d.index()]; }
  Dart sigma(Dart d) const { return sigma_[d.index()]; }
  Dart phi(Dart d) const { return sigma(alpha(d)); }

  std::span<const Dart> alpha_images() const { return alpha_; }
  std::span<const Dart> sigma_images() const { return sigma_; }

  /// Genus of the ambient surface. For disconnected maps this is the sum of
  /// `component_genera` when those are supplied, and must be 0 otherwise.
  int declared_genus() const { return declared_genus_; }
  const std::vector<int>& component_genera() const { return component_genera_; }

  bool operator==(const CombinatorialMap&) const = default;

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  int declared_genus_ = 0;
  std::vector<int> component_genera_;
};

/// Builds a map from 1-based integer image arrays.
CombinatorialMap make_map(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& sigma,
                          int declared_genus = 0);

struct Face {
  FaceId id;
  std::vector<Dart> boundary;          // one phi-orbit, starting at its smallest dart
  std::vector<VertexId> vertex_list;   // vertex of each boundary dart, with repeats
};

struct Strand {
  StrandId id;
  std::vector<Dart> darts;             // leave, arrive, leave, arrive, ...
};

/// Orbits of `perm`, each starting at its smallest dart, ordered by that dart.
std::vector<std::vector<Dart>> orbits(std::span<const Dart> perm);

bool is_permutation(std::span<const Dart> perm);
bool is_fixed_point_free_involution(std::span<const Dart> perm);

std::vector<std::vector<Dart>> vertex_orbits(const CombinatorialMap& map);
std::vector<std::vector<Dart>> edge_orbits(const CombinatorialMap& map);

/// Vertex id of every dart (indexed by dart index). Vertices are numbered by
/// their smallest dart.
std::vector<VertexId> vertex_of_darts(const CombinatorialMap& map);

/// Edge id of every dart; edges are numbered by their smaller dart.
std::vector<std::size_t> edge_of_darts(const CombinatorialMap& map);

std::vector<Face> faces(const CombinatorialMap& map);

/// Opposite dart at a 4-valent vertex, or the other dart at a 2-valent vertex.
/// Throws BadValence for any other valence.
Dart straight_through(const CombinatorialMap& map, Dart d);

/// Closed straight-ahead walks through the diagram. Throws BadValence when a
/// vertex has valence other than 2 or 4.
std::vector<Strand> strands(const CombinatorialMap& map);

/// Darts of each connected component, ordered by smallest dart.
std::vector<std::vector<Dart>> connected_components(const CombinatorialMap& map);

struct Incidence {
  std::vector<std::vector<VertexId>> face_vertices;  // distinct, in first-visit order
  std::vector<std::vector<FaceId>> vertex_faces;     // ascending face ids

  std::size_t vertex_count() const { return vertex_faces.size(); }
  std::size_t face_count() const { return face_vertices.size(); }
};

Incidence vertex_face_incidence(const CombinatorialMap& map);
Incidence vertex_face_incidence(const CombinatorialMap& map, const std::vector<Face>& faces);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;
  int derived_genus = 0;
  std::vector<int> component_genera;  // derived, per connected component
  std::optional<ErrorKind> error;

  bool ok() const { return !error.has_value(); }
};

ValidationReport validate(const CombinatorialMap& map);

/// Throws the first failing check of `validate` as an Error.
void require_valid(const CombinatorialMap& map);

std::vector<std::size_t> valences(const CombinatorialMap& map);

}  // namespace bandlink
