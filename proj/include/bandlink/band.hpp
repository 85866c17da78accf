#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "bandlink/cmap.hpp"

namespace bandlink {

/// Parameters of the band construction over a base diagram whose vertices
/// are 4-valent (crossings) or 2-valent (clasp sites already placed).
///
/// Indexing follows the canonical edge order of the base map (edges numbered
/// by their smaller dart). Each base edge e with k_e inserted vertices is cut
/// into k_e + 1 segments, listed from the smaller dart's end.
struct BandSpec {
  CombinatorialMap base_map;
  std::vector<std::size_t> subdivisions;
  std::vector<std::vector<std::size_t>> twists;
};

/// Spec with the fewest legal subdivisions (one per edge joining two
/// 4-valent vertices, none elsewhere) and no twists.
BandSpec minimal_band_spec(const CombinatorialMap& base);

struct SubdividedMap {
  CombinatorialMap map;
  /// segments[e][j]: dart of segment j of base edge e, pointing away from the
  /// end at the base edge's smaller dart.
  std::vector<std::vector<Dart>> segments;
};

/// Inserts `subdivisions[e]` 2-valent vertices on base edge e. Original darts
/// keep their ids; new darts are appended edge by edge. Throws
/// ZeroSubdivision when an edge between two 4-valent vertices receives none.
SubdividedMap subdivide_tracked(const CombinatorialMap& map, std::span<const std::size_t> subdivisions);
CombinatorialMap subdivide(const CombinatorialMap& map, std::span<const std::size_t> subdivisions);

enum class CrossingType { Clasp, Hash, Twist };

std::string_view to_string(CrossingType type);

struct CrossingKind {
  CrossingType type = CrossingType::Clasp;
  std::size_t owner = 0;  // clasp id, base vertex id, or segment id (all 1-based)
  std::size_t slot = 0;   // 1..2 for clasps, 1..4 for hashes, 1..t along a twist

  bool operator==(const CrossingKind&) const = default;
};

enum class FaceOrigin { KFace, Internal };

struct FaceProvenance {
  FaceOrigin origin = FaceOrigin::Internal;
  FaceId base_face;  // valid only for KFace

  bool operator==(const FaceProvenance&) const = default;
};

struct BandDiagram {
  CombinatorialMap diagram;
  std::vector<CrossingKind> crossing_kind;      // per diagram vertex
  std::vector<CircleId> circle_of_strand;       // per diagram strand
  std::vector<FaceProvenance> face_provenance;  // per diagram face
  std::size_t n = 0;                            // link components
  bool degenerate = false;                      // some clasp hooks a component to itself

  bool operator==(const BandDiagram&) const = default;
};

/// Replaces crossings by hash shadows, 2-valent vertices by clasp shadows and
/// segments by twist shadows, then glues them along the base incidences.
/// Throws on invalid input and GenusMismatch if the result is not cellular.
BandDiagram build_band(const BandSpec& spec);

/// The two circle components through each diagram vertex (equal for
/// self-crossings).
std::vector<std::array<CircleId, 2>> vertex_circles(const CombinatorialMap& diagram,
                                                   std::span<const CircleId> circle_of_strand);
std::vector<std::array<CircleId, 2>> vertex_circles(const BandDiagram& bd);

std::size_t count_two_valent(const CombinatorialMap& map);
std::size_t count_four_valent(const CombinatorialMap& map);

struct CensusContact {
  CircleId other;
  CrossingType kind = CrossingType::Clasp;
  std::size_t crossings = 0;
};

struct ComponentCensus {
  CircleId circle;
  std::vector<CensusContact> contacts;  // other components, ordered by (other, kind)
  std::size_t twist_self_crossings = 0;
  std::size_t clasp_self_crossings = 0;
  std::vector<std::string> warnings;
};

struct CensusReport {
  std::vector<ComponentCensus> components;

  bool clean() const;
};

/// Per component, how it meets the others. Flags components that do not
/// meet the others in exactly two clasp ends and at most one hash.
CensusReport census(const BandDiagram& bd);

}  // namespace bandlink
