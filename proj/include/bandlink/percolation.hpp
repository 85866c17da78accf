#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bandlink/cmap.hpp"

namespace bandlink {

// Face rule: a vertex is colored automatically once some face containing it
// has every other (distinct) vertex colored. A face whose only distinct
// vertex is v makes v eligible right away.

struct Coloring {
  std::set<VertexId> manual;
  std::map<VertexId, std::size_t> automatic;    // vertex -> step (>= 1)
  std::map<FaceId, std::size_t> colored_faces;  // face -> step its last vertex was colored

  bool is_colored(VertexId v) const { return manual.contains(v) || automatic.contains(v); }
  std::size_t colored_count() const { return manual.size() + automatic.size(); }
};

struct TraceEntry {
  std::size_t step = 0;
  VertexId vertex;
  FaceId face;  // witnessing face, smallest id among candidates

  bool operator==(const TraceEntry&) const = default;
};

struct PercolationTrace {
  std::vector<VertexId> manual;  // ascending
  std::vector<TraceEntry> entries;

  bool operator==(const PercolationTrace&) const = default;
};

struct Closure {
  Coloring coloring;
  PercolationTrace trace;
};

/// Runs the face rule in simultaneous rounds: in every round all currently
/// eligible vertices are colored together. Throws UnknownVertex for manual
/// ids outside 1..V.
Closure close(const Incidence& inc, std::span<const VertexId> manual);
Closure close(const CombinatorialMap& map, std::span<const VertexId> manual);

bool percolates(const Incidence& inc, std::span<const VertexId> manual);
bool percolates(const CombinatorialMap& map, std::span<const VertexId> manual);

/// Same final set as `close`, coloring one eligible vertex per step (smallest
/// face, then smallest vertex).
std::vector<bool> close_sequential(const Incidence& inc, std::span<const VertexId> manual);

/// Reusable closure for repeated queries over one incidence structure. Only
/// the final colored set is computed.
class FastCloser {
 public:
  explicit FastCloser(const Incidence& inc);

  /// Colors `manual` (0-based vertex indices) and returns the size of the closure.
  std::size_t run(std::span<const std::size_t> manual);

  bool colored(std::size_t vertex) const { return colored_[vertex]; }
  std::size_t vertex_count() const { return vertex_faces_.size(); }

 private:
  void color(std::size_t v);

  std::vector<std::vector<std::size_t>> face_vertices_;
  std::vector<std::vector<std::size_t>> vertex_faces_;
  std::vector<std::size_t> uncolored_in_face_;
  std::vector<bool> colored_;
  std::vector<std::size_t> queue_;
  std::size_t count_ = 0;
};

void write_trace_text(std::ostream& out, const PercolationTrace& trace);
nlohmann::json trace_to_json(const PercolationTrace& trace);

/// Reads either the text or the JSON form of a trace.
PercolationTrace parse_trace(const std::string& text, const std::string& source = "<trace>");

}  // namespace bandlink
