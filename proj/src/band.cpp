#include "bandlink/band.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bandlink {

std::string_view to_string(CrossingType type) {
  switch (type) {
    case CrossingType::Clasp: return "clasp";
    case CrossingType::Hash: return "hash";
    case CrossingType::Twist: return "twist";
  }
  return "?";
}

namespace {

void require_band_valences(const CombinatorialMap& map) {
  const auto orbits = vertex_orbits(map);
  for (const auto& orbit : orbits) {
    if (orbit.size() != 2 && orbit.size() != 4) {
      std::ostringstream msg;
      msg << "vertex at dart " << orbit.front() << " has valence " << orbit.size() << ", expected 2 or 4";
      throw Error(ErrorKind::BadValence, msg.str());
    }
  }
}

}  // namespace

std::size_t count_two_valent(const CombinatorialMap& map) {
  const auto vs = valences(map);
  return static_cast<std::size_t>(std::count(vs.begin(), vs.end(), std::size_t{2}));
}

std::size_t count_four_valent(const CombinatorialMap& map) {
  const auto vs = valences(map);
  return static_cast<std::size_t>(std::count(vs.begin(), vs.end(), std::size_t{4}));
}

BandSpec minimal_band_spec(const CombinatorialMap& base) {
  BandSpec spec{base, {}, {}};
  const auto valence = valences(base);
  const auto vertex_of = vertex_of_darts(base);
  for (const auto& edge : edge_orbits(base)) {
    const bool crossing_to_crossing = valence[vertex_of[edge[0].index()].index()] == 4 &&
                                      valence[vertex_of[edge[1].index()].index()] == 4;
    const std::size_t k = crossing_to_crossing ? 1 : 0;
    spec.subdivisions.push_back(k);
    spec.twists.emplace_back(k + 1, 0);
  }
  return spec;
}

SubdividedMap subdivide_tracked(const CombinatorialMap& map, std::span<const std::size_t> subdivisions) {
  require_valid(map);
  require_band_valences(map);
  const auto edges = edge_orbits(map);
  if (subdivisions.size() != edges.size())
    throw Error(ErrorKind::InvalidSpec, "expected " + std::to_string(edges.size()) + " subdivision counts, got " +
                                            std::to_string(subdivisions.size()));

  const auto valence = valences(map);
  const auto vertex_of = vertex_of_darts(map);

  std::vector<Dart> alpha(map.alpha_images().begin(), map.alpha_images().end());
  std::vector<Dart> sigma(map.sigma_images().begin(), map.sigma_images().end());
  const auto fresh = [&alpha, &sigma] {
    alpha.emplace_back();
    sigma.emplace_back();
    return Dart::from_index(alpha.size() - 1);
  };

  SubdividedMap result;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Dart near = edges[e][0];
    const Dart far = edges[e][1];
    const std::size_t k = subdivisions[e];
    if (k == 0 && valence[vertex_of[near.index()].index()] == 4 && valence[vertex_of[far.index()].index()] == 4)
      throw Error(ErrorKind::ZeroSubdivision,
                  "edge " + std::to_string(e + 1) + " joins two crossings and needs at least one subdivision");

    std::vector<Dart> segs{near};
    Dart previous = near;
    for (std::size_t i = 0; i < k; ++i) {
      const Dart in = fresh();
      const Dart out = fresh();
      sigma[in.index()] = out;
      sigma[out.index()] = in;
      alpha[previous.index()] = in;
      alpha[in.index()] = previous;
      segs.push_back(out);
      previous = out;
    }
    alpha[previous.index()] = far;
    alpha[far.index()] = previous;
    result.segments.push_back(std::move(segs));
  }
  result.map = CombinatorialMap(std::move(alpha), std::move(sigma), map.declared_genus(), map.component_genera());
  return result;
}

CombinatorialMap subdivide(const CombinatorialMap& map, std::span<const std::size_t> subdivisions) {
  return subdivide_tracked(map, subdivisions).map;
}

namespace {

// Incremental builder for the diagram map. Every crossing owns four
// consecutive darts in counterclockwise order.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(std::size_t base_darts) : ports_(2 * base_darts) {}

  Dart add_crossing(CrossingKind kind) {
    const Dart first = Dart::from_index(alpha_.size());
    for (std::uint32_t j = 0; j < 4; ++j) {
      alpha_.emplace_back();
      sigma_.emplace_back(first.value() + (j + 1) % 4);
    }
    kinds_.push_back(kind);
    return first;
  }

  void link(Dart a, Dart b) {
    if (alpha_[a.index()].valid() || alpha_[b.index()].valid())
      throw std::logic_error("band gadget dart linked twice");
    alpha_[a.index()] = b;
    alpha_[b.index()] = a;
  }

  // Side 0 is the strand on the left when looking out of the vertex along
  // the base dart, side 1 the one on the right.
  void set_port(Dart base, int side, Dart d) { ports_[2 * base.index() + side] = d; }
  Dart port(Dart base, int side) const { return ports_[2 * base.index() + side]; }

  std::vector<Dart>& alpha() { return alpha_; }
  std::vector<Dart>& sigma() { return sigma_; }
  std::vector<CrossingKind>& kinds() { return kinds_; }

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<CrossingKind> kinds_;
  std::vector<Dart> ports_;
};

Dart at(Dart first, std::uint32_t offset) { return Dart(first.value() + offset); }

constexpr int kLeft = 0;
constexpr int kRight = 1;

// Four crossings forming a square. Corner i sits between base darts d_i and
// d_{i+1}; its darts point towards d_i, d_{i+1}, d_{i+2}, d_{i+3}.
void add_hash(DiagramBuilder& b, const std::vector<Dart>& rotation, std::size_t base_vertex) {
  std::array<Dart, 4> corner;
  for (std::size_t i = 0; i < 4; ++i) corner[i] = b.add_crossing({CrossingType::Hash, base_vertex, i + 1});
  for (std::size_t i = 0; i < 4; ++i) {
    b.set_port(rotation[i], kLeft, at(corner[i], 0));
    b.set_port(rotation[(i + 1) % 4], kRight, at(corner[i], 1));
    b.link(at(corner[i], 2), at(corner[(i + 1) % 4], 3));
  }
}

// Two arcs crossing twice. With base darts a (west) and b (east), the arc of
// the component arriving along a hooks through the arc arriving along b.
// Upper crossing P: [to L_b, to R_a, b-arc down, a-arc down].
// Lower crossing Q: [a-arc up, b-arc up, to L_a, to R_b].
void add_clasp(DiagramBuilder& b, Dart west, Dart east, std::size_t clasp) {
  const Dart upper = b.add_crossing({CrossingType::Clasp, clasp, 1});
  const Dart lower = b.add_crossing({CrossingType::Clasp, clasp, 2});
  b.set_port(east, kLeft, at(upper, 0));
  b.set_port(west, kRight, at(upper, 1));
  b.link(at(upper, 2), at(lower, 1));
  b.link(at(upper, 3), at(lower, 0));
  b.set_port(west, kLeft, at(lower, 2));
  b.set_port(east, kRight, at(lower, 3));
}

// Band along a segment from `from` to its partner `to`. The strand on the
// left of `from` arrives on the right of `to`. Twist crossings are laid out
// left to right with darts [NE, NW, SW, SE].
void add_segment(DiagramBuilder& b, Dart from, Dart to, std::size_t twists, std::size_t segment) {
  Dart upper = b.port(from, kLeft);
  Dart lower = b.port(from, kRight);
  for (std::size_t j = 0; j < twists; ++j) {
    const Dart x = b.add_crossing({CrossingType::Twist, segment, j + 1});
    b.link(upper, at(x, 1));
    b.link(lower, at(x, 2));
    upper = at(x, 0);
    lower = at(x, 3);
  }
  b.link(upper, b.port(to, kRight));
  b.link(lower, b.port(to, kLeft));
}

}  // namespace

BandDiagram build_band(const BandSpec& spec) {
  const CombinatorialMap& base = spec.base_map;
  const SubdividedMap sub = subdivide_tracked(base, spec.subdivisions);
  if (spec.twists.size() != sub.segments.size())
    throw Error(ErrorKind::InvalidSpec, "expected twist lists for " + std::to_string(sub.segments.size()) + " edges");
  for (std::size_t e = 0; e < sub.segments.size(); ++e)
    if (spec.twists[e].size() != sub.segments[e].size())
      throw Error(ErrorKind::InvalidSpec, "edge " + std::to_string(e + 1) + " needs " +
                                              std::to_string(sub.segments[e].size()) + " twist counts");

  const CombinatorialMap& m = sub.map;
  DiagramBuilder builder(m.dart_count());

  std::size_t clasps = 0;
  const auto rotations = vertex_orbits(m);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    if (rotations[v].size() == 4)
      add_hash(builder, rotations[v], v + 1);
    else
      add_clasp(builder, rotations[v][0], rotations[v][1], ++clasps);
  }

  std::size_t segment = 0;
  for (std::size_t e = 0; e < sub.segments.size(); ++e)
    for (std::size_t j = 0; j < sub.segments[e].size(); ++j) {
      const Dart from = sub.segments[e][j];
      add_segment(builder, from, m.alpha(from), spec.twists[e][j], ++segment);
    }

  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const Dart base_dart = Dart::from_index(d);
    const Dart left = builder.port(base_dart, kLeft);
    if (builder.sigma()[left.index()] != builder.port(m.sigma(base_dart), kRight))
      throw std::logic_error("band gadget corner does not match the base rotation");
  }

  BandDiagram bd;
  bd.crossing_kind = std::move(builder.kinds());
  bd.diagram = CombinatorialMap(std::move(builder.alpha()), std::move(builder.sigma()), base.declared_genus());

  const auto report = validate(bd.diagram);
  if (!report.ok() && report.components > 1 && !base.component_genera().empty() &&
      report.derived_genus == base.declared_genus()) {
    bd.diagram = CombinatorialMap(std::vector<Dart>(bd.diagram.alpha_images().begin(), bd.diagram.alpha_images().end()),
                                  std::vector<Dart>(bd.diagram.sigma_images().begin(), bd.diagram.sigma_images().end()),
                                  base.declared_genus(), report.component_genera);
  }
  require_valid(bd.diagram);

  const auto ss = strands(bd.diagram);
  bd.n = ss.size();
  for (std::size_t i = 0; i < ss.size(); ++i) bd.circle_of_strand.push_back(CircleId::from_index(i));
  if (bd.n != count_two_valent(m)) throw std::logic_error("component count differs from clasp count");

  const auto circles = vertex_circles(bd);
  for (std::size_t v = 0; v < circles.size(); ++v)
    if (bd.crossing_kind[v].type == CrossingType::Clasp && circles[v][0] == circles[v][1]) bd.degenerate = true;

  // The base face through dart e corresponds to the diagram face through the
  // port on the right of e.
  const auto diagram_faces = faces(bd.diagram);
  std::vector<FaceId> face_of(bd.diagram.dart_count());
  for (const Face& f : diagram_faces)
    for (Dart d : f.boundary) face_of[d.index()] = f.id;
  const auto base_faces = faces(m);
  bd.face_provenance.assign(diagram_faces.size(), FaceProvenance{});
  std::vector<bool> base_used(base_faces.size(), false);
  for (const Face& bf : base_faces) {
    for (Dart e : bf.boundary) {
      const FaceId target = face_of[builder.port(e, kRight).index()];
      auto& prov = bd.face_provenance[target.index()];
      if (prov.origin == FaceOrigin::KFace && prov.base_face != bf.id)
        throw std::logic_error("diagram face assigned to two base faces");
      prov = {FaceOrigin::KFace, bf.id};
    }
  }
  std::size_t kfaces = 0;
  for (const auto& prov : bd.face_provenance) {
    if (prov.origin != FaceOrigin::KFace) continue;
    ++kfaces;
    if (base_used[prov.base_face.index()]) throw std::logic_error("base face split across diagram faces");
    base_used[prov.base_face.index()] = true;
  }
  if (kfaces != base_faces.size()) throw std::logic_error("base faces and diagram K-faces are not in bijection");
  return bd;
}

std::vector<std::array<CircleId, 2>> vertex_circles(const CombinatorialMap& diagram,
                                                   std::span<const CircleId> circle_of_strand) {
  const auto ss = strands(diagram);
  std::vector<CircleId> circle_of_dart(diagram.dart_count());
  for (std::size_t s = 0; s < ss.size(); ++s)
    for (Dart d : ss[s].darts) circle_of_dart[d.index()] = circle_of_strand[s];

  std::vector<std::array<CircleId, 2>> result;
  for (const auto& rotation : vertex_orbits(diagram)) {
    CircleId a = circle_of_dart[rotation[0].index()];
    CircleId b = circle_of_dart[rotation[1].index()];
    if (b < a) std::swap(a, b);
    result.push_back({a, b});
  }
  return result;
}

std::vector<std::array<CircleId, 2>> vertex_circles(const BandDiagram& bd) {
  return vertex_circles(bd.diagram, bd.circle_of_strand);
}

bool CensusReport::clean() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.warnings.empty(); });
}

CensusReport census(const BandDiagram& bd) {
  const auto circles = vertex_circles(bd);
  std::vector<std::map<std::pair<CircleId, CrossingType>, std::size_t>> contacts(bd.n);
  CensusReport report;
  report.components.resize(bd.n);
  for (std::size_t c = 0; c < bd.n; ++c) report.components[c].circle = CircleId::from_index(c);

  for (std::size_t v = 0; v < circles.size(); ++v) {
    const auto [a, b] = circles[v];
    const CrossingType type = bd.crossing_kind[v].type;
    if (a == b) {
      auto& comp = report.components[a.index()];
      if (type == CrossingType::Twist)
        ++comp.twist_self_crossings;
      else if (type == CrossingType::Clasp)
        ++comp.clasp_self_crossings;
      else
        comp.warnings.push_back("hash crossing of a component with itself");
      continue;
    }
    ++contacts[a.index()][{b, type}];
    ++contacts[b.index()][{a, type}];
  }

  for (std::size_t c = 0; c < bd.n; ++c) {
    auto& comp = report.components[c];
    std::size_t clasp_points = comp.clasp_self_crossings;
    std::size_t hash_partners = 0;
    for (const auto& [key, count] : contacts[c]) {
      comp.contacts.push_back({key.first, key.second, count});
      std::ostringstream msg;
      if (key.second == CrossingType::Clasp) {
        clasp_points += count;
        if (count % 2 != 0) {
          msg << "odd clasp crossing count " << count << " with component " << key.first;
          comp.warnings.push_back(msg.str());
        }
      } else if (key.second == CrossingType::Hash) {
        ++hash_partners;
        if (count != 4) {
          msg << "hash meets component " << key.first << " in " << count << " points, expected 4";
          comp.warnings.push_back(msg.str());
        }
      } else {
        msg << "twist crossing shared with component " << key.first;
        comp.warnings.push_back(msg.str());
      }
    }
    if (comp.clasp_self_crossings > 0) comp.warnings.push_back("clasp hooks the component to itself");
    if (clasp_points != 4)
      comp.warnings.push_back("component has " + std::to_string(clasp_points) + " clasp crossings, expected 4");
    if (hash_partners > 1)
      comp.warnings.push_back("component crosses " + std::to_string(hash_partners) + " others in hashes");
  }
  return report;
}

}  // namespace bandlink
