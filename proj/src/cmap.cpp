#include "bandlink/cmap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bandlink {

CombinatorialMap::CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma, int declared_genus,
                                   std::vector<int> component_genera)
    : alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      declared_genus_(declared_genus),
      component_genera_(std::move(component_genera)) {
  if (alpha_.size() != sigma_.size())
    throw Error(ErrorKind::MalformedPermutation, "alpha and sigma have different lengths");
  const auto in_range = [n = alpha_.size()](Dart d) { return d.value() >= 1 && d.value() <= n; };
  if (!std::all_of(alpha_.begin(), alpha_.end(), in_range) || !std::all_of(sigma_.begin(), sigma_.end(), in_range))
    throw Error(ErrorKind::MalformedPermutation, "image out of range 1.." + std::to_string(alpha_.size()));
  if (declared_genus_ < 0) throw Error(ErrorKind::GenusMismatch, "negative genus");
  if (!component_genera_.empty()) {
    if (std::any_of(component_genera_.begin(), component_genera_.end(), [](int g) { return g < 0; }))
      throw Error(ErrorKind::GenusMismatch, "negative component genus");
    if (std::accumulate(component_genera_.begin(), component_genera_.end(), 0) != declared_genus_)
      throw Error(ErrorKind::GenusMismatch, "component genera do not sum to the declared genus");
  }
}

CombinatorialMap make_map(const std::vector<std::uint32_t>& alpha, const std::vector<std::uint32_t>& sigma,
                          int declared_genus) {
  std::vector<Dart> a, s;
  a.reserve(alpha.size());
  s.reserve(sigma.size());
  for (auto x : alpha) a.emplace_back(x);
  for (auto x : sigma) s.emplace_back(x);
  return CombinatorialMap(std::move(a), std::move(s), declared_genus);
}

bool is_permutation(std::span<const Dart> perm) {
  std::vector<bool> hit(perm.size(), false);
  for (Dart d : perm) {
    if (!d.valid() || d.index() >= perm.size() || hit[d.index()]) return false;
    hit[d.index()] = true;
  }
  return true;
}

bool is_fixed_point_free_involution(std::span<const Dart> perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Dart d = perm[i];
    if (!d.valid() || d.index() >= perm.size()) return false;
    if (d.index() == i || perm[d.index()].index() != i) return false;
  }
  return true;
}

std::vector<std::vector<Dart>> orbits(std::span<const Dart> perm) {
  std::vector<std::vector<Dart>> result;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Dart> orbit;
    Dart d = Dart::from_index(i);
    while (!seen[d.index()]) {
      seen[d.index()] = true;
      orbit.push_back(d);
      d = perm[d.index()];
    }
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<std::vector<Dart>> vertex_orbits(const CombinatorialMap& map) { return orbits(map.sigma_images()); }

std::vector<std::vector<Dart>> edge_orbits(const CombinatorialMap& map) { return orbits(map.alpha_images()); }

std::vector<VertexId> vertex_of_darts(const CombinatorialMap& map) {
  std::vector<VertexId> result(map.dart_count());
  const auto vs = vertex_orbits(map);
  for (std::size_t v = 0; v < vs.size(); ++v)
    for (Dart d : vs[v]) result[d.index()] = VertexId::from_index(v);
  return result;
}

std::vector<std::size_t> edge_of_darts(const CombinatorialMap& map) {
  std::vector<std::size_t> result(map.dart_count());
  const auto es = edge_orbits(map);
  for (std::size_t e = 0; e < es.size(); ++e)
    for (Dart d : es[e]) result[d.index()] = e;
  return result;
}

std::vector<Face> faces(const CombinatorialMap& map) {
  std::vector<Dart> phi(map.dart_count());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = map.phi(Dart::from_index(i));
  const auto vertex_of = vertex_of_darts(map);

  std::vector<Face> result;
  for (auto& boundary : orbits(phi)) {
    Face f;
    f.id = FaceId::from_index(result.size());
    for (Dart d : boundary) f.vertex_list.push_back(vertex_of[d.index()]);
    f.boundary = std::move(boundary);
    result.push_back(std::move(f));
  }
  return result;
}

std::vector<std::size_t> valences(const CombinatorialMap& map) {
  std::vector<std::size_t> result;
  for (const auto& orbit : vertex_orbits(map)) result.push_back(orbit.size());
  return result;
}

Dart straight_through(const CombinatorialMap& map, Dart d) {
  const Dart one = map.sigma(d);
  const Dart two = map.sigma(one);
  if (two == d) return one;
  const Dart three = map.sigma(two);
  if (three != d && map.sigma(three) == d) return two;
  std::ostringstream msg;
  msg << "vertex at dart " << d << " is neither 2- nor 4-valent";
  throw Error(ErrorKind::BadValence, msg.str());
}

std::vector<Strand> strands(const CombinatorialMap& map) {
  for (const auto& orbit : vertex_orbits(map)) {
    if (orbit.size() != 2 && orbit.size() != 4) {
      std::ostringstream msg;
      msg << "vertex at dart " << orbit.front() << " has valence " << orbit.size();
      throw Error(ErrorKind::BadValence, msg.str());
    }
  }

  std::vector<Strand> result;
  std::vector<bool> seen(map.dart_count(), false);
  for (std::size_t i = 0; i < map.dart_count(); ++i) {
    if (seen[i]) continue;
    Strand s;
    s.id = StrandId::from_index(result.size());
    const Dart start = Dart::from_index(i);
    Dart leave = start;
    do {
      const Dart arrive = map.alpha(leave);
      seen[leave.index()] = seen[arrive.index()] = true;
      s.darts.push_back(leave);
      s.darts.push_back(arrive);
      leave = straight_through(map, arrive);
    } while (leave != start);
    result.push_back(std::move(s));
  }
  return result;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Dart>> connected_components(const CombinatorialMap& map) {
  DisjointSets sets(map.dart_count());
  for (std::size_t i = 0; i < map.dart_count(); ++i) {
    const Dart d = Dart::from_index(i);
    sets.unite(i, map.alpha(d).index());
    sets.unite(i, map.sigma(d).index());
  }
  std::vector<std::vector<Dart>> result;
  std::vector<std::size_t> slot(map.dart_count(), SIZE_MAX);
  for (std::size_t i = 0; i < map.dart_count(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = result.size();
      result.emplace_back();
    }
    result[slot[root]].push_back(Dart::from_index(i));
  }
  return result;
}

Incidence vertex_face_incidence(const CombinatorialMap& map) { return vertex_face_incidence(map, faces(map)); }

Incidence vertex_face_incidence(const CombinatorialMap& map, const std::vector<Face>& fs) {
  Incidence inc;
  inc.vertex_faces.resize(vertex_orbits(map).size());
  inc.face_vertices.reserve(fs.size());
  for (const Face& f : fs) {
    std::vector<VertexId> distinct;
    for (VertexId v : f.vertex_list)
      if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    for (VertexId v : distinct) inc.vertex_faces[v.index()].push_back(f.id);
    inc.face_vertices.push_back(std::move(distinct));
  }
  return inc;
}

ValidationReport validate(const CombinatorialMap& map) {
  ValidationReport report;
  const auto fail = [&report](ErrorKind kind) {
    if (!report.error) report.error = kind;
  };

  const bool sigma_ok = is_permutation(map.sigma_images());
  report.checks.push_back({"sigma is a permutation", sigma_ok, sigma_ok ? "" : "sigma is not bijective"});
  if (!sigma_ok) fail(ErrorKind::MalformedPermutation);

  const bool alpha_ok = is_fixed_point_free_involution(map.alpha_images());
  report.checks.push_back(
      {"alpha is a fixed-point-free involution", alpha_ok, alpha_ok ? "" : "alpha is not a fixed-point-free involution"});
  if (!alpha_ok) fail(ErrorKind::MalformedPermutation);

  if (!sigma_ok || !alpha_ok) return report;

  const auto vertex_of = vertex_of_darts(map);
  const auto fs = faces(map);
  std::vector<std::size_t> face_of(map.dart_count());
  for (const Face& f : fs)
    for (Dart d : f.boundary) face_of[d.index()] = f.id.index();

  const auto comps = connected_components(map);
  report.vertices = vertex_orbits(map).size();
  report.edges = map.dart_count() / 2;
  report.faces = fs.size();
  report.components = comps.size();

  bool euler_ok = true;
  std::ostringstream detail;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<std::size_t> vs, ffs;
    for (Dart d : comps[c]) {
      vs.push_back(vertex_of[d.index()].index());
      ffs.push_back(face_of[d.index()]);
    }
    std::sort(vs.begin(), vs.end());
    std::sort(ffs.begin(), ffs.end());
    const auto v = static_cast<long>(std::unique(vs.begin(), vs.end()) - vs.begin());
    const auto f = static_cast<long>(std::unique(ffs.begin(), ffs.end()) - ffs.begin());
    const auto e = static_cast<long>(comps[c].size() / 2);
    const long chi = v - e + f;
    if (chi % 2 != 0) {
      fail(ErrorKind::OddEuler);
      euler_ok = false;
      detail << "component " << c + 1 << " has odd Euler characteristic " << chi << "; ";
      continue;
    }
    report.component_genera.push_back(static_cast<int>((2 - chi) / 2));
  }
  report.checks.push_back({"Euler characteristic is even", euler_ok, detail.str()});
  if (!euler_ok) return report;

  report.derived_genus = std::accumulate(report.component_genera.begin(), report.component_genera.end(), 0);

  bool genus_ok = true;
  std::ostringstream gdetail;
  if (comps.size() <= 1) {
    genus_ok = report.derived_genus == map.declared_genus();
    if (!genus_ok) gdetail << "derived genus " << report.derived_genus << ", declared " << map.declared_genus();
  } else if (!map.component_genera().empty()) {
    genus_ok = map.component_genera() == report.component_genera;
    if (!genus_ok) gdetail << "per-component genera do not match the derived ones";
  } else {
    genus_ok = map.declared_genus() == 0 && report.derived_genus == 0;
    if (!genus_ok) gdetail << "disconnected map must lie on spheres unless per-component genera are given";
  }
  report.checks.push_back({"V - E + F = 2 - 2g", genus_ok, gdetail.str()});
  if (!genus_ok) fail(ErrorKind::GenusMismatch);
  return report;
}

void require_valid(const CombinatorialMap& map) {
  const auto report = validate(map);
  if (report.ok()) return;
  for (const auto& check : report.checks)
    if (!check.passed) throw Error(*report.error, check.detail.empty() ? check.name : check.detail);
  throw Error(*report.error, "invalid map");
}

}  // namespace bandlink
