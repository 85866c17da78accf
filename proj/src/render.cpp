#include "bandlink/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace bandlink {

namespace {

constexpr double kBox = 420.0;
constexpr double kRadius = 170.0;
constexpr int kTutteRounds = 5000;

struct Point {
  double x = 0, y = 0;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

double norm(Point a) { return std::hypot(a.x, a.y); }

Point unit(Point a) {
  const double n = norm(a);
  return n < 1e-9 ? Point{1, 0} : (1.0 / n) * a;
}

Point rotate(Point a, double angle) {
  return {a.x * std::cos(angle) - a.y * std::sin(angle), a.x * std::sin(angle) + a.y * std::cos(angle)};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << (std::abs(v) < 0.005 ? 0.0 : v);
  return s.str();
}

std::string fmt(Point p) { return fmt(p.x) + "," + fmt(p.y); }

// Manual vertices red; automatic ones from orange (early) to pale yellow (late).
std::string tint(std::size_t step, std::size_t last_step) {
  if (step == 0) return "#d62728";
  const double t = last_step <= 1 ? 0.0 : double(step - 1) / double(last_step - 1);
  const int green = 140 + static_cast<int>(std::lround(100 * t));
  const int blue = 40 + static_cast<int>(std::lround(120 * t));
  std::ostringstream s;
  s << "#ff" << std::hex << std::setw(2) << std::setfill('0') << green << std::setw(2) << blue;
  return s.str();
}

}  // namespace

std::string render_svg(const CombinatorialMap& map, const RenderOptions& options) {
  const auto report = validate(map);
  if (!report.ok()) require_valid(map);
  if (report.derived_genus > 0)
    throw Error(ErrorKind::NonPlanar, "cannot draw a map of genus " + std::to_string(report.derived_genus));

  const auto fs = faces(map);
  const auto inc = vertex_face_incidence(map, fs);
  const auto vertex_of = vertex_of_darts(map);
  const auto edge_of = edge_of_darts(map);
  const auto edges = edge_orbits(map);
  const auto comps = connected_components(map);
  const std::size_t vcount = inc.vertex_count();

  std::vector<std::size_t> face_of(map.dart_count());
  for (const Face& f : fs)
    for (Dart d : f.boundary) face_of[d.index()] = f.id.index();

  // Layout nodes: vertices, then one per edge, then one per face.
  const std::size_t edge_base = vcount, face_base = vcount + edges.size();
  const std::size_t nodes = face_base + fs.size();
  std::vector<std::vector<std::size_t>> adj(nodes);
  const auto link = [&adj](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (Dart d : edges[e]) {
      link(edge_base + e, vertex_of[d.index()].index());
      link(edge_base + e, face_base + face_of[d.index()]);
    }
  for (const Face& f : fs)
    for (VertexId v : inc.face_vertices[f.id.index()]) link(face_base + f.id.index(), v.index());

  std::vector<Point> pos(nodes);
  std::vector<bool> fixed(nodes, false);
  std::vector<std::size_t> comp_of_vertex(vcount);
  std::vector<Point> centre(comps.size());
  std::vector<std::size_t> outer_of_comp(comps.size());

  for (std::size_t c = 0; c < comps.size(); ++c) {
    centre[c] = {kBox * (double(c) + 0.5), kBox / 2};
    std::size_t outer = face_of[comps[c].front().index()];
    for (Dart d : comps[c]) {
      comp_of_vertex[vertex_of[d.index()].index()] = c;
      const std::size_t f = face_of[d.index()];
      if (fs[f].boundary.size() > fs[outer].boundary.size()) outer = f;
    }
    outer_of_comp[c] = outer;

    // the outer boundary, vertices and edges in boundary order, each once
    std::vector<std::size_t> ring;
    for (Dart d : fs[outer].boundary)
      for (std::size_t node : {vertex_of[d.index()].index(), edge_base + edge_of[d.index()]})
        if (std::find(ring.begin(), ring.end(), node) == ring.end()) ring.push_back(node);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double angle = 2 * std::numbers::pi * double(i) / double(ring.size()) - std::numbers::pi / 2;
      pos[ring[i]] = centre[c] + Point{kRadius * std::cos(angle), kRadius * std::sin(angle)};
      fixed[ring[i]] = true;
    }
    fixed[face_base + outer] = true;
    pos[face_base + outer] = centre[c] + Point{-kBox / 2 + 18, -kBox / 2 + 18};
    for (Dart d : comps[c]) {
      for (std::size_t node : {vertex_of[d.index()].index(), edge_base + edge_of[d.index()], face_base + face_of[d.index()]})
        if (!fixed[node]) pos[node] = centre[c];
    }
  }

  for (int round = 0; round < kTutteRounds; ++round) {
    double moved = 0;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (fixed[v] || adj[v].empty()) continue;
      Point sum;
      std::size_t count = 0;
      for (std::size_t w : adj[v]) {
        if (w >= face_base && fixed[w]) continue;  // the outer face has no position of its own
        sum = sum + pos[w];
        ++count;
      }
      const Point next = (1.0 / double(count)) * sum;
      moved = std::max(moved, norm(next - pos[v]));
      pos[v] = next;
    }
    if (moved < 1e-7) break;
  }

  std::vector<std::size_t> step(vcount, SIZE_MAX);
  std::size_t last_step = 0;
  if (options.trace) {
    for (VertexId v : options.trace->manual)
      if (v.valid() && v.index() < vcount) step[v.index()] = 0;
    for (const auto& e : options.trace->entries) {
      if (!e.vertex.valid() || e.vertex.index() >= vcount) continue;
      step[e.vertex.index()] = e.step;
      last_step = std::max(last_step, e.step);
    }
  }

  std::ostringstream svg;
  const double width = kBox * double(std::max<std::size_t>(comps.size(), 1));
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(kBox)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(kBox) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // each edge passes through its own layout node
  svg << "<g fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\">\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Point a = pos[vertex_of[edges[e][0].index()].index()];
    const Point b = pos[vertex_of[edges[e][1].index()].index()];
    const Point m = pos[edge_base + e];
    if (norm(a - b) < 1e-9) {
      const Point k = (1.0 / 3.0) * (4.0 * m - a);
      const Point side = 0.6 * norm(m - a) * rotate(unit(m - a), std::numbers::pi / 2);
      svg << "<path d=\"M" << fmt(a) << " C" << fmt(k + side) << ' ' << fmt(k - side) << ' ' << fmt(a) << "\"/>\n";
    } else {
      const Point control = 2.0 * m - 0.5 * (a + b);
      svg << "<path d=\"M" << fmt(a) << " Q" << fmt(control) << ' ' << fmt(b) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (options.face_provenance) {
    svg << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#1f77b4\" text-anchor=\"middle\">\n";
    for (const Face& f : fs) {
      if (f.id.index() >= options.face_provenance->size()) continue;
      const auto& p = (*options.face_provenance)[f.id.index()];
      const std::string label =
          p.origin == FaceOrigin::KFace ? "K" + std::to_string(p.base_face.value()) : std::string("i");
      const Point at = pos[face_base + f.id.index()];
      svg << "<text x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y + 3) << "\">" << label << "</text>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">\n";
  for (std::size_t v = 0; v < vcount; ++v) {
    const std::string fill = step[v] == SIZE_MAX ? "#ffffff" : tint(step[v], last_step);
    svg << "<circle cx=\"" << fmt(pos[v].x) << "\" cy=\"" << fmt(pos[v].y) << "\" r=\"8\" fill=\"" << fill
        << "\" stroke=\"#333\"/>";
    svg << "<text x=\"" << fmt(pos[v].x) << "\" y=\"" << fmt(pos[v].y + 3) << "\">" << v + 1 << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace bandlink
