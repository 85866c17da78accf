#include "bandlink/percolation.hpp"

#include <algorithm>
#include <sstream>

namespace bandlink {

namespace {

std::vector<bool> manual_mask(const Incidence& inc, std::span<const VertexId> manual) {
  std::vector<bool> colored(inc.vertex_count(), false);
  for (VertexId v : manual) {
    if (!v.valid() || v.index() >= inc.vertex_count()) {
      std::ostringstream msg;
      msg << "vertex " << v << " is not in 1.." << inc.vertex_count();
      throw Error(ErrorKind::UnknownVertex, msg.str());
    }
    colored[v.index()] = true;
  }
  return colored;
}

// The single uncolored vertex of a face, if there is exactly one.
std::optional<VertexId> last_uncolored(const std::vector<VertexId>& face, const std::vector<bool>& colored) {
  std::optional<VertexId> found;
  for (VertexId v : face) {
    if (colored[v.index()]) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

}  // namespace

Closure close(const Incidence& inc, std::span<const VertexId> manual) {
  std::vector<bool> colored = manual_mask(inc, manual);
  std::vector<std::size_t> step_of(inc.vertex_count(), 0);

  Closure result;
  for (VertexId v : manual) result.coloring.manual.insert(v);
  result.trace.manual.assign(result.coloring.manual.begin(), result.coloring.manual.end());

  for (std::size_t step = 1;; ++step) {
    std::map<VertexId, FaceId> eligible;
    for (std::size_t f = 0; f < inc.face_count(); ++f)
      if (const auto v = last_uncolored(inc.face_vertices[f], colored)) eligible.emplace(*v, FaceId::from_index(f));
    if (eligible.empty()) break;
    for (const auto& [v, f] : eligible) {
      colored[v.index()] = true;
      step_of[v.index()] = step;
      result.coloring.automatic.emplace(v, step);
      result.trace.entries.push_back({step, v, f});
    }
  }

  for (std::size_t f = 0; f < inc.face_count(); ++f) {
    const auto& vs = inc.face_vertices[f];
    if (!std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return colored[v.index()]; })) continue;
    std::size_t last = 0;
    for (VertexId v : vs) last = std::max(last, step_of[v.index()]);
    result.coloring.colored_faces.emplace(FaceId::from_index(f), last);
  }
  return result;
}

Closure close(const CombinatorialMap& map, std::span<const VertexId> manual) {
  return close(vertex_face_incidence(map), manual);
}

bool percolates(const Incidence& inc, std::span<const VertexId> manual) {
  return close(inc, manual).coloring.colored_count() == inc.vertex_count();
}

bool percolates(const CombinatorialMap& map, std::span<const VertexId> manual) {
  return percolates(vertex_face_incidence(map), manual);
}

std::vector<bool> close_sequential(const Incidence& inc, std::span<const VertexId> manual) {
  std::vector<bool> colored = manual_mask(inc, manual);
  for (;;) {
    bool changed = false;
    for (std::size_t f = 0; f < inc.face_count() && !changed; ++f) {
      if (const auto v = last_uncolored(inc.face_vertices[f], colored)) {
        colored[v->index()] = true;
        changed = true;
      }
    }
    if (!changed) return colored;
  }
}

FastCloser::FastCloser(const Incidence& inc)
    : vertex_faces_(inc.vertex_count()), colored_(inc.vertex_count(), false) {
  face_vertices_.reserve(inc.face_count());
  for (std::size_t f = 0; f < inc.face_count(); ++f) {
    std::vector<std::size_t> vs;
    for (VertexId v : inc.face_vertices[f]) {
      vs.push_back(v.index());
      vertex_faces_[v.index()].push_back(f);
    }
    face_vertices_.push_back(std::move(vs));
  }
  uncolored_in_face_.resize(face_vertices_.size());
}

void FastCloser::color(std::size_t v) {
  colored_[v] = true;
  ++count_;
  for (std::size_t f : vertex_faces_[v])
    if (--uncolored_in_face_[f] == 1) queue_.push_back(f);
}

std::size_t FastCloser::run(std::span<const std::size_t> manual) {
  std::fill(colored_.begin(), colored_.end(), false);
  count_ = 0;
  queue_.clear();
  for (std::size_t f = 0; f < face_vertices_.size(); ++f) {
    uncolored_in_face_[f] = face_vertices_[f].size();
    if (uncolored_in_face_[f] == 1) queue_.push_back(f);
  }
  for (std::size_t v : manual)
    if (!colored_[v]) color(v);

  while (!queue_.empty()) {
    const std::size_t f = queue_.back();
    queue_.pop_back();
    if (uncolored_in_face_[f] != 1) continue;
    for (std::size_t v : face_vertices_[f]) {
      if (!colored_[v]) {
        color(v);
        break;
      }
    }
  }
  return count_;
}

void write_trace_text(std::ostream& out, const PercolationTrace& trace) {
  out << "manual:";
  for (VertexId v : trace.manual) out << ' ' << v;
  out << '\n';
  for (const auto& e : trace.entries) out << "step " << e.step << " vertex " << e.vertex << " face " << e.face << '\n';
}

nlohmann::json trace_to_json(const PercolationTrace& trace) {
  nlohmann::json j;
  j["manual"] = nlohmann::json::array();
  for (VertexId v : trace.manual) j["manual"].push_back(v.value());
  j["steps"] = nlohmann::json::array();
  for (const auto& e : trace.entries)
    j["steps"].push_back({{"step", e.step}, {"vertex", e.vertex.value()}, {"face", e.face.value()}});
  return j;
}

PercolationTrace parse_trace(const std::string& text, const std::string& source) {
  PercolationTrace trace;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      for (const auto& v : j.at("manual")) trace.manual.emplace_back(v.get<std::uint32_t>());
      for (const auto& e : j.at("steps"))
        trace.entries.push_back({e.at("step").get<std::size_t>(), VertexId(e.at("vertex").get<std::uint32_t>()),
                                 FaceId(e.at("face").get<std::uint32_t>())});
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(source, 0, ex.what());
    }
    return trace;
  }

  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool seen_manual = false;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(raw);
    std::string key;
    if (!(words >> key)) continue;
    if (key == "manual:") {
      if (seen_manual) throw ParseError(source, line, "duplicate 'manual:' line");
      seen_manual = true;
      for (std::uint32_t v; words >> v;) trace.manual.emplace_back(v);
      if (!words.eof()) throw ParseError(source, line, "malformed vertex list");
    } else if (key == "step") {
      std::size_t step = 0;
      std::uint32_t v = 0, f = 0;
      std::string vk, fk;
      if (!(words >> step >> vk >> v >> fk >> f) || vk != "vertex" || fk != "face")
        throw ParseError(source, line, "expected 'step <s> vertex <v> face <f>'");
      trace.entries.push_back({step, VertexId(v), FaceId(f)});
    } else {
      throw ParseError(source, line, "unexpected '" + key + "'");
    }
  }
  if (!seen_manual) throw ParseError(source, 0, "missing 'manual:' line");
  return trace;
}

}  // namespace bandlink
