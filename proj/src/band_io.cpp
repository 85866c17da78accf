#include "bandlink/band_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bandlink/cmap_io.hpp"

namespace bandlink {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& source, const std::string& msg) {
  throw Error(ErrorKind::InvalidSpec, source + ": " + msg);
}

std::size_t as_count(const json& j, const std::string& what, const std::string& source) {
  if (!j.is_number_unsigned()) invalid(source, what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

CrossingType crossing_type_from(const std::string& name, const std::string& source) {
  if (name == "clasp") return CrossingType::Clasp;
  if (name == "hash") return CrossingType::Hash;
  if (name == "twist") return CrossingType::Twist;
  invalid(source, "unknown crossing type '" + name + "'");
}

}  // namespace

BandSpec parse_band_spec(const json& doc, const std::filesystem::path& base_dir, const std::string& source) {
  if (!doc.is_object()) invalid(source, "spec must be a JSON object");
  if (!doc.contains("map") || !doc["map"].is_string()) invalid(source, "missing string field 'map'");

  std::filesystem::path map_path = doc["map"].get<std::string>();
  if (map_path.is_relative()) map_path = base_dir / map_path;
  BandSpec spec = minimal_band_spec(read_cmap_file(map_path));

  if (!doc.contains("edges")) return spec;
  if (!doc["edges"].is_array()) invalid(source, "'edges' must be an array");

  std::set<std::size_t> seen;
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_object() || !entry.contains("edge")) invalid(source, "each edge entry needs an 'edge' id");
    const std::size_t id = as_count(entry["edge"], "'edge'", source);
    if (id < 1 || id > spec.subdivisions.size())
      invalid(source, "edge " + std::to_string(id) + " is not in 1.." + std::to_string(spec.subdivisions.size()));
    if (!seen.insert(id).second) invalid(source, "edge " + std::to_string(id) + " listed twice");

    const std::size_t e = id - 1;
    if (entry.contains("subdivisions")) spec.subdivisions[e] = as_count(entry["subdivisions"], "'subdivisions'", source);
    const std::size_t k = spec.subdivisions[e];
    spec.twists[e].assign(k + 1, 0);
    if (entry.contains("twists")) {
      const auto& t = entry["twists"];
      if (!t.is_array() || t.size() != k + 1)
        invalid(source, "edge " + std::to_string(id) + " needs " + std::to_string(k + 1) + " twist counts");
      for (std::size_t j = 0; j <= k; ++j) spec.twists[e][j] = as_count(t[j], "twist count", source);
    }
  }
  return spec;
}

BandSpec read_band_spec_file(const std::filesystem::path& path) {
  return parse_band_spec(read_json_file(path), path.parent_path(), path.string());
}

json provenance_to_json(const BandDiagram& bd) {
  json j;
  j["n"] = bd.n;
  j["degenerate"] = bd.degenerate;
  j["crossing_kind"] = json::array();
  for (const auto& k : bd.crossing_kind)
    j["crossing_kind"].push_back({{"type", std::string(to_string(k.type))}, {"owner", k.owner}, {"slot", k.slot}});
  j["circle_of_strand"] = json::array();
  for (CircleId c : bd.circle_of_strand) j["circle_of_strand"].push_back(c.value());
  j["face_provenance"] = json::array();
  for (const auto& p : bd.face_provenance) {
    if (p.origin == FaceOrigin::KFace)
      j["face_provenance"].push_back({{"origin", "kface"}, {"base_face", p.base_face.value()}});
    else
      j["face_provenance"].push_back({{"origin", "internal"}});
  }
  return j;
}

BandDiagram band_from_provenance(CombinatorialMap diagram, const json& doc, const std::string& source) {
  require_valid(diagram);
  BandDiagram bd{std::move(diagram), {}, {}, {}, 0, false};
  try {
    bd.n = doc.at("n").get<std::size_t>();
    bd.degenerate = doc.value("degenerate", false);
    for (const auto& k : doc.at("crossing_kind"))
      bd.crossing_kind.push_back(
          {crossing_type_from(k.at("type").get<std::string>(), source), k.at("owner").get<std::size_t>(),
           k.at("slot").get<std::size_t>()});
    for (const auto& c : doc.at("circle_of_strand")) bd.circle_of_strand.emplace_back(c.get<std::uint32_t>());
    for (const auto& p : doc.at("face_provenance")) {
      const auto origin = p.at("origin").get<std::string>();
      if (origin == "kface")
        bd.face_provenance.push_back({FaceOrigin::KFace, FaceId(p.at("base_face").get<std::uint32_t>())});
      else if (origin == "internal")
        bd.face_provenance.push_back({FaceOrigin::Internal, FaceId()});
      else
        invalid(source, "unknown face origin '" + origin + "'");
    }
  } catch (const json::exception& ex) {
    invalid(source, ex.what());
  }

  const auto vs = vertex_orbits(bd.diagram).size();
  const auto ss = strands(bd.diagram).size();
  const auto fs = faces(bd.diagram).size();
  if (bd.crossing_kind.size() != vs)
    invalid(source, "crossing_kind has " + std::to_string(bd.crossing_kind.size()) + " entries, map has " +
                        std::to_string(vs) + " vertices");
  if (bd.circle_of_strand.size() != ss)
    invalid(source, "circle_of_strand has " + std::to_string(bd.circle_of_strand.size()) + " entries, map has " +
                        std::to_string(ss) + " strands");
  if (bd.face_provenance.size() != fs)
    invalid(source, "face_provenance has " + std::to_string(bd.face_provenance.size()) + " entries, map has " +
                        std::to_string(fs) + " faces");
  for (CircleId c : bd.circle_of_strand)
    if (!c.valid() || c.value() > bd.n) invalid(source, "circle id " + std::to_string(c.value()) + " out of range");
  return bd;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw ParseError(path.string(), 0, ex.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
}

}  // namespace bandlink
