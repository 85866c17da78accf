#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bandlink/band.hpp"

namespace bandlink {

// Band spec document:
//
//   { "map": "<path to .cmap>",
//     "edges": [ { "edge": <id>, "subdivisions": k, "twists": [t_0, ..., t_k] }, ... ] }
//
// "map" is resolved against `base_dir`. Edges not listed keep the values of
// minimal_band_spec; a listed edge without "twists" gets k + 1 zeros.
BandSpec parse_band_spec(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                         const std::string& source = "<spec>");
BandSpec read_band_spec_file(const std::filesystem::path& path);

// Sidecar for a built diagram: crossing_kind, circle_of_strand,
// face_provenance, n and degenerate.
nlohmann::json provenance_to_json(const BandDiagram& bd);

/// Attaches a provenance document to `diagram`, checking that its lengths
/// match the diagram's vertices, strands and faces.
BandDiagram band_from_provenance(CombinatorialMap diagram, const nlohmann::json& doc,
                                 const std::string& source = "<provenance>");

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bandlink
