#pragma once

#include <string>
#include <vector>

#include "bandlink/band.hpp"
#include "bandlink/percolation.hpp"

namespace bandlink {

struct RenderOptions {
  const std::vector<FaceProvenance>* face_provenance = nullptr;  // labels faces K<id> or i
  const PercolationTrace* trace = nullptr;                       // tints vertices by step
};

/// SVG drawing of a genus-0 map. Each connected component gets a Tutte
/// layout with its longest face as the outer boundary; parallel edges and
/// loops are drawn as curves. Throws NonPlanar for positive genus.
std::string render_svg(const CombinatorialMap& map, const RenderOptions& options = {});

}  // namespace bandlink
