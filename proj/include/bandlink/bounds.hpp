#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "bandlink/band.hpp"
#include "bandlink/hull.hpp"

namespace bandlink {

// t(L) <= h(D_L) because the vertical arcs at a percolating set of crossings
// form an unknotting tunnel system; t(L) >= n - 1 holds for any n-component
// link. Neither inequality is proved here; the report only assembles them.
struct Conclusion {
  std::size_t tunnel_number = 0;
  std::size_t heegaard_genus = 0;  // t + 1
  std::size_t rank = 0;            // equals the Heegaard genus for band links
};

struct BoundsReport {
  std::size_t n = 0;
  HullResult hull;
  std::size_t tunnel_lower = 0;  // n - 1, a topological fact taken as given
  std::size_t tunnel_upper = 0;  // hull size
  std::optional<Conclusion> conclusion;

  bool tight() const { return conclusion.has_value(); }
};

/// Throws UnverifiedWitness unless `hull` was verified.
BoundsReport report(std::size_t n, const HullResult& hull);
BoundsReport report(const BandDiagram& bd, const HullResult& hull);

void write_report_text(std::ostream& out, const BoundsReport& r);
nlohmann::json report_to_json(const BoundsReport& r);

}  // namespace bandlink
