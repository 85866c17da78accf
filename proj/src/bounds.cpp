#include "bandlink/bounds.hpp"

#include <ostream>

namespace bandlink {

BoundsReport report(std::size_t n, const HullResult& hull) {
  if (!hull.verified || hull.witness.size() != hull.size)
    throw Error(ErrorKind::UnverifiedWitness, "hull witness of size " + std::to_string(hull.size) + " is not verified");
  BoundsReport r;
  r.n = n;
  r.hull = hull;
  r.tunnel_lower = n == 0 ? 0 : n - 1;
  r.tunnel_upper = hull.size;
  if (r.tunnel_lower == r.tunnel_upper) r.conclusion = Conclusion{r.tunnel_lower, r.tunnel_lower + 1, r.tunnel_lower + 1};
  return r;
}

BoundsReport report(const BandDiagram& bd, const HullResult& hull) { return report(bd.n, hull); }

void write_report_text(std::ostream& out, const BoundsReport& r) {
  out << "n=" << r.n << '\n';
  out << "hull size=" << r.hull.size << " method=" << to_string(r.hull.method) << " witness=";
  for (std::size_t i = 0; i < r.hull.witness.size(); ++i) out << (i ? "," : "") << r.hull.witness[i];
  out << '\n';
  out << "tunnel lower=" << r.tunnel_lower << " (components minus one, topological)\n";
  out << "tunnel upper=" << r.tunnel_upper << " (hull size)\n";
  if (r.conclusion) {
    out << "conclusion t=" << r.conclusion->tunnel_number << " genus=" << r.conclusion->heegaard_genus
        << " rank=" << r.conclusion->rank << '\n';
  } else {
    out << "conclusion none: " << r.tunnel_lower << " <= t <= " << r.tunnel_upper << '\n';
  }
}

nlohmann::json report_to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  nlohmann::json witness = nlohmann::json::array();
  for (VertexId v : r.hull.witness) witness.push_back(v.value());
  j["hull"] = {{"size", r.hull.size}, {"method", std::string(to_string(r.hull.method))}, {"witness", witness}};
  j["tunnel"] = {{"lower", r.tunnel_lower},
                 {"upper", r.tunnel_upper},
                 {"lower_source", "topological: components minus one"},
                 {"upper_source", "hull size"}};
  if (r.conclusion)
    j["conclusion"] = {{"t", r.conclusion->tunnel_number},
                       {"genus", r.conclusion->heegaard_genus},
                       {"rank", r.conclusion->rank}};
  else
    j["conclusion"] = nullptr;
  return j;
}

}  // namespace bandlink
