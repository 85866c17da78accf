#include "bandlink/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "bandlink/band_io.hpp"
#include "bandlink/bounds.hpp"
#include "bandlink/cmap_io.hpp"
#include "bandlink/render.hpp"

namespace bandlink::cli {

namespace {

namespace fs = std::filesystem;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BANDLINK_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
    throw Error(ErrorKind::InvalidSpec, std::string("BANDLINK_BUDGET is not a number: '") + env + "'");
  }
  return kDefaultSubsetBudget;
}

std::vector<VertexId> parse_vertex_list(const std::string& text) {
  std::vector<VertexId> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    char* end = nullptr;
    const auto value = std::strtoul(item.c_str(), &end, 10);
    if (*end != '\0' || value == 0) throw Error(ErrorKind::UnknownVertex, "bad vertex id '" + item + "'");
    out.emplace_back(static_cast<std::uint32_t>(value));
  }
  return out;
}

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i].value());
  return s;
}

void write_trace_file(const fs::path& path, const PercolationTrace& trace) {
  if (path.extension() == ".json") {
    write_text_file(path, trace_to_json(trace).dump(2) + "\n");
  } else {
    std::ostringstream text;
    write_trace_text(text, trace);
    write_text_file(path, text.str());
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

BandDiagram load_band(const std::string& map_path, const std::string& prov_path) {
  return band_from_provenance(read_cmap_file(map_path), read_json_file(prov_path), prov_path);
}

struct Options {
  std::string map, spec, out, provenance, trace, manual;
  bool exact = false, constructive = false, retry = false, json = false;
  std::optional<std::size_t> start_size, first_face;
  std::optional<std::uint64_t> budget;
};

HullResult constructive_hull(const BandDiagram& bd, const Options& o, std::ostream& out) {
  if (o.retry) {
    const auto r = hull_constructive_band_retrying(bd);
    if (r.attempts > 1) out << "attempts=" << r.attempts << '\n';
    return r.hull;
  }
  ConstructiveOptions co;
  if (o.first_face) co.first_face = FaceId(static_cast<std::uint32_t>(*o.first_face));
  return hull_constructive_band(bd, co);
}

HullResult exact_hull(const CombinatorialMap& map, const Options& o) {
  ExactOptions eo;
  eo.start_size = o.start_size;
  eo.budget = o.budget.value_or(default_budget());
  return hull_exact(map, eo);
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto map = read_cmap_file(o.map);
  const auto r = validate(map);
  if (r.ok()) {
    out << "V=" << r.vertices << " E=" << r.edges << " F=" << r.faces << " g=" << r.derived_genus;
    if (r.components > 1) out << " components=" << r.components;
    out << '\n';
  }
  for (const auto& c : r.checks)
    out << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  if (!r.ok()) {
    err << "error: " << to_string(*r.error) << '\n';
    return kInput;
  }
  return kOk;
}

int cmd_faces(const Options& o, std::ostream& out) {
  const auto map = read_cmap_file(o.map);
  require_valid(map);
  for (const Face& f : faces(map)) {
    out << "face " << f.id << ": darts";
    for (Dart d : f.boundary) out << ' ' << d;
    out << " | vertices";
    for (VertexId v : f.vertex_list) out << ' ' << v;
    out << '\n';
  }
  return kOk;
}

int cmd_strands(const Options& o, std::ostream& out) {
  const auto map = read_cmap_file(o.map);
  require_valid(map);
  const auto ss = strands(map);
  for (const Strand& s : ss) {
    out << "strand " << s.id << ":";
    for (Dart d : s.darts) out << ' ' << d;
    out << '\n';
  }
  out << "strands=" << ss.size() << '\n';
  return kOk;
}

int cmd_build_band(const Options& o, std::ostream& out) {
  const auto spec = read_band_spec_file(o.spec);
  const auto bd = build_band(spec);
  write_cmap_file(o.out, bd.diagram);
  if (!o.provenance.empty()) write_text_file(o.provenance, provenance_to_json(bd).dump(2) + "\n");
  const auto r = validate(bd.diagram);
  out << "n=" << bd.n << " crossings=" << r.vertices << '\n';
  out << "V=" << r.vertices << " E=" << r.edges << " F=" << r.faces << " g=" << r.derived_genus << '\n';
  if (bd.degenerate) out << "degenerate: a clasp hooks a component to itself\n";
  for (const auto& c : census(bd).components)
    for (const auto& w : c.warnings) out << "census: component " << c.circle << ": " << w << '\n';
  return kOk;
}

int cmd_percolate(const Options& o, std::ostream& out) {
  const auto map = read_cmap_file(o.map);
  require_valid(map);
  const auto manual = parse_vertex_list(o.manual);
  const auto closure = close(map, manual);
  const auto total = vertex_orbits(map).size();
  const bool ok = closure.coloring.colored_count() == total;
  if (!o.trace.empty()) write_trace_file(o.trace, closure.trace);
  if (o.json) {
    auto j = trace_to_json(closure.trace);
    j["colored"] = closure.coloring.colored_count();
    j["vertices"] = total;
    j["percolates"] = ok;
    out << j.dump(2) << '\n';
  } else {
    write_trace_text(out, closure.trace);
    out << "colored=" << closure.coloring.colored_count() << "/" << total << " percolates=" << (ok ? "yes" : "no")
        << '\n';
  }
  return ok ? kOk : kNegative;
}

int cmd_hull(const Options& o, std::ostream& out) {
  if (o.exact && o.constructive) throw CLI::ValidationError("--exact and --constructive are exclusive");
  const auto map = read_cmap_file(o.map);
  require_valid(map);
  HullResult h;
  if (o.constructive) {
    if (o.provenance.empty()) throw CLI::ValidationError("--constructive needs --provenance");
    h = constructive_hull(band_from_provenance(map, read_json_file(o.provenance), o.provenance), o, out);
  } else {
    h = exact_hull(map, o);
  }
  if (!o.trace.empty()) write_trace_file(o.trace, close(map, h.witness).trace);
  out << "h=" << h.size << " witness=" << join(h.witness) << '\n';
  out << "method=" << to_string(h.method) << " verified=" << (h.verified ? "yes" : "no");
  if (h.method == HullMethod::Exact) out << " subsets=" << h.subsets_examined;
  if (h.method == HullMethod::Constructive) out << " order=" << join(h.manual_order);
  out << '\n';
  return h.verified ? kOk : kSearch;
}

int cmd_report(const Options& o, std::ostream& out) {
  const auto bd = load_band(o.map, o.provenance);
  const HullResult h = o.exact ? exact_hull(bd.diagram, o) : constructive_hull(bd, o, out);
  const auto r = report(bd, h);
  if (o.json)
    out << report_to_json(r).dump(2) << '\n';
  else
    write_report_text(out, r);
  return r.tight() ? kOk : kNegative;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto map = read_cmap_file(o.map);
  std::optional<BandDiagram> bd;
  std::optional<PercolationTrace> trace;
  RenderOptions ro;
  if (!o.provenance.empty()) {
    bd = band_from_provenance(map, read_json_file(o.provenance), o.provenance);
    ro.face_provenance = &bd->face_provenance;
  }
  if (!o.trace.empty()) {
    trace = parse_trace(read_text(o.trace), o.trace);
    ro.trace = &*trace;
  }
  write_text_file(o.out, render_svg(map, ro));
  out << "wrote " << o.out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band-link diagrams, face percolation and hull numbers", "bandlink"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Check a map and print V, E, F and genus");
  validate_cmd->add_option("map", o.map, "CMAP file")->required();

  auto* faces_cmd = app.add_subcommand("faces", "List faces as dart cycles");
  faces_cmd->add_option("map", o.map, "CMAP file")->required();

  auto* strands_cmd = app.add_subcommand("strands", "List straight-ahead strands");
  strands_cmd->add_option("map", o.map, "CMAP file")->required();

  auto* build_cmd = app.add_subcommand("build-band", "Build a band diagram from a JSON spec");
  build_cmd->add_option("spec", o.spec, "band spec JSON")->required();
  build_cmd->add_option("-o,--output", o.out, "output CMAP file")->required();
  build_cmd->add_option("--provenance", o.provenance, "output provenance JSON");

  auto* perc_cmd = app.add_subcommand("percolate", "Close a manual coloring under the face rule");
  perc_cmd->add_option("map", o.map, "CMAP file")->required();
  perc_cmd->add_option("--manual", o.manual, "comma-separated vertex ids");
  perc_cmd->add_option("--trace", o.trace, "write the trace (text, or JSON for .json)");
  perc_cmd->add_flag("--json", o.json, "print the trace as JSON");

  auto* hull_cmd = app.add_subcommand("hull", "Find a percolating set");
  hull_cmd->add_option("map", o.map, "CMAP file")->required();
  hull_cmd->add_flag("--exact", o.exact, "exhaustive search (default)");
  hull_cmd->add_flag("--constructive", o.constructive, "face-by-face construction on a band diagram");
  hull_cmd->add_option("--provenance", o.provenance, "provenance JSON from build-band");
  hull_cmd->add_option("--start-size", o.start_size, "skip sizes below k");
  hull_cmd->add_option("--budget", o.budget, "max subsets examined");
  hull_cmd->add_option("--first-face", o.first_face, "K-face to start the construction from");
  hull_cmd->add_flag("--retry", o.retry, "retry the construction over all starting faces and vertices");
  hull_cmd->add_option("--trace", o.trace, "write the closure trace of the witness");

  auto* report_cmd = app.add_subcommand("report", "Tunnel-number bounds for a band diagram");
  report_cmd->add_option("map", o.map, "CMAP file")->required();
  report_cmd->add_option("--provenance", o.provenance, "provenance JSON from build-band")->required();
  report_cmd->add_flag("--exact", o.exact, "use the exhaustive hull");
  report_cmd->add_option("--start-size", o.start_size, "skip sizes below k (exact only)");
  report_cmd->add_option("--budget", o.budget, "max subsets examined");
  report_cmd->add_option("--first-face", o.first_face, "K-face to start the construction from");
  report_cmd->add_flag("--retry", o.retry, "retry the construction over all starting faces and vertices");
  report_cmd->add_flag("--json", o.json, "print JSON");

  auto* render_cmd = app.add_subcommand("render", "Draw a genus-0 map as SVG");
  render_cmd->add_option("map", o.map, "CMAP file")->required();
  render_cmd->add_option("--provenance", o.provenance, "provenance JSON for face labels");
  render_cmd->add_option("--trace", o.trace, "trace file for vertex tints");
  render_cmd->add_option("-o,--output", o.out, "output SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out, err);
    if (faces_cmd->parsed()) return cmd_faces(o, out);
    if (strands_cmd->parsed()) return cmd_strands(o, out);
    if (build_cmd->parsed()) return cmd_build_band(o, out);
    if (perc_cmd->parsed()) return cmd_percolate(o, out);
    if (hull_cmd->parsed()) return cmd_hull(o, out);
    if (report_cmd->parsed()) return cmd_report(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ConstructionStuck& e) {
    err << "error: " << e.what() << '\n';
    err << "partial witness: " << join(e.partial_witness()) << '\n';
    err << "hint: rerun with --retry to try every starting face and vertex, or pick one with --first-face\n";
    return kSearch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kSearch : kInput;
  }
  return kUsage;
}

}  // namespace bandlink::cli
