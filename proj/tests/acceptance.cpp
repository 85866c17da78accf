// Acceptance run: one PASS/FAIL line per criterion, indented notes below it.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bandlink/bounds.hpp"
#include "bandlink/cli.hpp"
#include "support/oracles.hpp"

using namespace bandlink;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::size_t kChainMin = 2, kChainMax = 6, kChainExactMax = 4;
constexpr double kExactSecondsPerChain = 5.0;
constexpr std::size_t kFuzzSpecs = 400;  // at least 200 required
constexpr std::size_t kMaxDiagramVertices = 18;
constexpr std::size_t kRandomMaps = 600;  // at least 500 required
constexpr std::size_t kMaxMapVertices = 20;
constexpr double kRuntimeSeconds = 300.0;
constexpr std::uint32_t kSeed = 20240601;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 12) notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void emit(int number, const std::string& title, const Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << '\n';
  for (const auto& n : v.notes) std::cout << "    " << n << '\n';
  std::cout.flush();
  if (!v.pass) ++failures;
}

std::string spec_text(const BandSpec& spec) {
  std::ostringstream s;
  s << "alpha";
  for (Dart d : spec.base_map.alpha_images()) s << ' ' << d;
  s << " | genus " << spec.base_map.declared_genus() << " | k";
  for (auto k : spec.subdivisions) s << ' ' << k;
  s << " | t";
  for (const auto& ts : spec.twists) {
    s << " [";
    for (std::size_t i = 0; i < ts.size(); ++i) s << (i ? " " : "") << ts[i];
    s << ']';
  }
  return s.str();
}

std::vector<BandSpec> fuzzed_specs(std::mt19937& rng, std::size_t t_max) {
  const auto bases = oracle::small_bases();
  std::vector<BandSpec> out;
  while (out.size() < kFuzzSpecs) {
    const auto& base = bases[rng() % bases.size()];
    auto spec = oracle::random_spec(rng, base, 1, 2, t_max);
    const std::size_t size = 2 * count_two_valent(subdivide(base, spec.subdivisions)) + 4 * count_four_valent(base) +
                             oracle::sum_twists(spec);
    if (size <= kMaxDiagramVertices) out.push_back(std::move(spec));
  }
  return out;
}

Verdict chains() {
  Verdict v;
  for (std::size_t n = kChainMin; n <= kChainMax; ++n) {
    const auto bd = build_band(minimal_band_spec(oracle::circle(static_cast<std::uint32_t>(n))));
    v.require(bd.n == n, "chain " + std::to_string(n) + " has " + std::to_string(bd.n) + " components");
    const auto h = hull_constructive_band(bd);
    v.require(h.verified && h.size == n - 1, "constructive witness of the " + std::to_string(n) + "-chain");
    std::ostringstream line;
    line << n << "-chain: constructive size " << h.size << (h.verified ? " verified" : " UNVERIFIED");

    if (n <= kChainExactMax) {
      const auto start = Clock::now();
      const auto ex = hull_exact(bd.diagram);
      const double secs = seconds_since(start);
      v.require(ex.size == n - 1, "exact hull of the " + std::to_string(n) + "-chain");
      v.require(secs < kExactSecondsPerChain, "exact search time for the " + std::to_string(n) + "-chain");
      line << ", exact h=" << ex.size << " (" << ex.subsets_examined << " subsets, " << std::fixed
           << std::setprecision(3) << secs << " s)";
    }
    const auto r = report(bd, h);
    v.require(r.conclusion && r.conclusion->tunnel_number == n - 1 && r.conclusion->heegaard_genus == n &&
                  r.conclusion->rank == n,
              "report conclusion for the " + std::to_string(n) + "-chain");
    if (r.conclusion)
      line << ", t=" << r.conclusion->tunnel_number << " g=" << r.conclusion->heegaard_genus
           << " r=" << r.conclusion->rank;
    v.note(line.str());
  }
  return v;
}

Verdict theorem_equality(const std::vector<BandSpec>& specs) {
  Verdict v;
  struct Tally {
    std::size_t runs = 0, completed = 0, stuck = 0, bad_witness = 0, exact_done = 0, exact_agree = 0;
    std::map<long, std::size_t> excess;  // exact h - (n - 1)
  };
  std::map<std::pair<int, bool>, Tally> by_genus;  // (genus, degenerate)
  std::vector<std::string> findings;

  for (const auto& spec : specs) {
    const auto bd = build_band(spec);
    auto& t = by_genus[{spec.base_map.declared_genus(), bd.degenerate}];
    ++t.runs;
    try {
      const auto h = hull_constructive_band(bd);
      ++t.completed;
      if (!(h.verified && h.size == bd.n - 1)) {
        ++t.bad_witness;
        v.require(false, "constructive witness on " + spec_text(spec));
      }
    } catch (const ConstructionStuck& e) {
      ++t.stuck;
      if (findings.size() < 3) findings.push_back("stuck (n=" + std::to_string(bd.n) + "): " + spec_text(spec));
    }
    try {
      const auto ex = hull_exact(bd.diagram);
      ++t.exact_done;
      ++t.excess[long(ex.size) - long(bd.n) + 1];
      if (ex.size == bd.n - 1) ++t.exact_agree;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }

  v.note(std::to_string(specs.size()) + " specs, |V(D_L)| <= " + std::to_string(kMaxDiagramVertices) +
         ", k in {1,2}, t in {0..3}");
  for (const auto& [key, t] : by_genus) {
    const auto [genus, degenerate] = key;
    std::ostringstream s;
    s << "genus " << genus << (degenerate ? ", degenerate" : "") << ": " << t.runs << " runs, constructive completed " << t.completed << " (stuck "
      << t.stuck << ", wrong size " << t.bad_witness << "), exact = n-1 on " << t.exact_agree << "/" << t.exact_done
      << ", h-(n-1) histogram";
    for (const auto& [d, c] : t.excess) s << ' ' << d << ':' << c;
    v.note(s.str());
    v.require(t.stuck == 0, "ConstructionStuck occurred " + std::to_string(t.stuck) + " times on genus " +
                                std::to_string(genus) + " bases");
    v.require(t.exact_agree == t.exact_done, "exact hull differs from n-1 on " +
                                                 std::to_string(t.exact_done - t.exact_agree) + " genus " +
                                                 std::to_string(genus) + " instances");
  }
  for (const auto& f : findings) v.note("finding: " + f);
  return v;
}

Verdict percolation_properties() {
  Verdict v;
  std::mt19937 rng(kSeed + 3);
  std::size_t checked = 0;
  while (checked < kRandomMaps) {
    const auto m = oracle::random_map(rng, kMaxMapVertices, 20);
    const auto n = oracle::vertex_count(m);
    if (n > kMaxMapVertices) continue;
    ++checked;
    const auto inc = vertex_face_incidence(m);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const auto as_ids = [n](std::uint64_t mask) {
      std::vector<VertexId> out;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(VertexId::from_index(i));
      return out;
    };
    const auto closed = [&](std::uint64_t mask) {
      const auto c = close(inc, as_ids(mask));
      std::uint64_t out = 0;
      for (VertexId x : c.coloring.manual) out |= std::uint64_t{1} << x.index();
      for (const auto& [x, s] : c.coloring.automatic) out |= std::uint64_t{1} << x.index();
      return out;
    };
    for (int trial = 0; trial < 4; ++trial) {
      const std::uint64_t a = rng() & rng() & all;
      const std::uint64_t b = a | (rng() & all);
      const auto ca = closed(a), cb = closed(b);
      v.require((ca & ~cb) == 0, "monotonicity");
      v.require(closed(ca) == ca, "idempotence");
      const auto seq = close_sequential(inc, as_ids(a));
      std::uint64_t sm = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (seq[i]) sm |= std::uint64_t{1} << i;
      v.require(sm == ca, "schedule independence");
      v.require(ca == oracle::closure(oracle::face_vertex_sets(m), a), "agreement with the scanning oracle");
    }
  }
  v.note(std::to_string(checked) + " random maps with at most " + std::to_string(kMaxMapVertices) +
         " vertices, 4 seed sets each");
  return v;
}

Verdict euler_invariants(const std::vector<BandSpec>& specs) {
  Verdict v;
  std::mt19937 rng(kSeed + 4);
  std::size_t maps = 0;
  for (; maps < kRandomMaps; ++maps) {
    const auto m = oracle::random_map(rng, kMaxMapVertices, 16);
    const long V = long(oracle::vertex_count(m)), E = long(m.dart_count() / 2), F = long(oracle::face_count(m));
    if (bandlink::validate(m).components != 1) continue;
    for (int g = 0; g <= 4; ++g) {
      std::vector<Dart> a(m.alpha_images().begin(), m.alpha_images().end());
      std::vector<Dart> s(m.sigma_images().begin(), m.sigma_images().end());
      const bool accepted = bandlink::validate(CombinatorialMap(a, s, g)).ok();
      v.require(accepted == (V - E + F == 2 - 2 * g), "validate accepts iff V - E + F = 2 - 2g");
    }
  }
  for (const auto& spec : specs) {
    const auto bd = build_band(spec);
    const auto r = bandlink::validate(bd.diagram);
    v.require(r.ok() && r.derived_genus == spec.base_map.declared_genus(), "genus preserved: " + spec_text(spec));
    const auto sub = subdivide(spec.base_map, spec.subdivisions);
    v.require(r.vertices == 2 * count_two_valent(sub) + 4 * count_four_valent(spec.base_map) + oracle::sum_twists(spec),
              "crossing census |V| = 2C + 4H + sum t: " + spec_text(spec));
    v.require(long(r.vertices) - long(r.edges) + long(r.faces) == 2 - 2 * r.derived_genus, "Euler for D_L");
  }
  v.note(std::to_string(maps) + " random maps against declared genera 0..4; " + std::to_string(specs.size()) +
         " fuzzed bands");
  return v;
}

Verdict census_invariant(const std::vector<BandSpec>& twisted) {
  Verdict v;
  std::mt19937 rng(kSeed + 5);
  const auto untwisted = fuzzed_specs(rng, 0);
  std::size_t checked = 0, degenerate = 0;
  for (const auto& spec : untwisted) {
    const auto bd = build_band(spec);
    if (bd.degenerate) {
      ++degenerate;
      continue;
    }
    ++checked;
    const auto c = census(bd);
    std::string why;
    for (const auto& comp : c.components)
      for (const auto& w : comp.warnings) why += w + "; ";
    v.require(c.clean(), "census of " + spec_text(spec) + ": " + why);
  }
  std::size_t twist_crossings = 0;
  for (const auto& spec : twisted) {
    const auto bd = build_band(spec);
    const auto circles = vertex_circles(bd);
    for (std::size_t x = 0; x < circles.size(); ++x) {
      if (bd.crossing_kind[x].type != CrossingType::Twist) continue;
      ++twist_crossings;
      v.require(circles[x][0] == circles[x][1], "twist crossing joins two components: " + spec_text(spec));
    }
  }
  v.note(std::to_string(checked) + " untwisted bands checked (" + std::to_string(degenerate) +
         " degenerate single-loop clasps skipped); " + std::to_string(twist_crossings) +
         " twist crossings all self-crossings");
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string capture(const std::string& command) {
  std::string out;
  if (FILE* pipe = ::popen(command.c_str(), "r")) {
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    out += "\nexit " + std::to_string(::pclose(pipe));
  }
  return out;
}

Verdict determinism(const fs::path& data) {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / ("bandlink_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(data)) fs::copy(e.path(), dir / e.path().filename());
  const auto p = [&](const std::string& name) { return (dir / name).string(); };

  const std::vector<std::vector<std::string>> commands{
      {"validate", p("triangle.cmap")},
      {"faces", p("curl.cmap")},
      {"strands", p("curl.cmap")},
      {"build-band", p("chain3.json"), "-o", p("c3.cmap"), "--provenance", p("c3.json")},
      {"build-band", p("curl_band.json"), "-o", p("cb.cmap"), "--provenance", p("cb.json")},
      {"percolate", p("c3.cmap"), "--manual", "1,5", "--trace", p("c3.trace")},
      {"percolate", p("cb.cmap"), "--manual", "5", "--json"},
      {"hull", p("c3.cmap"), "--exact"},
      {"hull", p("cb.cmap"), "--constructive", "--provenance", p("cb.json"), "--trace", p("cb.trace")},
      {"report", p("c3.cmap"), "--provenance", p("c3.json")},
      {"report", p("cb.cmap"), "--provenance", p("cb.json"), "--json", "--exact"},
      {"render", p("c3.cmap"), "--provenance", p("c3.json"), "--trace", p("c3.trace"), "-o", p("c3.svg")},
  };
  const std::vector<std::string> products{"c3.cmap", "c3.json", "cb.cmap", "cb.json", "c3.trace", "cb.trace", "c3.svg"};

  const auto round = [&] {
    std::vector<std::string> seen;
    for (const auto& c : commands) {
      std::ostringstream out, err;
      const int code = cli::run(c, out, err);
      v.require(code == cli::kOk, "command '" + c[0] + "' exit " + std::to_string(code) + ": " + err.str());
      seen.push_back(std::to_string(code) + "\n" + out.str() + err.str());
      std::string line = BANDLINK_EXE;
      for (const auto& a : c) line += " '" + a + "'";
      seen.push_back(capture(line + " 2>&1"));
    }
    for (const auto& f : products) seen.push_back(slurp(p(f)));
    return seen;
  };
  const auto first = round();
  const auto second = round();
  v.require(first == second, "two rounds of CLI commands differ");
  v.note(std::to_string(commands.size()) + " commands, in process and through the executable, plus " +
         std::to_string(products.size()) + " written files, compared byte for byte");
  fs::remove_all(dir);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = Clock::now();
  const fs::path data = argc > 1 ? fs::path(argv[1]) : fs::current_path();

  std::mt19937 rng(kSeed);
  const auto specs = fuzzed_specs(rng, 3);

  emit(1, "closed n-chains, n = 2..6: constructive n-1, exact n-1 for n <= 4, t = n-1, g = r = n", chains());
  emit(2, "fuzzed bands: constructive = exact = n-1, no ConstructionStuck", theorem_equality(specs));
  emit(3, "percolation monotone, idempotent, schedule independent", percolation_properties());
  emit(4, "validate iff Euler; bands keep genus and crossing census", euler_invariants(specs));
  emit(5, "component census of untwisted bands; twists are self-crossings", census_invariant(specs));
  emit(6, "CLI output byte-identical across runs", determinism(data));

  const double total = seconds_since(start);
  Verdict runtime;
  runtime.require(total < kRuntimeSeconds, "runtime envelope");
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << total << " s (limit " << kRuntimeSeconds << " s)";
  runtime.note(s.str());
  emit(7, "runtime envelope", runtime);

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
