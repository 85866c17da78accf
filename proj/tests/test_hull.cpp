#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bandlink/band.hpp"
#include "bandlink/hull.hpp"
#include "support/oracles.hpp"

using namespace bandlink;

namespace {

CombinatorialMap curl() { return make_map({2, 1, 4, 3}, {2, 3, 4, 1}); }
CombinatorialMap triangle() { return make_map({6, 3, 2, 5, 4, 1}, {2, 1, 4, 3, 6, 5}); }

std::vector<std::uint32_t> values(const std::vector<VertexId>& vs) {
  std::vector<std::uint32_t> out;
  for (auto v : vs) out.push_back(v.value());
  return out;
}

BandDiagram curl_band() { return build_band({curl(), {1, 1}, {{0, 0}, {0, 0}}}); }

}  // namespace

TEST_CASE("exact hull examples") {
  const auto c = hull_exact(curl());
  CHECK(c.size == 0);
  CHECK(c.witness.empty());
  CHECK(c.verified);

  const auto t = hull_exact(triangle());
  CHECK(t.size == 2);
  CHECK(values(t.witness) == std::vector<std::uint32_t>{1, 2});

  const auto chain = build_band(minimal_band_spec(triangle()));
  const auto h = hull_exact(chain.diagram);
  CHECK(h.size == 2);
  CHECK(h.verified);
  CHECK(h.method == HullMethod::Exact);
  const auto o = oracle::hull(chain.diagram);
  CHECK(o.size == 2);
  CHECK(values(h.witness) == o.witness);
}

TEST_CASE("exact hull equals the bitmask oracle on random maps") {
  std::mt19937 rng(53);
  for (int i = 0; i < 150; ++i) {
    const auto m = oracle::random_map(rng, 12, 12);
    const auto h = hull_exact(m);
    const auto o = oracle::hull(m);
    CHECK(h.size == o.size);
    CHECK(values(h.witness) == o.witness);
    CHECK(h.verified);
  }
}

TEST_CASE("no smaller set percolates below the exact size") {
  std::mt19937 rng(59);
  const auto chain = build_band(minimal_band_spec(oracle::circle(4)));
  const auto h = hull_exact(chain.diagram);
  REQUIRE(h.size == 3);
  const auto faces = oracle::face_vertex_sets(chain.diagram);
  const auto n = oracle::vertex_count(chain.diagram);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t mask = 0;
    while (static_cast<std::size_t>(std::popcount(mask)) < h.size - 1) mask |= std::uint64_t{1} << (rng() % n);
    CHECK(oracle::closure(faces, mask) != all);
  }
}

TEST_CASE("start size and budget") {
  const auto chain = build_band(minimal_band_spec(triangle()));
  ExactOptions from_two;
  from_two.start_size = 2;
  const auto h = hull_exact(chain.diagram, from_two);
  CHECK(h.size == 2);
  CHECK(h.lower_bound_used == 2);
  CHECK(h.subsets_examined < hull_exact(chain.diagram).subsets_examined);

  ExactOptions tiny;
  tiny.budget = 3;
  try {
    hull_exact(chain.diagram, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("constructive hull on the 3-chain") {
  const auto chain = build_band(minimal_band_spec(triangle()));
  const auto h = hull_constructive_band(chain);
  CHECK(h.size == 2);
  CHECK(h.verified);
  CHECK(h.method == HullMethod::Constructive);
  CHECK(h.manual_order.size() == 2);
  CHECK(verify_witness(chain.diagram, h.witness, 2));
}

TEST_CASE("constructive hull on the curl band") {
  const auto bd = curl_band();
  const auto h = hull_constructive_band(bd);
  CHECK(h.size == 1);
  CHECK(h.verified);
  CHECK(oracle::hull(bd.diagram).size == 1);
}

TEST_CASE("twists are colored automatically") {
  auto spec = minimal_band_spec(triangle());
  spec.twists[0] = {2};
  const auto bd = build_band(spec);
  const auto h = hull_constructive_band(bd);
  CHECK(h.size == 2);
  CHECK(h.verified);
  for (VertexId v : h.witness) CHECK(bd.crossing_kind[v.index()].type != CrossingType::Twist);
}

TEST_CASE("verify_witness") {
  const auto chain = build_band(minimal_band_spec(triangle()));
  for (std::uint32_t v = 1; v <= 6; ++v) CHECK_FALSE(verify_witness(chain.diagram, std::vector<VertexId>{VertexId(v)}));
  CHECK_FALSE(verify_witness(chain.diagram, hull_exact(chain.diagram).witness, 3));
  CHECK_FALSE(verify_witness(chain.diagram, std::vector<VertexId>{VertexId(9)}));
  CHECK(verify_witness(Incidence{}, std::vector<VertexId>{}));
}

TEST_CASE("constructive and exact agree on small planar bands") {
  std::mt19937 rng(61);
  const auto bases = oracle::small_bases();
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 120; ++i) {
    const auto& base = bases[rng() % bases.size()];
    if (base.declared_genus() != 0) continue;
    const auto bd = build_band(oracle::random_spec(rng, base, 1, 2, 2));
    if (bd.crossing_kind.size() > 18) continue;
    ++checked;
    const auto h = hull_constructive_band(bd);
    CHECK(h.size == bd.n - 1);
    CHECK(h.verified);
    CHECK(hull_exact(bd.diagram).size == bd.n - 1);
  }
  CHECK(checked >= 100);
}

TEST_CASE("a torus band needs two hand colorings beyond n - 1") {
  const auto torus = make_map({3, 4, 1, 2}, {2, 3, 4, 1}, 1);
  const auto bd = build_band({torus, {2, 2}, {{0, 0, 0}, {0, 0, 0}}});
  REQUIRE(bd.n == 4);
  REQUIRE_FALSE(bd.degenerate);
  CHECK(hull_exact(bd.diagram).size == 5);
  CHECK(oracle::hull(bd.diagram).size == 5);
  CHECK_THROWS_AS(hull_constructive_band(bd), ConstructionStuck);
  CHECK_THROWS_AS(hull_constructive_band_retrying(bd), ConstructionStuck);
}

TEST_CASE("retrying over starting faces resolves larger planar bands") {
  std::mt19937 rng(67);
  int runs = 0;
  for (int i = 0; i < 5000 && runs < 300; ++i) {
    const std::uint32_t crossings = 3 + rng() % 2;
    oracle::Perm alpha(4 * crossings), sigma(4 * crossings), order(4 * crossings);
    for (std::uint32_t v = 0; v < crossings; ++v)
      for (std::uint32_t j = 0; j < 4; ++j) sigma[4 * v + j] = 4 * v + (j + 1) % 4 + 1;
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < order.size(); k += 2) {
      alpha[order[k]] = order[k + 1] + 1;
      alpha[order[k + 1]] = order[k] + 1;
    }
    const auto base = make_map(alpha, sigma, 0);
    const auto r = validate(base);
    if (!r.ok() || r.components != 1) continue;
    ++runs;
    const auto bd = build_band(oracle::random_spec(rng, base, 1, 3, 2));
    const auto result = hull_constructive_band_retrying(bd);
    CHECK(result.hull.size == bd.n - 1);
    CHECK(result.hull.verified);
  }
  CHECK(runs == 300);
}
