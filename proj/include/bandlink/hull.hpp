#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bandlink/band.hpp"
#include "bandlink/cmap.hpp"
#include "bandlink/percolation.hpp"

namespace bandlink {

enum class HullMethod { Exact, Constructive };

std::string_view to_string(HullMethod method);

struct HullResult {
  std::vector<VertexId> witness;  // ascending
  std::size_t size = 0;
  bool verified = false;
  HullMethod method = HullMethod::Exact;
  std::optional<std::size_t> lower_bound_used;
  std::uint64_t subsets_examined = 0;   // exact search only
  std::vector<VertexId> manual_order;   // constructive only: order of manual colorings
  std::size_t relaxed_steps = 0;        // constructive only: steps taken on non-innermost faces
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;

struct ExactOptions {
  /// Caller asserts that no smaller set percolates.
  std::optional<std::size_t> start_size;
  std::uint64_t budget = kDefaultSubsetBudget;
};

/// Smallest percolating set, searched by size and then lexicographically, so
/// the witness is the lexicographically least one of minimum size. Throws
/// BudgetExceeded once more than `budget` subsets would be examined.
HullResult hull_exact(const Incidence& inc, const ExactOptions& options = {});
HullResult hull_exact(const CombinatorialMap& map, const ExactOptions& options = {});

class ConstructionStuck : public Error {
 public:
  ConstructionStuck(const std::string& message, std::vector<VertexId> partial, std::size_t colored);

  const std::vector<VertexId>& partial_witness() const { return partial_; }
  std::size_t colored() const { return colored_; }

 private:
  std::vector<VertexId> partial_;
  std::size_t colored_;
};

struct ConstructiveOptions {
  /// K-face to start from; defaults to the K-face with the smallest id.
  std::optional<FaceId> first_face;
  /// Boundary position on the first face where the walk begins; defaults to
  /// the position of the face's smallest vertex.
  std::optional<std::size_t> start_position;
  /// When no innermost K-face makes progress, continue on any K-face that
  /// meets the colored region instead of stopping.
  bool allow_non_innermost = true;
};

/// Builds an (n-1)-element percolating set face by face: start on a K-face,
/// then repeatedly move to a K-face whose colored boundary is one contiguous
/// arc. On each face, clasp crossings and then hash corners are colored by
/// hand when their two components are not yet joined through colored
/// crossings. Everything else is left to the face rule.
/// Throws ConstructionStuck if no such face makes progress, or if the count
/// comes out different from n - 1.
HullResult hull_constructive_band(const BandDiagram& bd, const ConstructiveOptions& options = {});

struct RetryResult {
  HullResult hull;
  std::size_t attempts = 0;
};

/// Runs the construction for every K-face as first face and every starting
/// position on it, in order, and returns the first success. Rethrows the
/// first ConstructionStuck when all choices fail.
RetryResult hull_constructive_band_retrying(const BandDiagram& bd);

bool verify_witness(const Incidence& inc, std::span<const VertexId> witness,
                    std::optional<std::size_t> expected_size = std::nullopt);
bool verify_witness(const CombinatorialMap& map, std::span<const VertexId> witness,
                    std::optional<std::size_t> expected_size = std::nullopt);

}  // namespace bandlink
