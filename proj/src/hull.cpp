#include "bandlink/hull.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bandlink {

std::string_view to_string(HullMethod method) {
  return method == HullMethod::Exact ? "exact" : "constructive";
}

HullResult hull_exact(const Incidence& inc, const ExactOptions& options) {
  const std::size_t v_count = inc.vertex_count();
  FastCloser closer(inc);
  HullResult result;
  result.method = HullMethod::Exact;
  result.lower_bound_used = options.start_size;

  std::vector<std::size_t> combo;
  for (std::size_t k = options.start_size.value_or(0); k <= v_count; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    for (;;) {
      if (result.subsets_examined >= options.budget) {
        std::ostringstream msg;
        msg << "examined " << result.subsets_examined << " subsets without finding a percolating set of size " << k;
        throw Error(ErrorKind::BudgetExceeded, msg.str());
      }
      ++result.subsets_examined;
      if (closer.run(combo) == v_count) {
        for (std::size_t i : combo) result.witness.push_back(VertexId::from_index(i));
        result.size = k;
        result.verified = percolates(inc, result.witness);
        return result;
      }
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == v_count - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  // only reachable when start_size exceeds the vertex count
  throw Error(ErrorKind::BudgetExceeded, "start size exceeds the vertex count");
}

HullResult hull_exact(const CombinatorialMap& map, const ExactOptions& options) {
  return hull_exact(vertex_face_incidence(map), options);
}

ConstructionStuck::ConstructionStuck(const std::string& message, std::vector<VertexId> partial, std::size_t colored)
    : Error(ErrorKind::ConstructionStuck, message), partial_(std::move(partial)), colored_(colored) {}

namespace {

class Construction {
 public:
  explicit Construction(const BandDiagram& bd)
      : bd_(bd),
        faces_(faces(bd.diagram)),
        inc_(vertex_face_incidence(bd.diagram, faces_)),
        circles_(vertex_circles(bd)),
        closer_(inc_),
        cluster_parent_(bd.n) {
    std::iota(cluster_parent_.begin(), cluster_parent_.end(), 0);
    recolor();
  }

  std::size_t vertex_count() const { return inc_.vertex_count(); }
  std::size_t colored_count() const { return colored_count_; }
  bool done() const { return colored_count_ == vertex_count(); }
  const std::vector<VertexId>& manual() const { return manual_; }
  const std::vector<Face>& all_faces() const { return faces_; }

  bool is_kface(FaceId f) const { return bd_.face_provenance[f.index()].origin == FaceOrigin::KFace; }

  // Walks the face boundary from `start` and colors each crossing whose two
  // components are not yet joined through colored crossings; clasps first,
  // then hash corners. Every such coloring merges two clusters, so at most
  // n - 1 happen.
  std::size_t walk(const Face& f, std::size_t start) {
    std::size_t made = 0;
    const std::size_t len = f.vertex_list.size();
    for (CrossingType pass : {CrossingType::Clasp, CrossingType::Hash}) {
      for (std::size_t step = 0; step < len; ++step) {
        const VertexId u = f.vertex_list[(start + step) % len];
        if (closer_.colored(u.index())) continue;
        if (bd_.crossing_kind[u.index()].type != pass) continue;
        const auto [a, b] = circles_[u.index()];
        if (cluster(a.index()) == cluster(b.index())) continue;
        manual_.push_back(u);
        recolor();
        ++made;
      }
    }
    return made;
  }

  // Start of the uncolored arc when the colored boundary positions form a
  // single cyclic run; nullopt otherwise.
  std::optional<std::size_t> innermost_start(const Face& f) const {
    const std::size_t len = f.vertex_list.size();
    std::size_t runs = 0, start = 0, colored = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const bool here = closer_.colored(f.vertex_list[i].index());
      const bool before = closer_.colored(f.vertex_list[(i + len - 1) % len].index());
      colored += here ? 1 : 0;
      if (before && !here) {
        ++runs;
        start = i;
      }
    }
    if (colored == 0 || colored == len || runs != 1) return std::nullopt;
    return start;
  }

  bool touches_colored(const Face& f) const {
    return std::any_of(f.vertex_list.begin(), f.vertex_list.end(),
                       [this](VertexId v) { return closer_.colored(v.index()); });
  }

  // Position right after some colored boundary vertex that is followed by an
  // uncolored one.
  std::size_t first_uncolored_after_colored(const Face& f) const {
    const std::size_t len = f.vertex_list.size();
    for (std::size_t i = 0; i < len; ++i)
      if (closer_.colored(f.vertex_list[(i + len - 1) % len].index()) && !closer_.colored(f.vertex_list[i].index()))
        return i;
    return 0;
  }

  [[noreturn]] void stuck(const std::string& why) const {
    std::vector<VertexId> partial = manual_;
    std::sort(partial.begin(), partial.end());
    std::ostringstream msg;
    msg << why << " (" << colored_count_ << " of " << vertex_count() << " vertices colored, " << manual_.size()
        << " by hand)";
    throw ConstructionStuck(msg.str(), std::move(partial), colored_count_);
  }

 private:
  void recolor() {
    std::vector<std::size_t> idx;
    for (VertexId v : manual_) idx.push_back(v.index());
    colored_count_ = closer_.run(idx);
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      if (!closer_.colored(v)) continue;
      const std::size_t a = cluster(circles_[v][0].index());
      const std::size_t b = cluster(circles_[v][1].index());
      cluster_parent_[std::max(a, b)] = std::min(a, b);
    }
  }

  std::size_t cluster(std::size_t c) const {
    while (cluster_parent_[c] != c) c = cluster_parent_[c];
    return c;
  }

  const BandDiagram& bd_;
  std::vector<Face> faces_;
  Incidence inc_;
  std::vector<std::array<CircleId, 2>> circles_;
  FastCloser closer_;
  std::vector<std::size_t> cluster_parent_;  // components joined through colored crossings
  std::vector<VertexId> manual_;
  std::size_t colored_count_ = 0;
};

}  // namespace

HullResult hull_constructive_band(const BandDiagram& bd, const ConstructiveOptions& options) {
  Construction c(bd);
  std::size_t relaxed = 0;

  if (!c.done()) {
    std::optional<FaceId> first = options.first_face;
    if (!first) {
      for (const Face& f : c.all_faces())
        if (c.is_kface(f.id)) {
          first = f.id;
          break;
        }
    }
    if (!first || first->index() >= c.all_faces().size() || !c.is_kface(*first))
      c.stuck("no K-face to start from");

    const Face& f0 = c.all_faces()[first->index()];
    std::size_t start = 0;
    if (options.start_position) {
      start = *options.start_position % f0.vertex_list.size();
    } else {
      const auto smallest = std::min_element(f0.vertex_list.begin(), f0.vertex_list.end());
      start = static_cast<std::size_t>(smallest - f0.vertex_list.begin());
    }
    c.walk(f0, start);

    while (!c.done()) {
      bool progressed = false;
      for (const Face& f : c.all_faces()) {
        if (!c.is_kface(f.id)) continue;
        const auto start = c.innermost_start(f);
        if (!start) continue;
        if (c.walk(f, *start) > 0) {
          progressed = true;
          break;
        }
      }
      if (!progressed && options.allow_non_innermost) {
        for (const Face& f : c.all_faces()) {
          if (!c.is_kface(f.id) || !c.touches_colored(f)) continue;
          if (c.walk(f, c.first_uncolored_after_colored(f)) > 0) {
            progressed = true;
            ++relaxed;
            break;
          }
        }
      }
      if (!progressed) c.stuck("no innermost K-face adjacent to the colored region makes progress");
    }
  }

  const std::size_t expected = bd.n == 0 ? 0 : bd.n - 1;
  if (c.manual().size() != expected) {
    std::ostringstream msg;
    msg << "colored " << c.manual().size() << " vertices by hand, expected n - 1 = " << expected;
    c.stuck(msg.str());
  }

  HullResult result;
  result.method = HullMethod::Constructive;
  result.manual_order = c.manual();
  result.relaxed_steps = relaxed;
  result.witness = c.manual();
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  result.verified = percolates(bd.diagram, result.witness);
  return result;
}

RetryResult hull_constructive_band_retrying(const BandDiagram& bd) {
  const auto fs = faces(bd.diagram);
  std::optional<ConstructionStuck> first_failure;
  std::size_t attempts = 0;
  for (const Face& f : fs) {
    if (bd.face_provenance[f.id.index()].origin != FaceOrigin::KFace) continue;
    for (std::size_t pos = 0; pos < f.vertex_list.size(); ++pos) {
      ++attempts;
      try {
        return {hull_constructive_band(bd, {f.id, pos}), attempts};
      } catch (const ConstructionStuck& e) {
        if (!first_failure) first_failure = e;
      }
    }
  }
  if (first_failure) throw *first_failure;
  return {hull_constructive_band(bd), attempts};
}

bool verify_witness(const Incidence& inc, std::span<const VertexId> witness, std::optional<std::size_t> expected_size) {
  std::vector<VertexId> distinct(witness.begin(), witness.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (expected_size && distinct.size() != *expected_size) return false;
  if (std::any_of(distinct.begin(), distinct.end(),
                  [&](VertexId v) { return !v.valid() || v.index() >= inc.vertex_count(); }))
    return false;
  return percolates(inc, distinct);
}

bool verify_witness(const CombinatorialMap& map, std::span<const VertexId> witness,
                    std::optional<std::size_t> expected_size) {
  return verify_witness(vertex_face_incidence(map), witness, expected_size);
}

}  // namespace bandlink
