#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace bandlink {

// 1-based identifier; value 0 is reserved as "none".
template <class Tag>
class Id {
 public:
  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t value) : value_(value) {}

  static constexpr Id from_index(std::size_t index) { return Id(static_cast<std::uint32_t>(index + 1)); }

  constexpr std::uint32_t value() const { return value_; }
  constexpr std::size_t index() const { return value_ - 1; }
  constexpr bool valid() const { return value_ != 0; }

  constexpr auto operator<=>(const Id&) const = default;

  friend std::ostream& operator<<(std::ostream& os, Id id) { return os << id.value_; }

 private:
  std::uint32_t value_ = 0;
};

using Dart = Id<struct DartTag>;
using VertexId = Id<struct VertexTag>;
using FaceId = Id<struct FaceTag>;
using StrandId = Id<struct StrandTag>;
using CircleId = Id<struct CircleTag>;

}  // namespace bandlink

template <class Tag>
struct std::hash<bandlink::Id<Tag>> {
  std::size_t operator()(bandlink::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value()); }
};
