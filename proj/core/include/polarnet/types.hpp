#pragma once

#include <cstdint>
#include <limits>

namespace polarnet {

using VertexId = std::uint32_t;
using GroupId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();

}  // namespace polarnet
