#pragma once

namespace slinv {

/// Default bound on crossings (state sums) and edges (subgraph sums).
inline constexpr int kDefaultCap = 24;
/// Bitmask width; no override may exceed it.
inline constexpr int kHardCap = 64;

}  // namespace slinv
