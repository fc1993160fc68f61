#pragma once

// Parallel exponential sweeps. Both return histograms of small integer
// statistics; callers expand them into exact polynomials.

#include <array>
#include <cstdint>
#include <map>

#include "slinv/diagram.hpp"
#include "slinv/homology.hpp"
#include "slinv/ribbon.hpp"

namespace slinv::detail {

/// (c(H), k(H), s(H)/2, s_perp(H)/2) -> number of spanning subgraphs.
using KrushkalHistogram = std::map<std::array<int, 4>, std::int64_t>;
KrushkalHistogram krushkal_histogram(const CombinatorialMap& g, const HomologyContext& ctx);

/// (b(s), k(s), r(s)) -> number of states.
using StateHistogram = std::map<std::array<int, 3>, std::int64_t>;
StateHistogram state_histogram(const SurfaceLinkDiagram& d);

/// Rank of `rows` x `cols` int64 matrix stored row-major in `buf`,
/// destroyed in place. Exact; falls back to GMP when 64 bits overflow.
int rank_in_place(std::int64_t* buf, int rows, int cols);

}  // namespace slinv::detail
