#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "crc/types.hpp"

namespace crc {

// One dataset of colored (or standard) objects for a geometric setting.
// Object coordinates are raw grid integers. Query positions everywhere in
// this library are doubled: odd positions sit strictly between grid values.
struct Dataset {
  Setting setting = Setting::kStab3S2D;
  int dim = 2;                // kOrthoRd only
  Coord grid_u = 0;           // declared grid [0, grid_u)
  int num_colors = 0;
  std::uint64_t seed = 0;

  std::vector<ColoredInterval> intervals;    // kIntervalStab1D
  std::vector<ColoredPoint2> points2;        // kDom2D, kRange3S2D, kRange4S2D
  std::vector<ColoredPoint3> points3;        // kDom3D
  std::vector<ColoredRect3S> rects3s;        // kStab3S2D
  std::vector<Rect5> rects5;                 // kStab5S3D (standard, color ignored)
  std::vector<std::vector<Coord>> points_nd; // kOrthoRd
  std::vector<ColorId> colors_nd;

  std::size_t size() const;
};

// Enumerated set of combinatorially distinct queries: one generic
// representative per cell of the arrangement induced by the input
// coordinates. Candidates are doubled odd positions. Query parameters tied
// by lo_hi_pairs share a candidate array and enumerate only lo <= hi.
struct QueryUniverse {
  Setting setting = Setting::kStab3S2D;
  int arity = 0;
  std::vector<std::vector<Coord>> cand;
  std::vector<std::pair<int, int>> lo_hi_pairs;

  std::uint64_t size() const;

  // Calls f(q) for every query in canonical order (parameter 0 outermost;
  // paired hi parameters start at the lo index).
  void for_each(const std::function<void(std::span<const Coord>)>& f) const;
};

namespace oracle {

// --- exact per-query counters (full scan; the trusted baseline) ---

bool object_hit(const Dataset& s, std::size_t idx, std::span<const Coord> q);
std::int64_t exact_colored_count(const Dataset& s, std::span<const Coord> q);
std::int64_t exact_standard_count(const Dataset& s, std::span<const Coord> q);

// Stab counts over explicit rectangle lists whose sides are already doubled
// (the coordinate space decompositions emit). Sides may be +/-kInf.
std::int64_t stab_count_3s_d(std::span<const Rect3S> rects, Coord qxd, Coord qyd);
std::int64_t stab_count_5s_d(std::span<const Rect5> rects, Coord qxd, Coord qyd, Coord qzd);

QueryUniverse enumerate_queries(const Dataset& s);

// Universes over explicit raw-coordinate rectangle lists (stabbing queries).
QueryUniverse enumerate_stab3s_universe(std::span<const Rect3S> rects);
QueryUniverse enumerate_stab5s_universe(std::span<const Rect5> rects);

// --- bulk evaluators (sweeps; cross-checked against the naive counters) ---

// Counts for every universe query, in canonical order. Universe must be a
// 2-parameter point universe; rect sides doubled.
std::vector<std::uint32_t> bulk_stab_counts_3s_d(std::span<const Rect3S> rects,
                                                 const QueryUniverse& u);
std::vector<std::uint32_t> bulk_stab_counts_5s_d(std::span<const Rect5> rects,
                                                 const QueryUniverse& u);

// Distinct-color counts for 3-sided range queries [x1,x2] x [y,inf) over
// colored points, for every universe query. If mask is nonempty, only colors
// with mask[c] != 0 are counted.
std::vector<std::uint32_t> bulk_colored_counts_range3s(std::span<const ColoredPoint2> pts,
                                                       int num_colors, const QueryUniverse& u,
                                                       std::span<const std::uint8_t> mask = {});

// Same for axis-parallel boxes in R^d (kRange4S2D and kOrthoRd universes).
std::vector<std::uint32_t> bulk_colored_counts_box(const Dataset& s, const QueryUniverse& u,
                                                   std::span<const std::uint8_t> mask = {});

// Same for dominance settings (kDom2D octant corners, kDom3D octant corners,
// kIntervalStab1D points).
std::vector<std::uint32_t> bulk_colored_counts_pointlike(const Dataset& s, const QueryUniverse& u,
                                                         std::span<const std::uint8_t> mask = {});

}  // namespace oracle
}  // namespace crc
