#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crc/types.hpp"

namespace crc::geom {

// Index of the largest key <= q, or nullopt if q < keys.front() or empty.
// Keys must be strictly ascending.
std::optional<std::size_t> predecessor(std::span<const Coord> sorted_keys, Coord q);

// One axis of a rank-space reduction. Side occurrences are ranked by
// (value, side kind, occurrence index), with interval-opening sides ordered
// before interval-closing sides of equal value; that ordering is what keeps
// stab counts at on-value query positions intact after reduction.
class RankAxis {
 public:
  enum class SideKind : std::uint8_t { kLo = 0, kHi = 1 };

  RankAxis() = default;
  // sides: (raw value, kind, occurrence) triples in input order.
  static RankAxis build(std::vector<std::pair<Coord, SideKind>> sides);

  std::size_t size() const { return values_.size(); }
  Coord value_at_rank(std::size_t r) const { return values_[r]; }
  // Rank of the i-th input occurrence.
  std::size_t rank_of_occurrence(std::size_t i) const { return rank_by_occurrence_[i]; }

  // Maps a query position (same units as the side values) to the
  // equivalent doubled rank-space position. Returns -1 left of everything.
  Coord to_rank_position(Coord q) const;

 private:
  std::vector<Coord> values_;                 // raw value at each rank
  std::vector<SideKind> kinds_;               // side kind at each rank
  std::vector<std::size_t> rank_by_occurrence_;
};

struct RankSpace {
  std::vector<Rect3S> rects;  // x1,x2 in [0,2n), y in [0,n); coordinates are ranks
  RankAxis x, y;
};

// Projects rectangles onto the [2n] x [n] rank grid, preserving all stab
// relations. Works in whatever integer units the caller uses, as long as
// queries use the same units.
RankSpace rank_space_reduce(std::span<const Rect3S> rects);

}  // namespace crc::geom
