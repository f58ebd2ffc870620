#include "crc/geom.hpp"

#include <algorithm>
#include <cassert>

namespace crc::geom {

std::optional<std::size_t> predecessor(std::span<const Coord> sorted_keys, Coord q) {
  auto it = std::upper_bound(sorted_keys.begin(), sorted_keys.end(), q);
  if (it == sorted_keys.begin()) return std::nullopt;
  return static_cast<std::size_t>(it - sorted_keys.begin() - 1);
}

RankAxis RankAxis::build(std::vector<std::pair<Coord, SideKind>> sides) {
  const std::size_t n = sides.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sides[a].first != sides[b].first) return sides[a].first < sides[b].first;
    return sides[a].second < sides[b].second;
  });
  RankAxis ax;
  ax.values_.resize(n);
  ax.kinds_.resize(n);
  ax.rank_by_occurrence_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    ax.values_[r] = sides[order[r]].first;
    ax.kinds_[r] = sides[order[r]].second;
    ax.rank_by_occurrence_[order[r]] = r;
  }
  return ax;
}

Coord RankAxis::to_rank_position(Coord q) const {
  if (values_.empty()) return -1;
  auto lo = std::lower_bound(values_.begin(), values_.end(), q);
  auto hi = std::upper_bound(values_.begin(), values_.end(), q);
  if (lo == hi) {  // generic position: between neighboring values
    return 2 * static_cast<Coord>(lo - values_.begin()) - 1;
  }
  // On a value: the lo-before-hi rank ordering leaves a faithful slot at the
  // last lo-occurrence (or just before the first hi-occurrence).
  const std::size_t first = lo - values_.begin();
  const std::size_t last = hi - values_.begin();
  std::size_t first_hi = first;
  while (first_hi < last && kinds_[first_hi] == SideKind::kLo) ++first_hi;
  if (first_hi > first) return 2 * static_cast<Coord>(first_hi - 1);
  return 2 * static_cast<Coord>(first) - 1;
}

RankSpace rank_space_reduce(std::span<const Rect3S> rects) {
  std::vector<std::pair<Coord, RankAxis::SideKind>> xs;
  std::vector<std::pair<Coord, RankAxis::SideKind>> ys;
  xs.reserve(rects.size() * 2);
  ys.reserve(rects.size());
  for (const auto& r : rects) {
    assert(r.x1 <= r.x2);
    xs.emplace_back(r.x1, RankAxis::SideKind::kLo);
    xs.emplace_back(r.x2, RankAxis::SideKind::kHi);
    ys.emplace_back(r.y, RankAxis::SideKind::kLo);
  }
  RankSpace out;
  out.x = RankAxis::build(std::move(xs));
  out.y = RankAxis::build(std::move(ys));
  out.rects.resize(rects.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    out.rects[i].x1 = static_cast<Coord>(out.x.rank_of_occurrence(2 * i));
    out.rects[i].x2 = static_cast<Coord>(out.x.rank_of_occurrence(2 * i + 1));
    out.rects[i].y = static_cast<Coord>(out.y.rank_of_occurrence(i));
    out.rects[i].tag = rects[i].tag;
  }
  return out;
}

}  // namespace crc::geom
