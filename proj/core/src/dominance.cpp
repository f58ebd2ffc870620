#include "crc/dominance.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace crc {

// ---------------------------------------------------------------- MergeCountTree

MergeCountTree::MergeCountTree(std::span<const Coord> values) {
  n_ = values.size();
  base_ = 1;
  while (base_ < std::max<std::size_t>(n_, 1)) base_ <<= 1;
  nodes_.assign(2 * base_, {});
  for (std::size_t i = 0; i < n_; ++i) nodes_[base_ + i] = {values[i]};
  for (std::size_t v = base_ - 1; v >= 1; --v) {
    const auto& l = nodes_[2 * v];
    const auto& r = nodes_[2 * v + 1];
    if (l.empty() && r.empty()) continue;
    nodes_[v].resize(l.size() + r.size());
    std::merge(l.begin(), l.end(), r.begin(), r.end(), nodes_[v].begin());
    stored_ += nodes_[v].size();
  }
  stored_ += n_;
}

std::int64_t MergeCountTree::count_ge(std::size_t l, std::size_t r, Coord x) const {
  if (l >= r || n_ == 0) return 0;
  std::int64_t out = 0;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t v, std::size_t lo, std::size_t hi) {
        if (r <= lo || hi <= l) return;
        if (l <= lo && hi <= r) {
          const auto& vec = nodes_[v];
          out += vec.end() - std::lower_bound(vec.begin(), vec.end(), x);
          return;
        }
        const std::size_t mid = (lo + hi) / 2;
        rec(2 * v, lo, mid);
        rec(2 * v + 1, mid, hi);
      };
  rec(1, 0, base_);
  return out;
}

// ---------------------------------------------------------------- Dom3Counter

Dom3Counter::Dom3Counter(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.a < b.a; });
  const std::size_t n = entries.size();
  a_sorted_.resize(n);
  for (std::size_t i = 0; i < n; ++i) a_sorted_[i] = entries[i].a;
  base_ = 1;
  while (base_ < std::max<std::size_t>(n, 1)) base_ <<= 1;
  nodes_.assign(2 * base_, {});
  // Fill leaves, merge upward keeping (b, c) pairs sorted by b.
  std::vector<std::vector<std::pair<Coord, Coord>>> tmp(2 * base_);
  for (std::size_t i = 0; i < n; ++i) tmp[base_ + i] = {{entries[i].b, entries[i].c}};
  for (std::size_t v = base_ - 1; v >= 1; --v) {
    auto& l = tmp[2 * v];
    auto& r = tmp[2 * v + 1];
    if (l.empty() && r.empty()) continue;
    tmp[v].resize(l.size() + r.size());
    std::merge(l.begin(), l.end(), r.begin(), r.end(), tmp[v].begin());
  }
  for (std::size_t v = 1; v < 2 * base_; ++v) {
    if (tmp[v].empty()) continue;
    auto& node = nodes_[v];
    node.b.resize(tmp[v].size());
    std::vector<Coord> cs(tmp[v].size());
    for (std::size_t i = 0; i < tmp[v].size(); ++i) {
      node.b[i] = tmp[v][i].first;
      cs[i] = tmp[v][i].second;
    }
    node.c = MergeCountTree(cs);
  }
}

std::int64_t Dom3Counter::count(Coord qa, Coord qb, Coord qc) const {
  const std::size_t n = a_sorted_.size();
  if (n == 0) return 0;
  const std::size_t from =
      std::lower_bound(a_sorted_.begin(), a_sorted_.end(), qa) - a_sorted_.begin();
  if (from >= n) return 0;
  std::int64_t out = 0;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t v, std::size_t lo, std::size_t hi) {
        if (hi <= from || lo >= n) return;
        if (from <= lo) {
          const auto& node = nodes_[v];
          const std::size_t pos =
              std::lower_bound(node.b.begin(), node.b.end(), qb) - node.b.begin();
          out += node.c.count_ge(pos, node.b.size(), qc);
          return;
        }
        const std::size_t mid = (lo + hi) / 2;
        rec(2 * v, lo, mid);
        rec(2 * v + 1, mid, hi);
      };
  rec(1, 0, base_);
  return out;
}

std::size_t Dom3Counter::space_units() const {
  std::size_t s = a_sorted_.size();
  for (const auto& node : nodes_) s += node.b.size() + node.c.space_units();
  return s;
}

// ---------------------------------------------------------------- RangeTreeCounter

struct RangeTreeCounter::Node {
  std::vector<Coord> keys;            // doubled coords on this dimension, sorted
  std::vector<RangeTreeCounter> sub;  // segment-tree nodes' subtrees (next dim)
  std::vector<Coord> last;            // dim == 1: sorted doubled coords
  std::size_t base = 0;
  int dim = 0;
};

RangeTreeCounter::RangeTreeCounter(std::vector<std::vector<Coord>> pts, int dim) : dim_(dim) {
  build(std::move(pts));
}

void RangeTreeCounter::build(std::vector<std::vector<Coord>> pts) {
  root_ = std::make_unique<Node>();
  Node& nd = *root_;
  nd.dim = dim_;
  if (dim_ == 1) {
    nd.last.reserve(pts.size());
    for (auto& p : pts) nd.last.push_back(dbl(p[0]));
    std::sort(nd.last.begin(), nd.last.end());
    stored_ = nd.last.size();
    return;
  }
  // Sort by first coordinate; build a segment tree whose nodes own subtrees
  // over the remaining dimensions.
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  const std::size_t n = pts.size();
  nd.keys.resize(n);
  for (std::size_t i = 0; i < n; ++i) nd.keys[i] = dbl(pts[i][0]);
  nd.base = 1;
  while (nd.base < std::max<std::size_t>(n, 1)) nd.base <<= 1;
  nd.sub.resize(2 * nd.base);
  std::function<void(std::size_t, std::size_t, std::size_t)> mk =
      [&](std::size_t v, std::size_t lo, std::size_t hi) {
        if (lo >= n) return;
        std::vector<std::vector<Coord>> sub_pts;
        const std::size_t end = std::min(hi, n);
        sub_pts.reserve(end - lo);
        for (std::size_t i = lo; i < end; ++i) {
          sub_pts.emplace_back(pts[i].begin() + 1, pts[i].end());
        }
        nd.sub[v] = RangeTreeCounter(std::move(sub_pts), dim_ - 1);
        stored_ += nd.sub[v].space_units();
        if (hi - lo == 1) return;
        const std::size_t mid = (lo + hi) / 2;
        mk(2 * v, lo, mid);
        mk(2 * v + 1, mid, hi);
      };
  mk(1, 0, nd.base);
  stored_ += n;
}

std::int64_t RangeTreeCounter::count(std::span<const Coord> box) const {
  if (!root_) return 0;
  const Node& nd = *root_;
  if (dim_ == 1) {
    auto lo = std::lower_bound(nd.last.begin(), nd.last.end(), box[0]);
    auto hi = std::upper_bound(nd.last.begin(), nd.last.end(), box[1]);
    return hi - lo;
  }
  const std::size_t n = nd.keys.size();
  const std::size_t from =
      std::lower_bound(nd.keys.begin(), nd.keys.end(), box[0]) - nd.keys.begin();
  const std::size_t to =
      std::upper_bound(nd.keys.begin(), nd.keys.end(), box[1]) - nd.keys.begin();
  if (from >= to) return 0;
  std::int64_t out = 0;
  std::span<const Coord> rest = box.subspan(2);
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t v, std::size_t lo, std::size_t hi) {
        if (to <= lo || hi <= from || lo >= n) return;
        if (from <= lo && hi <= to) {
          out += nd.sub[v].count(rest);
          return;
        }
        const std::size_t mid = (lo + hi) / 2;
        rec(2 * v, lo, mid);
        rec(2 * v + 1, mid, hi);
      };
  rec(1, 0, nd.base);
  return out;
}

// ---------------------------------------------------------------- FiveSidedStabber

namespace {

bool finite_side(Coord v) { return v > -kInf && v < kInf; }

}  // namespace

template <class F>
bool FiveSidedStabber::ZGroup::scan(Coord qx, Coord qy, Coord qz, F&& hit) const {
  for (const auto& e : elems) {
    if (e.z < qz) break;
    if (xdir < 0 && qx < e.xv) continue;
    if (xdir > 0 && qx > e.xv) continue;
    if (ydir < 0 && qy < e.yv) continue;
    if (ydir > 0 && qy > e.yv) continue;
    if (!hit(e.tag)) return false;
  }
  return true;
}

FiveSidedStabber::FiveSidedStabber(std::vector<Rect5> pieces) {
  n_ = pieces.size();

  auto sort_group = [this](ZGroup& g) {
    std::sort(g.elems.begin(), g.elems.end(),
              [](const ZGroup::E& a, const ZGroup::E& b) { return a.z > b.z; });
    stored_ += g.elems.size();
  };

  // One y-stage: peel the bounded y sides with an interval tree.
  auto build_ystage = [&](YStage& st, std::vector<Rect5> ps, int xdir,
                          auto&& xval) -> void {
    std::vector<Rect5> both;
    for (auto& r : ps) {
      const bool lo = finite_side(r.y1), hi = finite_side(r.y2);
      ZGroup* g = nullptr;
      if (lo && hi) {
        both.push_back(r);
        continue;
      } else if (lo) {
        g = &st.y_lo_only;
        g->ydir = -1;
      } else if (hi) {
        g = &st.y_hi_only;
        g->ydir = 1;
      } else {
        g = &st.y_free;
      }
      g->xdir = xdir;
      g->elems.push_back({r.ztop, xval(r), g->ydir < 0 ? r.y1 : (g->ydir > 0 ? r.y2 : 0), r.tag});
    }
    sort_group(st.y_lo_only);
    sort_group(st.y_hi_only);
    sort_group(st.y_free);

    std::function<std::unique_ptr<YNode>(std::vector<Rect5>)> mk =
        [&](std::vector<Rect5> rs) -> std::unique_ptr<YNode> {
      if (rs.empty()) return nullptr;
      std::vector<Coord> ends;
      ends.reserve(rs.size() * 2);
      for (const auto& r : rs) {
        ends.push_back(r.y1);
        ends.push_back(r.y2);
      }
      std::nth_element(ends.begin(), ends.begin() + ends.size() / 2, ends.end());
      const Coord split = ends[ends.size() / 2];
      auto node = std::make_unique<YNode>();
      node->split = split;
      std::vector<Rect5> left, right, crossing;
      for (auto& r : rs) {
        if (r.y2 < split) left.push_back(r);
        else if (r.y1 > split) right.push_back(r);
        else crossing.push_back(r);
      }
      // A degenerate split cannot recurse forever: consume everything here.
      if (left.size() == rs.size() || right.size() == rs.size()) {
        crossing = std::move(rs);
        left.clear();
        right.clear();
      }
      node->lo.xdir = node->hi.xdir = xdir;
      node->lo.ydir = -1;  // qy <= split: remaining condition qy >= y1
      node->hi.ydir = 1;   // qy > split: remaining condition qy <= y2
      for (auto& r : crossing) {
        node->lo.elems.push_back({r.ztop, xval(r), r.y1, r.tag});
        node->hi.elems.push_back({r.ztop, xval(r), r.y2, r.tag});
      }
      sort_group(node->lo);
      sort_group(node->hi);
      node->left = mk(std::move(left));
      node->right = mk(std::move(right));
      return node;
    };
    st.root = mk(std::move(both));
  };

  std::vector<Rect5> x_both;
  std::vector<Rect5> x_lo, x_hi, x_free;
  for (auto& r : pieces) {
    const bool lo = finite_side(r.x1), hi = finite_side(r.x2);
    if (lo && hi) x_both.push_back(r);
    else if (lo) x_lo.push_back(r);
    else if (hi) x_hi.push_back(r);
    else x_free.push_back(r);
  }
  build_ystage(x_lo_only_, std::move(x_lo), -1, [](const Rect5& r) { return r.x1; });
  build_ystage(x_hi_only_, std::move(x_hi), 1, [](const Rect5& r) { return r.x2; });
  build_ystage(x_free_, std::move(x_free), 0, [](const Rect5&) { return Coord{0}; });

  std::function<std::unique_ptr<XNode>(std::vector<Rect5>)> mk =
      [&](std::vector<Rect5> rs) -> std::unique_ptr<XNode> {
    if (rs.empty()) return nullptr;
    std::vector<Coord> ends;
    ends.reserve(rs.size() * 2);
    for (const auto& r : rs) {
      ends.push_back(r.x1);
      ends.push_back(r.x2);
    }
    std::nth_element(ends.begin(), ends.begin() + ends.size() / 2, ends.end());
    const Coord split = ends[ends.size() / 2];
    auto node = std::make_unique<XNode>();
    node->split = split;
    std::vector<Rect5> left, right, crossing;
    for (auto& r : rs) {
      if (r.x2 < split) left.push_back(r);
      else if (r.x1 > split) right.push_back(r);
      else crossing.push_back(r);
    }
    if (left.size() == rs.size() || right.size() == rs.size()) {
      crossing = std::move(rs);
      left.clear();
      right.clear();
    }
    build_ystage(node->lo, crossing, -1, [](const Rect5& r) { return r.x1; });
    build_ystage(node->hi, std::move(crossing), 1, [](const Rect5& r) { return r.x2; });
    node->left = mk(std::move(left));
    node->right = mk(std::move(right));
    return node;
  };
  xroot_ = mk(std::move(x_both));
}

template <class F>
bool FiveSidedStabber::walk(Coord qx, Coord qy, Coord qz, F&& hit) const {
  auto scan_ystage = [&](const YStage& st) -> bool {
    if (!st.y_lo_only.scan(qx, qy, qz, hit)) return false;
    if (!st.y_hi_only.scan(qx, qy, qz, hit)) return false;
    if (!st.y_free.scan(qx, qy, qz, hit)) return false;
    const YNode* v = st.root.get();
    while (v) {
      const ZGroup& g = qy <= v->split ? v->lo : v->hi;
      if (!g.scan(qx, qy, qz, hit)) return false;
      v = qy <= v->split ? v->left.get() : v->right.get();
    }
    return true;
  };
  if (!scan_ystage(x_lo_only_)) return false;
  if (!scan_ystage(x_hi_only_)) return false;
  if (!scan_ystage(x_free_)) return false;
  const XNode* v = xroot_.get();
  while (v) {
    if (!scan_ystage(qx <= v->split ? v->lo : v->hi)) return false;
    v = qx <= v->split ? v->left.get() : v->right.get();
  }
  return true;
}

std::int64_t FiveSidedStabber::count(Coord qx, Coord qy, Coord qz) const {
  std::int64_t k = 0;
  walk(qx, qy, qz, [&](std::int32_t) {
    ++k;
    return true;
  });
  return k;
}

std::int64_t FiveSidedStabber::count_capped(Coord qx, Coord qy, Coord qz,
                                            std::int64_t cap) const {
  std::int64_t k = 0;
  walk(qx, qy, qz, [&](std::int32_t) { return ++k <= cap; });
  return k;
}

std::vector<std::int32_t> FiveSidedStabber::report_capped(Coord qx, Coord qy, Coord qz,
                                                          std::int64_t cap) const {
  std::vector<std::int32_t> out;
  walk(qx, qy, qz, [&](std::int32_t tag) {
    out.push_back(tag);
    return static_cast<std::int64_t>(out.size()) <= cap;
  });
  return out;
}

}  // namespace crc
