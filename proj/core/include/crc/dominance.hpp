#pragma once

#include <memory>
#include <span>
#include <vector>

#include "crc/types.hpp"

namespace crc {

// Segment tree over a fixed array with per-node sorted copies; answers
// order-statistics counts on index ranges.
class MergeCountTree {
 public:
  MergeCountTree() = default;
  explicit MergeCountTree(std::span<const Coord> values);

  // #elements in index range [l, r) with value >= x
  std::int64_t count_ge(std::size_t l, std::size_t r, Coord x) const;
  std::size_t space_units() const { return stored_; }

 private:
  std::size_t n_ = 0, base_ = 0, stored_ = 0;
  std::vector<std::vector<Coord>> nodes_;
};

// Exact counting of points dominating a query in R^3: #{p : p.a >= qa,
// p.b >= qb, p.c >= qc}. Callers map other orthant orientations onto this
// one by negating coordinates.
class Dom3Counter {
 public:
  struct Entry {
    Coord a, b, c;
  };

  Dom3Counter() = default;
  explicit Dom3Counter(std::vector<Entry> entries);

  std::int64_t count(Coord qa, Coord qb, Coord qc) const;
  std::size_t size() const { return a_sorted_.size(); }
  std::size_t space_units() const;

 private:
  struct Node {
    std::vector<Coord> b;  // sorted
    MergeCountTree c;      // c-values in b-sorted order
  };
  std::vector<Coord> a_sorted_;
  std::vector<Node> nodes_;
  std::size_t base_ = 0;
};

// Exact count of points inside an axis-parallel box in R^d (d in [1,4]).
// Point coordinates raw; query bounds doubled, (l1,h1,...,ld,hd).
class RangeTreeCounter {
 public:
  RangeTreeCounter() = default;
  RangeTreeCounter(std::vector<std::vector<Coord>> pts, int dim);

  std::int64_t count(std::span<const Coord> box) const;
  bool empty(std::span<const Coord> box) const { return count(box) == 0; }
  std::size_t space_units() const { return stored_; }

 private:
  struct Node;
  void build(std::vector<std::vector<Coord>> pts);
  int dim_ = 0;
  std::size_t stored_ = 0;
  std::unique_ptr<Node> root_;
  std::vector<Coord> leaf_sorted_;  // dim == 1 case
};

// Exact stabbing over 5-sided boxes [x1,x2] x [y1,y2] x (-inf, ztop], plus
// capped reporting. Sides are doubled coordinates and may be +/-kInf.
// Interval trees peel the bounded x then y sides; leaf groups hold pieces
// sorted by ztop so a scan sees only candidates with ztop >= qz.
class FiveSidedStabber {
 public:
  FiveSidedStabber() = default;
  explicit FiveSidedStabber(std::vector<Rect5> pieces);

  std::int64_t count(Coord qx, Coord qy, Coord qz) const;
  // Counts until cap+1 hits are seen; exact when the result is <= cap.
  std::int64_t count_capped(Coord qx, Coord qy, Coord qz, std::int64_t cap) const;
  // Tags of stabbed pieces, complete when the true count is <= cap,
  // otherwise any cap+1 witnesses.
  std::vector<std::int32_t> report_capped(Coord qx, Coord qy, Coord qz, std::int64_t cap) const;

  std::size_t size() const { return n_; }
  std::size_t space_units() const { return stored_; }

 private:
  struct ZGroup {
    int xdir = 0;  // -1: need qx >= xv; +1: need qx <= xv; 0: no condition
    int ydir = 0;
    struct E {
      Coord z, xv, yv;
      std::int32_t tag;
    };
    std::vector<E> elems;  // z descending

    template <class F>
    bool scan(Coord qx, Coord qy, Coord qz, F&& hit) const;
  };
  struct YNode {
    Coord split = 0;
    ZGroup lo, hi;  // views for qy <= split / qy > split
    std::unique_ptr<YNode> left, right;
  };
  struct YStage {
    std::unique_ptr<YNode> root;
    ZGroup y_lo_only, y_hi_only, y_free;  // pieces missing finite y sides
  };
  struct XNode {
    Coord split = 0;
    YStage lo, hi;
    std::unique_ptr<XNode> left, right;
  };

  template <class F>
  bool walk(Coord qx, Coord qy, Coord qz, F&& hit) const;

  std::size_t n_ = 0, stored_ = 0;
  std::unique_ptr<XNode> xroot_;
  YStage x_lo_only_, x_hi_only_, x_free_;
};

}  // namespace crc
