#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "crc/geom.hpp"
#include "crc/oracle.hpp"
#include "crc/types.hpp"

namespace crc::stab2d {

// ---------------------------------------------------------------------------
// colored -> standard transformation

// Vertical decomposition of the union of one color's 3-sided rectangles.
// Sides are doubled coordinates; output pieces are pairwise disjoint, cover
// exactly the union, and any point of the union stabs exactly one piece.
// Pieces inherit half-open boundaries as odd doubled values.
std::vector<Rect3S> union_decompose_color(std::span<const Rect3S> rects_d);

// Pieces for a whole colored instance (doubled sides), color-tagged.
std::vector<ColoredRect3S> union_decompose_all(std::span<const ColoredRect3S> rects_d);

// Embedding of the 1d interval and 2d dominance settings into colored
// 3-sided stabbing. Output rectangle sides and adapted queries are doubled.
struct EmbeddedInstance {
  Setting source;
  std::vector<ColoredRect3S> rects_d;
  Coord grid_min_x_d = 0;

  // Maps a raw doubled query (1 or 2 coords) to a doubled stab position.
  std::pair<Coord, Coord> adapt(std::span<const Coord> q) const;
};
EmbeddedInstance embed_setting(const Dataset& s);

// ---------------------------------------------------------------------------
// shallow cuttings (inputs with pairwise-distinct side values; rank space)

struct Cell {
  Coord x_first;              // first side value owned by the slab
  Coord x_next;               // first side value of the next slab (kInf for last)
  Coord ytop;                 // level height, kInf when fewer than t spanning
  std::vector<std::uint32_t> conflict;  // rect indices intersecting the cell
};

struct ShallowCutting {
  Coord level = 0;
  std::vector<Cell> cells;
  std::vector<Coord> slab_starts;  // doubled owned-range starts, for routing

  // Slab owning a doubled position (clamped to [0, cells-1]).
  std::size_t slab_of(Coord xpos_d) const;
  // True if the position lies inside the cell (x owned and y at/below top).
  bool inside(std::size_t cell, Coord xpos_d, Coord ypos_d) const;
};

// t >= 1. Rects may be any subset with pairwise-distinct side values
// (e.g. a sample of a rank-space-reduced set).
ShallowCutting build_shallow_cutting(std::span<const Rect3S> rects, Coord t,
                                     bool with_conflicts = true);

// ---------------------------------------------------------------------------
// level ladder

struct LevelLadder {
  Coord base_t = 0, top_t = 0;
  std::vector<ShallowCutting> levels;            // base_t * 2^j, conflict-free
  std::vector<std::vector<Coord>> tops_per_cell;  // C_r: ytops of containing cells, per base cell

  struct Result {
    enum Kind { kBelowBase, kBracket, kAboveTop } kind;
    Coord z = 0;  // bracket value: exact count in [z, 4z]
  };
  Result query(Coord xpos_d, Coord ypos_d) const;
};

// top_t must be base_t * 2^i for some i >= 0.
LevelLadder build_level_ladder(std::span<const Rect3S> rects, Coord base_t, Coord top_t);

// ---------------------------------------------------------------------------
// shared table

std::vector<std::int32_t> canonicalize_conflict_list(std::span<const Rect3S> list,
                                                     std::span<const Coord> in_slab_sides);

// Exact counting below the base level. Cells with combinatorially equal
// conflict lists share one canonical row.
class SharedTable {
 public:
  SharedTable() = default;
  SharedTable(std::span<const Rect3S> rects, Coord level);

  // Exact count if the position lies inside a cell, otherwise nullopt
  // (meaning the count is at least the table level).
  std::optional<std::int64_t> query(Coord xpos_d, Coord ypos_d) const;

  Coord level() const { return level_; }
  std::size_t num_cells() const { return cells_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t row_of_cell(std::size_t cell) const { return cell_row_[cell]; }
  const ShallowCutting& cutting() const { return cutting_; }
  std::size_t space_units() const;

 private:
  struct CellLocal {
    std::vector<Coord> sides;  // side values inside the slab, ascending
    std::vector<Coord> ys;     // conflict y values, ascending
    Coord ytop = 0;
  };
  struct Row {
    // per conflict rect, ascending y: local doubled x1/x2 with -2 marking
    // spans-left and 2*s marking spans-right
    std::vector<std::pair<std::int32_t, std::int32_t>> entries;
  };
  Coord level_ = 0;
  ShallowCutting cutting_;
  std::vector<CellLocal> cells_;
  std::vector<std::size_t> cell_row_;
  std::vector<Row> rows_;
};

// ---------------------------------------------------------------------------
// the combined (1+eps) counter

struct BuildStats {
  int attempts_total = 0;
  std::vector<std::pair<Coord, int>> attempts_per_level;  // (z, attempts)
  std::vector<char> verdict_trace;                        // accept/reject per attempt
};

// Standard 3-sided stabbing counter with the eps-approx contract. Input
// sides are doubled; queries use the same doubled convention. Exact for
// counts below the base level and wherever the sampling rate is 1.
class StabCounter {
 public:
  StabCounter(std::vector<Rect3S> rects_d, double eps, std::uint64_t seed,
              const Config& cfg = {});

  ApproxAnswer query(Coord qxd, Coord qyd) const;
  std::size_t size() const { return rects_.size(); }
  double eps() const { return eps_; }
  std::size_t space_units() const;
  const BuildStats& build_stats() const { return stats_; }

  // Sum over refinement levels of sampled-rectangle counts.
  std::size_t sampled_object_total() const;

  // Test hook: routed refinement level for a query (-1: exact paths).
  int routed_level(Coord qxd, Coord qyd) const;

 private:
  struct Refinement {
    Coord z = 0;
    double m_prob = 1.0;
    std::vector<std::uint32_t> sample;  // rect indices; all rects when m_prob == 1
    ShallowCutting cutting;             // level ~6z (or capped) over the sample
    // flattened conflict lists in doubled rank coordinates
    std::vector<std::uint32_t> cell_start;
    std::vector<Coord> cx1, cx2, cy;
  };

  void build(std::uint64_t seed, const Config& cfg);
  Refinement make_refinement(Coord z, std::span<const std::uint32_t> sample, double m) const;
  std::int64_t refinement_count(const Refinement& r, Coord xpos, Coord ypos) const;
  // -1: out of extent; -2: shared-table exact; j >= 0: refinement level j
  int route(Coord xpos, Coord ypos) const;

  std::vector<Rect3S> rects_;       // doubled input sides
  std::vector<Rect3S> rank_rects_;  // rank-space image (ranks, not doubled)
  geom::RankAxis xaxis_, yaxis_;
  double eps_ = 0.25;
  bool brute_ = false;
  Coord base_level_ = 0;
  int num_levels_ = 0;  // refinement levels: z = base_level_ * 2^j
  SharedTable shared_;
  std::vector<ShallowCutting> ladder_levels_;     // conflict-free, j = 0..num_levels_
  std::vector<std::vector<Coord>> ladder_tops_;   // per base cell, ascending
  std::vector<Refinement> refinements_;
  BuildStats stats_;
};

// Full colored pipeline for the three embedded settings: decompose, reduce,
// count. Queries are raw doubled coordinates of the source setting.
class ColoredStabPipeline {
 public:
  ColoredStabPipeline(const Dataset& s, double eps, std::uint64_t seed,
                      const Config& cfg = {});

  ApproxAnswer query(std::span<const Coord> q) const;
  const std::vector<ColoredRect3S>& pieces_d() const { return pieces_; }
  const StabCounter& counter() const { return *counter_; }

 private:
  Setting source_;
  std::vector<ColoredRect3S> pieces_;
  std::optional<EmbeddedInstance> embedded_;
  std::unique_ptr<StabCounter> counter_;
};

}  // namespace crc::stab2d
