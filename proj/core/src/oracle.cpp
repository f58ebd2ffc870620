#include "crc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace crc {

const char* setting_name(Setting s) {
  switch (s) {
    case Setting::kIntervalStab1D: return "interval_stab_1d";
    case Setting::kDom2D: return "dom2d";
    case Setting::kStab3S2D: return "stab3s_2d";
    case Setting::kDom3D: return "dom3d";
    case Setting::kStab5S3D: return "stab5s_3d";
    case Setting::kRange3S2D: return "range3s_2d";
    case Setting::kRange4S2D: return "range4s_2d";
    case Setting::kOrthoRd: return "ortho_rd";
  }
  return "?";
}

bool setting_from_name(const std::string& name, Setting* out) {
  for (Setting s : {Setting::kIntervalStab1D, Setting::kDom2D, Setting::kStab3S2D,
                    Setting::kDom3D, Setting::kStab5S3D, Setting::kRange3S2D,
                    Setting::kRange4S2D, Setting::kOrthoRd}) {
    if (name == setting_name(s)) {
      *out = s;
      return true;
    }
  }
  return false;
}

std::size_t Dataset::size() const {
  switch (setting) {
    case Setting::kIntervalStab1D: return intervals.size();
    case Setting::kDom2D:
    case Setting::kRange3S2D:
    case Setting::kRange4S2D: return points2.size();
    case Setting::kDom3D: return points3.size();
    case Setting::kStab3S2D: return rects3s.size();
    case Setting::kStab5S3D: return rects5.size();
    case Setting::kOrthoRd: return points_nd.size();
  }
  return 0;
}

std::uint64_t QueryUniverse::size() const {
  std::vector<int> lo_of(arity, -1);
  for (auto [lo, hi] : lo_hi_pairs) lo_of[hi] = lo;
  std::uint64_t total = 1;
  for (int p = 0; p < arity; ++p) {
    if (lo_of[p] >= 0) continue;  // counted with its partner
    bool is_lo = false;
    for (auto [lo, hi] : lo_hi_pairs) is_lo |= (lo == p);
    const std::uint64_t s = cand[p].size();
    total *= is_lo ? s * (s + 1) / 2 : s;
  }
  return total;
}

void QueryUniverse::for_each(const std::function<void(std::span<const Coord>)>& f) const {
  std::array<Coord, 8> q{};
  std::array<std::size_t, 8> idx{};
  std::vector<int> lo_of(arity, -1);
  for (auto [lo, hi] : lo_hi_pairs) lo_of[hi] = lo;

  auto rec = [&](auto&& self, int p) -> void {
    if (p == arity) {
      f(std::span<const Coord>(q.data(), static_cast<std::size_t>(arity)));
      return;
    }
    const auto& c = cand[p];
    const std::size_t start = lo_of[p] >= 0 ? idx[lo_of[p]] : 0;
    for (std::size_t i = start; i < c.size(); ++i) {
      idx[p] = i;
      q[p] = c[i];
      self(self, p + 1);
    }
  };
  rec(rec, 0);
}

namespace oracle {
namespace {

// Doubled odd positions: one below everything, one just above each distinct
// value. Together with closed predicates this realizes every generic
// arrangement cell on the axis.
std::vector<Coord> axis_candidates(std::vector<Coord> vals) {
  if (vals.empty()) return {1};
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Coord> out;
  out.reserve(vals.size() + 1);
  out.push_back(2 * vals.front() - 1);
  for (Coord v : vals) out.push_back(2 * v + 1);
  return out;
}

std::uint64_t pair_rank(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
  return i * n - i * (i - 1) / 2 + (j - i);
}

int effective_colors(const Dataset& s) {
  if (s.num_colors > 0) return s.num_colors;
  ColorId mx = -1;
  auto upd = [&](ColorId c) { mx = std::max(mx, c); };
  for (const auto& o : s.intervals) upd(o.color);
  for (const auto& o : s.points2) upd(o.color);
  for (const auto& o : s.points3) upd(o.color);
  for (const auto& o : s.rects3s) upd(o.color);
  for (const auto& c : s.colors_nd) upd(c);
  return mx + 1;
}

ColorId object_color(const Dataset& s, std::size_t i) {
  switch (s.setting) {
    case Setting::kIntervalStab1D: return s.intervals[i].color;
    case Setting::kDom2D:
    case Setting::kRange3S2D:
    case Setting::kRange4S2D: return s.points2[i].color;
    case Setting::kDom3D: return s.points3[i].color;
    case Setting::kStab3S2D: return s.rects3s[i].color;
    case Setting::kStab5S3D: return 0;
    case Setting::kOrthoRd: return s.colors_nd[i];
  }
  return 0;
}

}  // namespace

bool object_hit(const Dataset& s, std::size_t i, std::span<const Coord> q) {
  switch (s.setting) {
    case Setting::kIntervalStab1D: {
      const auto& o = s.intervals[i];
      return q[0] >= dbl(o.lo) && q[0] <= dbl(o.hi);
    }
    case Setting::kDom2D: {
      const auto& p = s.points2[i];
      return dbl(p.x) >= q[0] && dbl(p.y) >= q[1];
    }
    case Setting::kStab3S2D: {
      const auto& r = s.rects3s[i];
      return q[0] >= dbl(r.x1) && q[0] <= dbl(r.x2) && q[1] >= dbl(r.y);
    }
    case Setting::kDom3D: {
      const auto& p = s.points3[i];
      return dbl(p.x) >= q[0] && dbl(p.y) >= q[1] && dbl(p.z) >= q[2];
    }
    case Setting::kStab5S3D: {
      const auto& r = s.rects5[i];
      return q[0] >= dbl_side(r.x1) && q[0] <= dbl_side(r.x2) && q[1] >= dbl_side(r.y1) &&
             q[1] <= dbl_side(r.y2) && q[2] <= dbl_side(r.ztop);
    }
    case Setting::kRange3S2D: {
      const auto& p = s.points2[i];
      return dbl(p.x) >= q[0] && dbl(p.x) <= q[1] && dbl(p.y) >= q[2];
    }
    case Setting::kRange4S2D: {
      const auto& p = s.points2[i];
      return dbl(p.x) >= q[0] && dbl(p.x) <= q[1] && dbl(p.y) >= q[2] && dbl(p.y) <= q[3];
    }
    case Setting::kOrthoRd: {
      const auto& p = s.points_nd[i];
      for (int t = 0; t < s.dim; ++t) {
        if (dbl(p[t]) < q[2 * t] || dbl(p[t]) > q[2 * t + 1]) return false;
      }
      return true;
    }
  }
  return false;
}

std::int64_t exact_colored_count(const Dataset& s, std::span<const Coord> q) {
  const int nc = effective_colors(s);
  std::vector<char> seen(std::max(nc, 1), 0);
  std::int64_t k = 0;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!object_hit(s, i, q)) continue;
    const ColorId c = object_color(s, i);
    if (!seen[c]) {
      seen[c] = 1;
      ++k;
    }
  }
  return k;
}

std::int64_t exact_standard_count(const Dataset& s, std::span<const Coord> q) {
  std::int64_t k = 0;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) k += object_hit(s, i, q) ? 1 : 0;
  return k;
}

std::int64_t stab_count_3s_d(std::span<const Rect3S> rects, Coord qxd, Coord qyd) {
  std::int64_t k = 0;
  for (const auto& r : rects) k += (qxd >= r.x1 && qxd <= r.x2 && qyd >= r.y) ? 1 : 0;
  return k;
}

std::int64_t stab_count_5s_d(std::span<const Rect5> rects, Coord qxd, Coord qyd, Coord qzd) {
  std::int64_t k = 0;
  for (const auto& r : rects) {
    k += (qxd >= r.x1 && qxd <= r.x2 && qyd >= r.y1 && qyd <= r.y2 && qzd <= r.ztop) ? 1 : 0;
  }
  return k;
}

namespace {
QueryUniverse stab3s_universe_colored(std::span<const ColoredRect3S> rects) {
  std::vector<Coord> xs, ys;
  for (const auto& r : rects) {
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y);
  }
  QueryUniverse u;
  u.setting = Setting::kStab3S2D;
  u.arity = 2;
  u.cand = {axis_candidates(std::move(xs)), axis_candidates(std::move(ys))};
  return u;
}
}  // namespace

QueryUniverse enumerate_stab3s_universe(std::span<const Rect3S> rects) {
  std::vector<Coord> xs, ys;
  for (const auto& r : rects) {
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y);
  }
  QueryUniverse u;
  u.setting = Setting::kStab3S2D;
  u.arity = 2;
  u.cand = {axis_candidates(std::move(xs)), axis_candidates(std::move(ys))};
  return u;
}

QueryUniverse enumerate_stab5s_universe(std::span<const Rect5> rects) {
  std::vector<Coord> xs, ys, zs;
  auto finite = [](Coord v) { return v > -kInf && v < kInf; };
  for (const auto& r : rects) {
    if (finite(r.x1)) xs.push_back(r.x1);
    if (finite(r.x2)) xs.push_back(r.x2);
    if (finite(r.y1)) ys.push_back(r.y1);
    if (finite(r.y2)) ys.push_back(r.y2);
    if (finite(r.ztop)) zs.push_back(r.ztop);
  }
  QueryUniverse u;
  u.setting = Setting::kStab5S3D;
  u.arity = 3;
  u.cand = {axis_candidates(std::move(xs)), axis_candidates(std::move(ys)),
            axis_candidates(std::move(zs))};
  return u;
}

QueryUniverse enumerate_queries(const Dataset& s) {
  QueryUniverse u;
  u.setting = s.setting;
  switch (s.setting) {
    case Setting::kIntervalStab1D: {
      std::vector<Coord> vals;
      for (const auto& o : s.intervals) {
        vals.push_back(o.lo);
        vals.push_back(o.hi);
      }
      u.arity = 1;
      u.cand = {axis_candidates(std::move(vals))};
      return u;
    }
    case Setting::kDom2D: {
      std::vector<Coord> xs, ys;
      for (const auto& p : s.points2) {
        xs.push_back(p.x);
        ys.push_back(p.y);
      }
      u.arity = 2;
      u.cand = {axis_candidates(std::move(xs)), axis_candidates(std::move(ys))};
      return u;
    }
    case Setting::kStab3S2D:
      return stab3s_universe_colored(s.rects3s);
    case Setting::kDom3D: {
      std::vector<Coord> xs, ys, zs;
      for (const auto& p : s.points3) {
        xs.push_back(p.x);
        ys.push_back(p.y);
        zs.push_back(p.z);
      }
      u.arity = 3;
      u.cand = {axis_candidates(std::move(xs)), axis_candidates(std::move(ys)),
                axis_candidates(std::move(zs))};
      return u;
    }
    case Setting::kStab5S3D:
      return enumerate_stab5s_universe(s.rects5);
    case Setting::kRange3S2D: {
      std::vector<Coord> xs, ys;
      for (const auto& p : s.points2) {
        xs.push_back(p.x);
        ys.push_back(p.y);
      }
      auto xc = axis_candidates(std::move(xs));
      u.arity = 3;
      u.cand = {xc, xc, axis_candidates(std::move(ys))};
      u.lo_hi_pairs = {{0, 1}};
      return u;
    }
    case Setting::kRange4S2D: {
      std::vector<Coord> xs, ys;
      for (const auto& p : s.points2) {
        xs.push_back(p.x);
        ys.push_back(p.y);
      }
      auto xc = axis_candidates(std::move(xs));
      auto yc = axis_candidates(std::move(ys));
      u.arity = 4;
      u.cand = {xc, xc, yc, yc};
      u.lo_hi_pairs = {{0, 1}, {2, 3}};
      return u;
    }
    case Setting::kOrthoRd: {
      if (s.dim < 2 || s.dim > 4) throw SettingUnsupported("ortho_rd supports d in {2,3,4}");
      u.arity = 2 * s.dim;
      for (int t = 0; t < s.dim; ++t) {
        std::vector<Coord> vals;
        for (const auto& p : s.points_nd) vals.push_back(p[t]);
        auto c = axis_candidates(std::move(vals));
        u.cand.push_back(c);
        u.cand.push_back(std::move(c));
        u.lo_hi_pairs.emplace_back(2 * t, 2 * t + 1);
      }
      return u;
    }
  }
  throw SettingUnsupported("unknown setting");
}

std::vector<std::uint32_t> bulk_stab_counts_3s_d(std::span<const Rect3S> rects,
                                                 const QueryUniverse& u) {
  assert(u.arity == 2);
  const auto& X = u.cand[0];
  const auto& Y = u.cand[1];
  const std::size_t nx = X.size(), ny = Y.size();
  std::vector<std::uint32_t> out(nx * ny, 0);
  std::vector<std::vector<std::int32_t>> add(nx + 1), rem(nx + 1);
  for (const auto& r : rects) {
    const auto lo = std::lower_bound(X.begin(), X.end(), r.x1) - X.begin();
    const auto hi = std::upper_bound(X.begin(), X.end(), r.x2) - X.begin() - 1;
    if (lo > hi) continue;
    const auto yt = std::lower_bound(Y.begin(), Y.end(), r.y) - Y.begin();
    if (static_cast<std::size_t>(yt) >= ny) continue;
    add[lo].push_back(static_cast<std::int32_t>(yt));
    rem[hi + 1].push_back(static_cast<std::int32_t>(yt));
  }
  std::vector<std::int32_t> cnt(ny, 0);
  for (std::size_t xi = 0; xi < nx; ++xi) {
    for (auto t : add[xi]) ++cnt[t];
    for (auto t : rem[xi]) --cnt[t];
    std::uint32_t run = 0;
    std::uint32_t* col = out.data() + xi * ny;
    for (std::size_t t = 0; t < ny; ++t) {
      run += static_cast<std::uint32_t>(cnt[t]);
      col[t] = run;
    }
  }
  return out;
}

std::vector<std::uint32_t> bulk_stab_counts_5s_d(std::span<const Rect5> rects,
                                                 const QueryUniverse& u) {
  assert(u.arity == 3);
  const auto& X = u.cand[0];
  const auto& Y = u.cand[1];
  const auto& Z = u.cand[2];
  const std::size_t nx = X.size(), ny = Y.size(), nz = Z.size();
  std::vector<std::int32_t> diff(nx * ny * nz, 0);
  auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> std::int32_t& {
    return diff[(x * ny + y) * nz + z];
  };
  for (const auto& r : rects) {
    const auto xlo = std::lower_bound(X.begin(), X.end(), r.x1) - X.begin();
    const auto xhi = std::upper_bound(X.begin(), X.end(), r.x2) - X.begin() - 1;
    const auto ylo = std::lower_bound(Y.begin(), Y.end(), r.y1) - Y.begin();
    const auto yhi = std::upper_bound(Y.begin(), Y.end(), r.y2) - Y.begin() - 1;
    const auto zhi = std::upper_bound(Z.begin(), Z.end(), r.ztop) - Z.begin() - 1;
    if (xlo > xhi || ylo > yhi || zhi < 0) continue;
    // +/- at the 8 corners of the box [xlo..xhi] x [ylo..yhi] x [0..zhi]
    for (int c = 0; c < 4; ++c) {
      const std::size_t cx = (c & 1) ? xhi + 1 : xlo;
      const std::size_t cy = (c & 2) ? yhi + 1 : ylo;
      const int sign = ((c & 1) ? -1 : 1) * ((c & 2) ? -1 : 1);
      if (cx >= nx || cy >= ny) continue;
      at(cx, cy, 0) += sign;
      if (static_cast<std::size_t>(zhi + 1) < nz) at(cx, cy, zhi + 1) -= sign;
    }
  }
  // prefix sums along x, then y, then z
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t x = 1; x < nx; ++x) at(x, y, z) += at(x - 1, y, z);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t y = 1; y < ny; ++y) at(x, y, z) += at(x, y - 1, z);
  std::vector<std::uint32_t> out(nx * ny * nz, 0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      std::int32_t run = 0;
      const std::size_t base = (x * ny + y) * nz;
      for (std::size_t z = 0; z < nz; ++z) {
        run += diff[base + z];
        out[base + z] = static_cast<std::uint32_t>(run);
      }
    }
  return out;
}

std::vector<std::uint32_t> bulk_colored_counts_range3s(std::span<const ColoredPoint2> pts,
                                                       int num_colors, const QueryUniverse& u,
                                                       std::span<const std::uint8_t> mask) {
  assert(u.arity == 3);
  const auto& X = u.cand[0];
  const auto& Y = u.cand[2];
  const std::size_t nx = X.size(), ny = Y.size();
  const std::uint64_t npair = nx * (nx + 1) / 2;
  std::vector<std::uint32_t> out(npair * ny, 0);

  struct P {
    std::int32_t lo, yi;
    ColorId c;
  };
  std::vector<std::vector<P>> by_hi(nx);  // points become x-active when x2 reaches cand[hi]
  for (const auto& p : pts) {
    if (!mask.empty() && !mask[p.color]) continue;
    const auto lo = std::upper_bound(X.begin(), X.end(), dbl(p.x)) - X.begin() - 1;
    const auto yi = std::upper_bound(Y.begin(), Y.end(), dbl(p.y)) - Y.begin() - 1;
    if (lo < 0 || static_cast<std::size_t>(lo + 1) >= nx) continue;
    if (yi < 0) continue;
    by_hi[lo + 1].push_back({static_cast<std::int32_t>(lo), static_cast<std::int32_t>(yi), p.color});
  }
  for (auto& v : by_hi) {
    std::sort(v.begin(), v.end(), [](const P& a, const P& b) { return a.lo > b.lo; });
  }

  std::vector<std::int32_t> maxyi(std::max(num_colors, 1));
  std::vector<std::int32_t> bucket(ny, 0);
  std::vector<std::uint32_t> suffix(ny, 0);
  for (std::size_t i = 0; i < nx; ++i) {
    std::fill(maxyi.begin(), maxyi.end(), -1);
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t j = i; j < nx; ++j) {
      for (const auto& p : by_hi[j]) {
        if (p.lo < static_cast<std::int32_t>(i)) break;  // sorted by lo desc
        auto& m = maxyi[p.c];
        if (m < p.yi) {
          if (m >= 0) --bucket[m];
          m = p.yi;
          ++bucket[p.yi];
        }
      }
      // k(y index t) = number of colors whose max y index >= t
      std::uint32_t run = 0;
      const std::uint64_t base = pair_rank(nx, i, j) * ny;
      for (std::size_t t = ny; t-- > 0;) {
        run += static_cast<std::uint32_t>(bucket[t]);
        suffix[t] = run;
      }
      std::copy(suffix.begin(), suffix.end(), out.begin() + base);
    }
  }
  return out;
}

std::vector<std::uint32_t> bulk_colored_counts_box(const Dataset& s, const QueryUniverse& u,
                                                   std::span<const std::uint8_t> mask) {
  const int d = u.arity / 2;
  assert(u.arity == 2 * d);
  const int nc = effective_colors(s);
  const std::size_t n = s.size();

  // Gather coordinates per dimension.
  auto coord = [&](std::size_t i, int t) -> Coord {
    if (s.setting == Setting::kOrthoRd) return s.points_nd[i][t];
    return t == 0 ? s.points2[i].x : s.points2[i].y;
  };
  auto color_of = [&](std::size_t i) -> ColorId {
    return s.setting == Setting::kOrthoRd ? s.colors_nd[i] : s.points2[i].color;
  };

  std::vector<std::uint64_t> pair_counts(d), stride(d);
  for (int t = 0; t < d; ++t) {
    const std::uint64_t m = u.cand[2 * t].size();
    pair_counts[t] = m * (m + 1) / 2;
  }
  stride[d - 1] = 1;
  for (int t = d - 2; t >= 0; --t) stride[t] = stride[t + 1] * pair_counts[t + 1];
  std::vector<std::uint32_t> out(stride[0] * pair_counts[0], 0);

  // Per-point candidate index of the last candidate below the coordinate.
  std::vector<std::vector<std::int32_t>> lo_idx(d, std::vector<std::int32_t>(n));
  for (int t = 0; t < d; ++t) {
    const auto& C = u.cand[2 * t];
    for (std::size_t i = 0; i < n; ++i) {
      lo_idx[t][i] =
          static_cast<std::int32_t>(std::upper_bound(C.begin(), C.end(), dbl(coord(i, t))) -
                                    C.begin() - 1);
    }
  }

  std::vector<std::size_t> selected;
  selected.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask.empty() && !mask[color_of(i)]) continue;
    selected.push_back(i);
  }

  const auto& X = u.cand[0];
  const std::size_t nx = X.size();
  std::vector<char> seen(std::max(nc, 1), 0);
  std::vector<std::vector<std::size_t>> by_hi(nx);

  // Recurse over dims 1..d-1 choosing (lo,hi) candidate pairs and filtering
  // points; the innermost sweep handles dim 0 for all pairs at once.
  auto inner = [&](std::span<const std::size_t> pts, std::uint64_t base) {
    for (auto& v : by_hi) v.clear();
    for (std::size_t i : pts) {
      const std::int32_t lo = lo_idx[0][i];
      if (lo < 0 || static_cast<std::size_t>(lo + 1) >= nx) continue;
      by_hi[lo + 1].push_back(i);
    }
    for (auto& v : by_hi)
      std::sort(v.begin(), v.end(),
                [&](std::size_t a, std::size_t b) { return lo_idx[0][a] > lo_idx[0][b]; });
    for (std::size_t i = 0; i < nx; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      std::uint32_t cnt = 0;
      for (std::size_t j = i; j < nx; ++j) {
        for (std::size_t pi : by_hi[j]) {
          if (lo_idx[0][pi] < static_cast<std::int32_t>(i)) break;
          const ColorId c = color_of(pi);
          if (!seen[c]) {
            seen[c] = 1;
            ++cnt;
          }
        }
        out[base + pair_rank(nx, i, j) * stride[0]] = cnt;
      }
    }
  };

  auto rec = [&](auto&& self, int t, std::span<const std::size_t> pts,
                 std::uint64_t base) -> void {
    if (t == 0) {
      inner(pts, base);
      return;
    }
    const auto& C = u.cand[2 * t];
    const std::size_t m = C.size();
    // group points by activation index on this dim
    std::vector<std::vector<std::size_t>> dim_by_hi(m);
    for (std::size_t i : pts) {
      const std::int32_t lo = lo_idx[t][i];
      if (lo < 0 || static_cast<std::size_t>(lo + 1) >= m) continue;
      dim_by_hi[lo + 1].push_back(i);
    }
    std::vector<std::size_t> live;
    for (std::size_t a = 0; a < m; ++a) {
      live.clear();
      for (std::size_t b = a; b < m; ++b) {
        for (std::size_t pi : dim_by_hi[b])
          if (lo_idx[t][pi] >= static_cast<std::int32_t>(a)) live.push_back(pi);
        self(self, t - 1, live, base + pair_rank(m, a, b) * stride[t]);
      }
    }
  };
  rec(rec, d - 1, selected, 0);
  return out;
}

std::vector<std::uint32_t> bulk_colored_counts_pointlike(const Dataset& s, const QueryUniverse& u,
                                                         std::span<const std::uint8_t> mask) {
  const int nc = effective_colors(s);
  auto masked = [&](ColorId c) { return !mask.empty() && !mask[c]; };

  switch (s.setting) {
    case Setting::kIntervalStab1D: {
      const auto& X = u.cand[0];
      const std::size_t nx = X.size();
      std::vector<std::uint32_t> out(nx, 0);
      std::vector<std::int32_t> diff(nx + 1, 0);
      for (ColorId c = 0; c < nc; ++c) {
        if (masked(c)) continue;
        std::fill(diff.begin(), diff.end(), 0);
        bool any = false;
        for (const auto& o : s.intervals) {
          if (o.color != c) continue;
          const auto lo = std::lower_bound(X.begin(), X.end(), dbl(o.lo)) - X.begin();
          const auto hi = std::upper_bound(X.begin(), X.end(), dbl(o.hi)) - X.begin() - 1;
          if (lo > hi) continue;
          ++diff[lo];
          --diff[hi + 1];
          any = true;
        }
        if (!any) continue;
        std::int32_t run = 0;
        for (std::size_t t = 0; t < nx; ++t) {
          run += diff[t];
          out[t] += run > 0 ? 1 : 0;
        }
      }
      return out;
    }
    case Setting::kDom2D: {
      const auto& X = u.cand[0];
      const auto& Y = u.cand[1];
      const std::size_t nx = X.size(), ny = Y.size();
      std::vector<std::uint32_t> out(nx * ny, 0);
      std::vector<std::int32_t> diff(nx * ny, 0);
      for (ColorId c = 0; c < nc; ++c) {
        if (masked(c)) continue;
        std::fill(diff.begin(), diff.end(), 0);
        bool any = false;
        for (const auto& p : s.points2) {
          if (p.color != c) continue;
          // presence region: positions (qx <= 2px, qy <= 2py)
          const auto xi = std::upper_bound(X.begin(), X.end(), dbl(p.x)) - X.begin() - 1;
          const auto yi = std::upper_bound(Y.begin(), Y.end(), dbl(p.y)) - Y.begin() - 1;
          if (xi < 0 || yi < 0) continue;
          ++diff[0];
          if (static_cast<std::size_t>(xi + 1) < nx) --diff[(xi + 1) * ny];
          if (static_cast<std::size_t>(yi + 1) < ny) --diff[yi + 1];
          if (static_cast<std::size_t>(xi + 1) < nx && static_cast<std::size_t>(yi + 1) < ny)
            ++diff[(xi + 1) * ny + yi + 1];
          any = true;
        }
        if (!any) continue;
        for (std::size_t x = 0; x < nx; ++x)
          for (std::size_t y = 0; y < ny; ++y) {
            std::int32_t v = diff[x * ny + y];
            if (x > 0) v += diff[(x - 1) * ny + y];
            if (y > 0) v += diff[x * ny + y - 1];
            if (x > 0 && y > 0) v -= diff[(x - 1) * ny + y - 1];
            diff[x * ny + y] = v;
          }
        for (std::size_t t = 0; t < nx * ny; ++t) out[t] += diff[t] > 0 ? 1 : 0;
      }
      return out;
    }
    case Setting::kDom3D: {
      const auto& X = u.cand[0];
      const auto& Y = u.cand[1];
      const auto& Z = u.cand[2];
      const std::size_t nx = X.size(), ny = Y.size(), nz = Z.size();
      std::vector<std::uint32_t> out(nx * ny * nz, 0);
      std::vector<Rect5> boxes;
      for (ColorId c = 0; c < nc; ++c) {
        if (masked(c)) continue;
        boxes.clear();
        for (const auto& p : s.points3) {
          if (p.color != c) continue;
          // presence region as a box in query space: qx <= 2px etc.
          boxes.push_back(Rect5{-kInf, dbl(p.x), -kInf, dbl(p.y), dbl(p.z), -1});
        }
        if (boxes.empty()) continue;
        auto cnt = bulk_stab_counts_5s_d(boxes, u);
        for (std::size_t t = 0; t < out.size(); ++t) out[t] += cnt[t] > 0 ? 1 : 0;
      }
      return out;
    }
    default:
      throw SettingUnsupported("bulk_colored_counts_pointlike: unsupported setting");
  }
}

}  // namespace oracle
}  // namespace crc
