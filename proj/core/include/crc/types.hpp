#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace crc {

// Integer coordinate, in grid units. Structures internally work in a doubled
// coordinate space: a data coordinate v sits at 2*v, and query positions may
// sit at odd values 2*v+1, i.e. strictly between v and v+1. This makes
// half-open pieces produced by decompositions exactly representable.
using Coord = std::int64_t;

// Dense 0-based color index.
using ColorId = std::int32_t;

// Sentinel for sides extending to +/- infinity. Chosen so that doubling and
// negation stay in range.
inline constexpr Coord kInf = std::numeric_limits<Coord>::max() / 8;

inline constexpr Coord dbl(Coord v) { return 2 * v; }          // position "at v"
inline constexpr Coord between(Coord v) { return 2 * v + 1; }  // position "just above v"
inline constexpr Coord dbl_side(Coord v) {
  return (v >= kInf) ? kInf : (v <= -kInf ? -kInf : 2 * v);
}

struct ColoredInterval {
  Coord lo = 0, hi = 0;  // lo <= hi
  ColorId color = 0;
};

struct ColoredPoint2 {
  Coord x = 0, y = 0;
  ColorId color = 0;
};

struct ColoredPoint3 {
  Coord x = 0, y = 0, z = 0;
  ColorId color = 0;
};

// [x1,x2] x [y, +inf). Coordinates are in doubled space when produced by a
// decomposition, raw otherwise; each API states which.
struct Rect3S {
  Coord x1 = 0, x2 = 0, y = 0;
  std::int32_t tag = -1;  // optional source id
};

struct ColoredRect3S {
  Coord x1 = 0, x2 = 0, y = 0;
  ColorId color = 0;
};

// [x1,x2] x [y1,y2] x (-inf, ztop]. Sides may be +/-kInf.
struct Rect5 {
  Coord x1 = 0, x2 = 0, y1 = 0, y2 = 0, ztop = 0;
  std::int32_t tag = -1;
};

enum class AnswerKind { kExact, kCApprox, kEpsApprox };

// A count plus its contract. kExact: value == k. kCApprox: k in [value, C*value].
// kEpsApprox: value in [(1-eps)k, (1+eps)k].
struct ApproxAnswer {
  double value = 0.0;
  AnswerKind kind = AnswerKind::kExact;
  double param = 0.0;  // C for kCApprox, eps for kEpsApprox

  static ApproxAnswer exact(double v) { return {v, AnswerKind::kExact, 0.0}; }
  static ApproxAnswer capprox(double v, double c) { return {v, AnswerKind::kCApprox, c}; }
  static ApproxAnswer epsapprox(double v, double eps) { return {v, AnswerKind::kEpsApprox, eps}; }
};

enum class Setting {
  kIntervalStab1D,
  kDom2D,
  kStab3S2D,
  kDom3D,
  kStab5S3D,
  kRange3S2D,
  kRange4S2D,
  kOrthoRd,
};

const char* setting_name(Setting s);
bool setting_from_name(const std::string& name, Setting* out);

// Raised when a randomized build exhausts its attempt budget without finding
// a sample that passes full-universe verification.
class BuildFailedSuitability : public std::runtime_error {
 public:
  BuildFailedSuitability(const std::string& what, int attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

class SettingUnsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QueryOutOfGrid : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Tunables shared by the randomized structures. Defaults follow the library's
// standard operating point; tests lower constants to force rarely-taken paths.
struct Config {
  double c1 = 2.0;            // sampling-rate constant in M = min(1, c1 * ln(n) / (eps^2 z))
  int attempt_cap = 64;       // resample attempts before failing a build
  int shared_table_min_n = 16;
  int leaf_threshold = 16;    // recursion-tree leaf size
  double cap_c = 4.0;         // stab3d small-count cutoff constant (> 3)
  int delta_floor = 2;        // floor for the stab3d sampling rate denominator
  std::int64_t k_cap_override = 0;     // stab3d: force the exact-path cutoff K (0 = auto)
  double sample_rate_override = 0.0;   // force sampling probability M (0 = auto); test hook
  int bucket_size_override = 0;        // ortho2d bucket size (0 = auto log^2 n)
};

}  // namespace crc
