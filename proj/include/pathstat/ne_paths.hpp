#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathstat/bigint.hpp"

namespace pathstat {

enum class NEStep : std::uint8_t { East = 0, North = 1 };

/// An immutable north/east path: EAST = (1,0), NORTH = (0,1).
class NEPath {
 public:
  NEPath() = default;
  explicit NEPath(std::vector<NEStep> steps) : steps_(std::move(steps)) {}

  /// Parses a nonempty string over {'N','E'}.
  static NEPath parse(std::string_view text);
  std::string render() const;

  std::int64_t size() const { return static_cast<std::int64_t>(steps_.size()); }
  const std::vector<NEStep>& steps() const { return steps_; }

  /// Height y - (k-1)x of every point 0..size, an order-equivalent integer
  /// stand-in for perpendicular distance to y = (k-1)x.
  std::vector<std::int64_t> heights(std::int64_t k) const;

  friend bool operator==(const NEPath&, const NEPath&) = default;
  friend auto operator<=>(const NEPath&, const NEPath&) = default;

 private:
  std::vector<NEStep> steps_;
};

/// A path with one of its j high points marked (mark in {1..j}, indexing
/// the high-point list).
struct MarkedNEPath {
  NEPath path;
  std::int64_t mark{1};
};

/// y - (k-1)x; positive iff strictly above the line, zero iff on it.
std::int64_t ne_height(std::int64_t x, std::int64_t y, std::int64_t k);

/// Point labels of the j high points: label t is the leftmost point at the
/// t-th largest distinct height. All returned heights are >= 1.
std::vector<std::int64_t> high_points(const NEPath& path, std::int64_t j, std::int64_t k);

/// Label of the marked high point; always in [1, kn+j].
std::int64_t ne_statistic_x(const MarkedNEPath& marked, std::int64_t j, std::int64_t k);

/// For a marked path with X = kn+j: drops the final step (necessarily
/// north) and rotates the rest 180 degrees (sequence reversal). The image
/// lies weakly above y = (k-1)x.
NEPath ne_final_bijection(const MarkedNEPath& marked, std::int64_t n, std::int64_t k,
                          std::int64_t j);

/// True iff every point satisfies y >= (k-1)x.
bool weakly_above(const NEPath& path, std::int64_t k);

/// Streams all NE paths with the given step counts in lexicographic order
/// (East < North).
class NEEnumerator {
 public:
  NEEnumerator(std::int64_t east, std::int64_t north);
  bool next(NEPath& out);

 private:
  std::vector<NEStep> current_;
  bool exhausted_{false};
};

/// Exhaustive count of paths with n east and (k-1)n+j-1 north steps lying
/// weakly above y = (k-1)x; equals count_ne(n, k, j).
Natural weakly_above_count(std::int64_t n, std::int64_t k, std::int64_t j);

}  // namespace pathstat
