#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pathstat/bigint.hpp"

namespace pathstat {

/// A diagonal lattice step: Up = (1,1), Down = (1,-1).
enum class Step : std::uint8_t { Up = 0, Down = 1 };

/// Parameters (n, k, j) of the path family with kn steps, n+j of them upsteps.
struct FamilyParams {
  std::int64_t n{};
  std::int64_t k{};
  std::int64_t j{};

  /// Throws std::invalid_argument unless n >= 1, k >= 2, j >= 1 and
  /// (k-1)n >= j (so the downstep count kn-(n+j) is nonnegative).
  void validate() const;

  std::int64_t length() const { return k * n; }
  std::int64_t upsteps() const { return n + j; }
  std::int64_t downsteps() const { return length() - upsteps(); }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// An immutable sequence of up/down steps. Comparison is lexicographic
/// with Up < Down, matching enumeration order and rank.
class DiagonalPath {
 public:
  DiagonalPath() = default;
  explicit DiagonalPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a nonempty string over {'U','D'}; anything else throws
  /// std::invalid_argument.
  static DiagonalPath parse(std::string_view text);

  std::string render() const;

  std::int64_t size() const { return static_cast<std::int64_t>(steps_.size()); }
  Step step(std::int64_t t) const { return steps_[static_cast<std::size_t>(t)]; }
  const std::vector<Step>& steps() const { return steps_; }

  /// Height profile h(0..size): h(0) = 0, each step changes height by +-1.
  std::vector<std::int64_t> heights() const;

  /// The cyclic shift steps[offset..] ++ steps[..offset].
  DiagonalPath rotated(std::int64_t offset) const;

  friend bool operator==(const DiagonalPath&, const DiagonalPath&) = default;
  friend auto operator<=>(const DiagonalPath&, const DiagonalPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// A path paired with a mark m in {1..j} selecting one of the j parallel
/// baselines.
struct MarkedPath {
  DiagonalPath path;
  std::int64_t mark{1};
};

/// True iff the path has kn steps of which n+j are upsteps.
bool validate_family(const DiagonalPath& path, const FamilyParams& params);

/// 0-based lexicographic index of the path among all paths with the same
/// length and upstep count (Up < Down).
Natural rank(const DiagonalPath& path);

/// Inverse of rank for the given family; throws std::out_of_range when
/// r >= C(kn, n+j).
DiagonalPath unrank(const Natural& r, const FamilyParams& params);

/// Streams all paths of a given length and upstep count in lexicographic
/// order (Up < Down), optionally restricted to a rank range [lo, hi).
class PathEnumerator {
 public:
  PathEnumerator(std::int64_t length, std::int64_t upsteps);
  PathEnumerator(std::int64_t length, std::int64_t upsteps, const Natural& rank_lo,
                 const Natural& rank_hi);
  explicit PathEnumerator(const FamilyParams& params);
  PathEnumerator(const FamilyParams& params, const Natural& rank_lo, const Natural& rank_hi);

  /// Yields the next path; returns false when the stream is exhausted.
  bool next(DiagonalPath& out);

 private:
  std::vector<Step> current_;
  Natural remaining_;
};

}  // namespace pathstat
