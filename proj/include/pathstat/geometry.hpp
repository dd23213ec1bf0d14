#pragma once

#include <cstdint>
#include <vector>

#include "pathstat/path_core.hpp"

namespace pathstat {

/// An exact line y = intercept + (rise/run) x, kept unreduced so that all
/// side tests stay in integer arithmetic.
struct Baseline {
  std::int64_t rise{};
  std::int64_t run{};
  std::int64_t intercept{};

  friend bool operator==(const Baseline&, const Baseline&) = default;
};

enum class Side : std::int8_t { Below = -1, On = 0, Above = 1 };

/// Baseline of the marked family path: rise = -((k-2)n - 2), run = kn,
/// intercept = 2(mark - 1). Throws std::invalid_argument when the mark is
/// outside {1..j}.
Baseline baseline_for(const FamilyParams& params, std::int64_t mark);

/// Same line shifted to intercept 2*shift, without the mark-range check
/// (used to probe shifts at and beyond j).
Baseline shifted_baseline(const FamilyParams& params, std::int64_t shift);

/// Sign of run*(y - intercept) - rise*x. No rounding anywhere.
Side side_of_baseline(const Baseline& b, std::int64_t x, std::int64_t y);

/// Interior point labels divisible by k: [k, 2k, ..., (n-1)k].
std::vector<std::int64_t> interior_kdiv_labels(const FamilyParams& params);

/// Number of interior k-divisible points of the path lying strictly above
/// the mark's baseline. Throws std::invalid_argument on family mismatch or
/// an out-of-range mark.
std::int64_t statistic_x(const MarkedPath& marked, const FamilyParams& params);

/// True iff no interior k-divisible point lies exactly on the baseline.
bool lemma_no_kdiv_on_baseline(const MarkedPath& marked, const FamilyParams& params);

/// True iff heights[x] is strictly above b for every label x in labels.
bool all_labels_above(const std::vector<std::int64_t>& heights,
                      const std::vector<std::int64_t>& labels, const Baseline& b);

}  // namespace pathstat
