#include "pathstat/geometry.hpp"

#include <stdexcept>

namespace pathstat {

Baseline shifted_baseline(const FamilyParams& params, std::int64_t shift) {
  return Baseline{-((params.k - 2) * params.n - 2), params.length(), 2 * shift};
}

Baseline baseline_for(const FamilyParams& params, std::int64_t mark) {
  params.validate();
  if (mark < 1 || mark > params.j) {
    throw std::invalid_argument("baseline_for: mark outside {1..j}");
  }
  return shifted_baseline(params, mark - 1);
}

Side side_of_baseline(const Baseline& b, std::int64_t x, std::int64_t y) {
  const std::int64_t sign = b.run * (y - b.intercept) - b.rise * x;
  if (sign > 0) return Side::Above;
  if (sign < 0) return Side::Below;
  return Side::On;
}

std::vector<std::int64_t> interior_kdiv_labels(const FamilyParams& params) {
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(params.n > 0 ? params.n - 1 : 0));
  for (std::int64_t i = 1; i < params.n; ++i) labels.push_back(i * params.k);
  return labels;
}

std::int64_t statistic_x(const MarkedPath& marked, const FamilyParams& params) {
  if (!validate_family(marked.path, params)) {
    throw std::invalid_argument("statistic_x: path not in the given family");
  }
  const Baseline b = baseline_for(params, marked.mark);
  const auto h = marked.path.heights();
  std::int64_t count = 0;
  for (std::int64_t x : interior_kdiv_labels(params)) {
    if (side_of_baseline(b, x, h[static_cast<std::size_t>(x)]) == Side::Above) ++count;
  }
  return count;
}

bool lemma_no_kdiv_on_baseline(const MarkedPath& marked, const FamilyParams& params) {
  if (!validate_family(marked.path, params)) {
    throw std::invalid_argument("lemma check: path not in the given family");
  }
  const Baseline b = baseline_for(params, marked.mark);
  const auto h = marked.path.heights();
  for (std::int64_t x : interior_kdiv_labels(params)) {
    if (side_of_baseline(b, x, h[static_cast<std::size_t>(x)]) == Side::On) return false;
  }
  return true;
}

bool all_labels_above(const std::vector<std::int64_t>& heights,
                      const std::vector<std::int64_t>& labels, const Baseline& b) {
  for (std::int64_t x : labels) {
    if (side_of_baseline(b, x, heights[static_cast<std::size_t>(x)]) != Side::Above) {
      return false;
    }
  }
  return true;
}

}  // namespace pathstat
