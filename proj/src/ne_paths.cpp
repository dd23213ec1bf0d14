#include "pathstat/ne_paths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pathstat {

NEPath NEPath::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("NE path text must be nonempty");
  std::vector<NEStep> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'E': steps.push_back(NEStep::East); break;
      case 'N': steps.push_back(NEStep::North); break;
      default:
        throw std::invalid_argument(std::string("invalid NE path character '") + c + "'");
    }
  }
  return NEPath(std::move(steps));
}

std::string NEPath::render() const {
  std::string out;
  out.reserve(steps_.size());
  for (NEStep s : steps_) out.push_back(s == NEStep::East ? 'E' : 'N');
  return out;
}

std::int64_t ne_height(std::int64_t x, std::int64_t y, std::int64_t k) {
  return y - (k - 1) * x;
}

std::vector<std::int64_t> NEPath::heights(std::int64_t k) const {
  std::vector<std::int64_t> h;
  h.reserve(steps_.size() + 1);
  std::int64_t value = 0;
  h.push_back(value);
  for (NEStep s : steps_) {
    value += (s == NEStep::North) ? 1 : -(k - 1);
    h.push_back(value);
  }
  return h;
}

std::vector<std::int64_t> high_points(const NEPath& path, std::int64_t j, std::int64_t k) {
  const auto h = path.heights(k);
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(j));
  // leftmost point at each successively smaller distinct height
  std::int64_t ceiling = std::numeric_limits<std::int64_t>::max();
  while (static_cast<std::int64_t>(labels.size()) < j) {
    std::int64_t best_height = std::numeric_limits<std::int64_t>::min();
    std::int64_t best_label = -1;
    for (std::size_t x = 0; x < h.size(); ++x) {
      if (h[x] < ceiling && h[x] > best_height) {
        best_height = h[x];
        best_label = static_cast<std::int64_t>(x);
      }
    }
    if (best_label < 0 || best_height < 1) {
      throw std::logic_error("high_points: fewer than j positive distinct heights");
    }
    labels.push_back(best_label);
    ceiling = best_height;
  }
  return labels;
}

std::int64_t ne_statistic_x(const MarkedNEPath& marked, std::int64_t j, std::int64_t k) {
  if (marked.mark < 1 || marked.mark > j) {
    throw std::invalid_argument("ne_statistic_x: mark outside {1..j}");
  }
  return high_points(marked.path, j, k)[static_cast<std::size_t>(marked.mark - 1)];
}

bool weakly_above(const NEPath& path, std::int64_t k) {
  const auto h = path.heights(k);
  return std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v >= 0; });
}

NEPath ne_final_bijection(const MarkedNEPath& marked, std::int64_t n, std::int64_t k,
                          std::int64_t j) {
  const std::int64_t last_label = k * n + j;
  if (ne_statistic_x(marked, j, k) != last_label) {
    throw std::invalid_argument("ne_final_bijection: marked high point must be the last point");
  }
  const auto& steps = marked.path.steps();
  if (steps.empty() || steps.back() != NEStep::North) {
    throw std::invalid_argument("ne_final_bijection: last step is not north");
  }
  std::vector<NEStep> out(steps.begin(), steps.end() - 1);
  std::reverse(out.begin(), out.end());
  NEPath image(std::move(out));
  if (!weakly_above(image, k)) {
    throw std::logic_error("ne_final_bijection: image not weakly above y = (k-1)x");
  }
  return image;
}

NEEnumerator::NEEnumerator(std::int64_t east, std::int64_t north) {
  if (east < 0 || north < 0 || east + north < 1) {
    throw std::invalid_argument("NEEnumerator: need east, north >= 0 and at least one step");
  }
  current_.assign(static_cast<std::size_t>(east), NEStep::East);
  current_.insert(current_.end(), static_cast<std::size_t>(north), NEStep::North);
}

bool NEEnumerator::next(NEPath& out) {
  if (exhausted_) return false;
  out = NEPath(current_);
  exhausted_ = !std::next_permutation(current_.begin(), current_.end());
  return true;
}

Natural weakly_above_count(std::int64_t n, std::int64_t k, std::int64_t j) {
  if (n < 1 || k < 2 || j < 1) {
    throw std::invalid_argument("weakly_above_count: need n >= 1, k >= 2, j >= 1");
  }
  NEEnumerator paths(n, (k - 1) * n + j - 1);
  Natural count = 0;
  NEPath p;
  while (paths.next(p)) {
    if (weakly_above(p, k)) ++count;
  }
  return count;
}

}  // namespace pathstat
