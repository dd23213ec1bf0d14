#include "pathstat/rotation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pathstat/geometry.hpp"

namespace pathstat {

DiagonalPath rotate_left_k(const DiagonalPath& path, const FamilyParams& params) {
  params.validate();
  if (path.size() != params.length()) {
    throw std::invalid_argument("rotate_left_k: path length must be kn");
  }
  return path.rotated(params.k);
}

PrimitiveDecomposition primitive_decomposition(const DiagonalPath& path,
                                               const FamilyParams& params) {
  if (!validate_family(path, params)) {
    throw std::invalid_argument("primitive_decomposition: path not in the given family");
  }
  const auto& steps = path.steps();
  const std::int64_t kn = params.length();
  for (std::int64_t r = params.n; r >= 1; --r) {
    if (params.n % r != 0) continue;
    const std::int64_t period = kn / r;  // a multiple of k since r | n
    bool periodic = true;
    for (std::int64_t t = period; t < kn && periodic; ++t) {
      periodic = steps[static_cast<std::size_t>(t)] == steps[static_cast<std::size_t>(t - period)];
    }
    if (periodic) {
      if (params.j % r != 0) {
        throw std::logic_error("primitive_decomposition: power does not divide j");
      }
      std::vector<Step> root(steps.begin(), steps.begin() + period);
      return {DiagonalPath(std::move(root)), r};
    }
  }
  throw std::logic_error("primitive_decomposition: unreachable (r = 1 always works)");
}

RotationClass orbit(const DiagonalPath& path, const FamilyParams& params) {
  const auto decomposition = primitive_decomposition(path, params);
  const std::int64_t size = params.n / decomposition.power;

  std::vector<DiagonalPath> iterates;
  iterates.reserve(static_cast<std::size_t>(size));
  DiagonalPath current = path;
  for (std::int64_t t = 0; t < size; ++t) {
    iterates.push_back(current);
    current = current.rotated(params.k);
  }
  if (current != path) {
    throw std::logic_error("orbit: rotation did not close after n/r steps");
  }

  const auto min_it = std::min_element(iterates.begin(), iterates.end());
  std::rotate(iterates.begin(), min_it, iterates.end());
  return {std::move(iterates), params};
}

LabeledClass label_class(const RotationClass& cls) {
  const FamilyParams& params = cls.params;
  const auto size = static_cast<std::int64_t>(cls.paths.size());
  if (size == 0) throw std::invalid_argument("label_class: empty class");
  const std::int64_t r = params.n / size;
  const std::int64_t per_label = params.j / r;

  // Doubled diagram of the canonical representative: member t occupies the
  // window [tk, tk + kn] and its baseline for mark m passes through
  // (tk, h(tk) + 2(m-1)) with slope rise/run. Every lattice point sits on
  // exactly one line of that slope, identified by the exact integer height
  // w(x, y) = run*y - rise*x; larger w means a higher parallel. The label
  // of (t, m) is the number of k-divisible points interior to its window
  // lying strictly above its baseline. A single top-down sweep over the
  // endpoints cannot reproduce this: endpoints at equal raw height lie on
  // different parallels, and marks shift w by 2*run while the second copy
  // of the path shifts it by kn*(2j - 2), so the per-window comparisons
  // are not a global order for j > 1.
  const std::int64_t rise = -((params.k - 2) * params.n - 2);
  const std::int64_t run = params.length();
  const auto single = cls.paths.front().heights();
  std::vector<std::int64_t> doubled(static_cast<std::size_t>(2 * run) + 1);
  for (std::int64_t x = 0; x <= 2 * run; ++x) {
    doubled[static_cast<std::size_t>(x)] =
        x <= run ? single[static_cast<std::size_t>(x)]
                 : single[static_cast<std::size_t>(x - run)] + single[static_cast<std::size_t>(run)];
  }
  const auto w = [&](std::int64_t x) {
    return run * doubled[static_cast<std::size_t>(x)] - rise * x;
  };

  LabeledClass out;
  out.labels.assign(static_cast<std::size_t>(size),
                    std::vector<std::int64_t>(static_cast<std::size_t>(params.j), -1));
  std::vector<std::int64_t> uses(static_cast<std::size_t>(params.n), 0);
  for (std::int64_t t = 0; t < size; ++t) {
    const std::int64_t x0 = t * params.k;
    for (std::int64_t m = 1; m <= params.j; ++m) {
      const std::int64_t line = w(x0) + 2 * (m - 1) * run;
      std::int64_t label = 0;
      for (std::int64_t i = 1; i < params.n; ++i) {
        if (w(x0 + i * params.k) > line) ++label;
      }
      out.labels[static_cast<std::size_t>(t)][static_cast<std::size_t>(m - 1)] = label;
      ++uses[static_cast<std::size_t>(label)];
    }
  }
  for (std::int64_t label = 0; label < params.n; ++label) {
    if (uses[static_cast<std::size_t>(label)] != per_label) {
      throw std::logic_error("label_class: label multiplicity != j/r");
    }
  }
  return out;
}

DiagonalPath bijection_to(const DiagonalPath& path, const FamilyParams& params,
                          std::int64_t target) {
  if (params.j != 1) throw std::invalid_argument("bijection_to: requires a j=1 family");
  if (target < 0 || target >= params.n) {
    throw std::invalid_argument("bijection_to: target outside [0, n)");
  }
  if (statistic_x({path, 1}, params) != params.n - 1) {
    throw std::invalid_argument("bijection_to: path must have X = n-1");
  }
  const RotationClass cls = orbit(path, params);
  const LabeledClass labeled = label_class(cls);
  for (std::size_t t = 0; t < cls.paths.size(); ++t) {
    if (labeled.labels[t][0] == target) return cls.paths[t];
  }
  throw std::logic_error("bijection_to: target label missing from class");
}

DiagonalPath bijection_inverse(const DiagonalPath& q, const FamilyParams& params) {
  if (params.j != 1) throw std::invalid_argument("bijection_inverse: requires a j=1 family");
  if (!validate_family(q, params)) {
    throw std::invalid_argument("bijection_inverse: path not in the given family");
  }
  const auto h = q.heights();
  // lowest k-divisible point measured relative to the parallel lines:
  // minimize kn*h(x) + ((k-2)n - 2)*x over x in {0, k, ..., (n-1)k}
  const std::int64_t kn = params.length();
  const std::int64_t slope_num = (params.k - 2) * params.n - 2;
  std::int64_t best_x = 0;
  std::int64_t best_value = 0;
  bool tie = false;
  for (std::int64_t i = 0; i < params.n; ++i) {
    const std::int64_t x = i * params.k;
    const std::int64_t value = kn * h[static_cast<std::size_t>(x)] + slope_num * x;
    if (i == 0 || value < best_value) {
      best_value = value;
      best_x = x;
      tie = false;
    } else if (value == best_value) {
      tie = true;
    }
  }
  if (tie) {
    throw std::logic_error("bijection_inverse: non-unique lowest k-divisible point");
  }
  return q.rotated(best_x);
}

}  // namespace pathstat
