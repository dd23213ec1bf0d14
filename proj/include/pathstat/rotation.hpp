#pragma once

#include <cstdint>
#include <vector>

#include "pathstat/path_core.hpp"

namespace pathstat {

/// P written as root^power with |root| a multiple of k and power maximal.
struct PrimitiveDecomposition {
  DiagonalPath root;
  std::int64_t power{1};
};

/// Orbit of a path under rotate_left_k, listed starting from the canonical
/// (lexicographically minimal, i.e. minimal-rank) representative.
struct RotationClass {
  std::vector<DiagonalPath> paths;
  FamilyParams params;
};

/// Labels 0..n-1 assigned to the objects (R^t(P), m) of a rotation class.
/// labels[t][m-1] is the label of class member t with mark m; each label
/// is used exactly j/r times.
struct LabeledClass {
  std::vector<std::vector<std::int64_t>> labels;
};

/// Moves the first k steps of the path to the end. Throws
/// std::invalid_argument when the length is not kn.
DiagonalPath rotate_left_k(const DiagonalPath& path, const FamilyParams& params);

/// Unique (root, power) with root^power = path, |root| divisible by k and
/// power maximal; power divides gcd(n, j).
PrimitiveDecomposition primitive_decomposition(const DiagonalPath& path,
                                               const FamilyParams& params);

/// Distinct iterates under rotate_left_k; size n/r.
RotationClass orbit(const DiagonalPath& path, const FamilyParams& params);

/// Endpoint labeling of the class diagram: highest endpoints first, ties to
/// the left, j/r endpoints per label. The label of every object equals its
/// statistic X.
LabeledClass label_class(const RotationClass& cls);

/// For a j=1 family member with X = n-1, the unique member of its rotation
/// class whose label is `target` (and hence whose statistic is `target`).
DiagonalPath bijection_to(const DiagonalPath& path, const FamilyParams& params,
                          std::int64_t target);

/// Inverse map: cuts the path at its lowest k-divisible point relative to
/// the parallel baselines and swaps the two pieces; the result has X = n-1.
DiagonalPath bijection_inverse(const DiagonalPath& q, const FamilyParams& params);

}  // namespace pathstat
