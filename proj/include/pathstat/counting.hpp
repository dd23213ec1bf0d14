#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathstat/bigint.hpp"
#include "pathstat/path_core.hpp"

namespace pathstat {

/// Exact C(m, r); zero when r < 0 or r > m.
Natural binomial(std::int64_t m, std::int64_t r);

/// |P(n,k,j)| = C(kn, n+j).
Natural family_size(const FamilyParams& params);

/// (k-1)C(kn-1, n+j-1) - C(kn-1, n+j), cross-checked against the exact
/// quotient j*C(kn, n+j)/n. A divisibility failure throws std::logic_error.
Natural count_formula(const FamilyParams& params);

/// count_formula for each valid n up to n_max, starting at the least n
/// with (k-1)n >= j.
std::vector<std::pair<std::int64_t, Natural>> sequence(std::int64_t k, std::int64_t j,
                                                       std::int64_t n_max);

/// Parameters of the unified expression (ad-bc)/(an+b) * C(an+b, cn+d).
struct GeneralParams {
  std::int64_t a{};
  std::int64_t b{};
  std::int64_t c{};
  std::int64_t d{};
  std::int64_t n{};

  /// Throws std::invalid_argument unless a >= 2, b >= 0, c >= 1, d >= 1,
  /// n >= 1, ad - bc > 0 and an+b >= cn+d >= 0.
  void validate() const;
};

/// (a-c)C(an+b-1, cn+d-1) - c*C(an+b-1, cn+d), cross-checked against
/// (ad-bc)*C(an+b, cn+d)/(an+b) with exact divisibility.
Natural unified_formula(const GeneralParams& g);

/// unified_formula with b = 0: the count (d/n)C(an, cn+d) of the diagonal
/// path generalization.
Natural count_general_a(std::int64_t a, std::int64_t c, std::int64_t d, std::int64_t n);

/// j*C(kn+j, n)/(kn+j): the count of NE paths weakly above y = (k-1)x.
Natural count_ne(std::int64_t n, std::int64_t k, std::int64_t j);

}  // namespace pathstat
