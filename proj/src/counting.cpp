#include "pathstat/counting.hpp"

#include <stdexcept>
#include <string>

namespace pathstat {

Natural binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  Natural result = 1;
  // result stays integral at every step: after multiplying by (m-r+i) the
  // running product is C(m-r+i, i) * i!, divisible by i.
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;
  }
  return result;
}

Natural family_size(const FamilyParams& params) {
  return binomial(params.length(), params.upsteps());
}

namespace {

// Exact quotient; nonzero remainder means the surrounding identity is
// broken, which is a bug, not a data case.
Natural exact_div(const Natural& num, const Natural& den, const char* what) {
  if (num % den != 0) {
    throw std::logic_error(std::string("exact division failed in ") + what);
  }
  return num / den;
}

}  // namespace

Natural count_formula(const FamilyParams& params) {
  params.validate();
  const std::int64_t kn = params.length();
  const std::int64_t up = params.upsteps();
  const Natural difference =
      (params.k - 1) * binomial(kn - 1, up - 1) - binomial(kn - 1, up);
  const Natural quotient =
      exact_div(params.j * binomial(kn, up), params.n, "count_formula");
  if (difference != quotient) {
    throw std::logic_error("count_formula: binomial difference != quotient form");
  }
  return difference;
}

std::vector<std::pair<std::int64_t, Natural>> sequence(std::int64_t k, std::int64_t j,
                                                       std::int64_t n_max) {
  if (k < 2 || j < 1) throw std::invalid_argument("sequence: need k >= 2 and j >= 1");
  std::vector<std::pair<std::int64_t, Natural>> out;
  // least n with (k-1)n >= j
  const std::int64_t n0 = (j + k - 2) / (k - 1);
  for (std::int64_t n = n0; n <= n_max; ++n) {
    out.emplace_back(n, count_formula({n, k, j}));
  }
  return out;
}

void GeneralParams::validate() const {
  if (a < 2 || b < 0 || c < 1 || d < 1 || n < 1) {
    throw std::invalid_argument("GeneralParams: need a >= 2, b >= 0, c >= 1, d >= 1, n >= 1");
  }
  if (a * d - b * c <= 0) {
    throw std::invalid_argument("GeneralParams: need ad - bc > 0");
  }
  if (a * n + b < c * n + d) {
    throw std::invalid_argument("GeneralParams: need an+b >= cn+d");
  }
}

Natural unified_formula(const GeneralParams& g) {
  g.validate();
  const std::int64_t top = g.a * g.n + g.b;
  const std::int64_t bottom = g.c * g.n + g.d;
  const Natural difference =
      (g.a - g.c) * binomial(top - 1, bottom - 1) - g.c * binomial(top - 1, bottom);
  const Natural quotient =
      exact_div((g.a * g.d - g.b * g.c) * binomial(top, bottom), top, "unified_formula");
  if (difference != quotient) {
    throw std::logic_error("unified_formula: binomial difference != quotient form");
  }
  return difference;
}

Natural count_general_a(std::int64_t a, std::int64_t c, std::int64_t d, std::int64_t n) {
  return unified_formula({a, 0, c, d, n});
}

Natural count_ne(std::int64_t n, std::int64_t k, std::int64_t j) {
  if (k < 2 || j < 1 || n < 1) {
    throw std::invalid_argument("count_ne: need n >= 1, k >= 2, j >= 1");
  }
  const std::int64_t total = k * n + j;
  return exact_div(j * binomial(total, n), total, "count_ne");
}

}  // namespace pathstat
