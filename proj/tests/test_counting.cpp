#include <doctest.h>

#include <cstdint>
#include <vector>

#include "pathstat/counting.hpp"

using pathstat::Natural;

namespace {

// Independent oracle: Pascal's triangle by pure addition.
Natural pascal(std::int64_t m, std::int64_t r) {
  if (r < 0 || r > m) return 0;
  std::vector<Natural> row{1};
  for (std::int64_t i = 1; i <= m; ++i) {
    std::vector<Natural> next(static_cast<std::size_t>(i) + 1, 1);
    for (std::int64_t t = 1; t < i; ++t) {
      next[static_cast<std::size_t>(t)] =
          row[static_cast<std::size_t>(t - 1)] + row[static_cast<std::size_t>(t)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(pathstat::binomial(6, 4) == 15);
  CHECK(pathstat::binomial(15, 6) == 5005);
  CHECK(pathstat::binomial(0, 0) == 1);
  CHECK(pathstat::binomial(7, 0) == 1);
  CHECK(pathstat::binomial(5, -1) == 0);
  CHECK(pathstat::binomial(5, 6) == 0);
}

TEST_CASE("binomial agrees with Pascal triangle") {
  for (std::int64_t m = 0; m <= 30; ++m) {
    for (std::int64_t r = 0; r <= m; ++r) {
      CHECK(pathstat::binomial(m, r) == pascal(m, r));
    }
  }
  CHECK(pathstat::binomial(64, 32) == pascal(64, 32));
}

TEST_CASE("count_formula values") {
  CHECK(pathstat::count_formula({3, 2, 1}) == 5);
  CHECK(pathstat::count_formula({5, 3, 1}) == 1001);
  CHECK(pathstat::count_formula({4, 3, 3}) == 594);
}

TEST_CASE("sequences") {
  const std::vector<std::int64_t> catalan{1, 2, 5, 14, 42, 132, 429};
  auto seq = pathstat::sequence(2, 1, 7);
  REQUIRE(seq.size() == catalan.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].first == static_cast<std::int64_t>(i) + 1);
    CHECK(seq[i].second == catalan[i]);
  }

  const std::vector<std::int64_t> k3{3, 10, 42, 198};
  auto seq3 = pathstat::sequence(3, 1, 4);
  REQUIRE(seq3.size() == k3.size());
  for (std::size_t i = 0; i < seq3.size(); ++i) CHECK(seq3[i].second == k3[i]);

  const std::vector<std::int64_t> k4{6, 28, 165};
  auto seq4 = pathstat::sequence(4, 1, 3);
  REQUIRE(seq4.size() == k4.size());
  for (std::size_t i = 0; i < seq4.size(); ++i) CHECK(seq4[i].second == k4[i]);
}

TEST_CASE("sequence starts at the least valid n") {
  // j = 3, k = 2 needs n >= 3
  auto seq = pathstat::sequence(2, 3, 4);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].first == 3);
  CHECK(seq[1].first == 4);
}

TEST_CASE("unified formula") {
  CHECK(pathstat::unified_formula({2, 0, 1, 1, 3}) == 5);
  CHECK(pathstat::unified_formula({2, 1, 1, 1, 3}) == 5);  // (1/7)C(7,4)
  CHECK(pathstat::unified_formula({3, 0, 1, 2, 2}) == 15);
  CHECK_THROWS_AS((void)pathstat::unified_formula({2, 3, 2, 1, 3}), std::invalid_argument);
}

TEST_CASE("count_general_a") {
  CHECK(pathstat::count_general_a(2, 1, 1, 3) == 5);
  CHECK(pathstat::count_general_a(3, 1, 2, 2) == 15);
  CHECK(pathstat::count_general_a(4, 1, 2, 1) == 8);
}

TEST_CASE("count_ne") {
  CHECK(pathstat::count_ne(1, 2, 2) == 2);
  CHECK(pathstat::count_ne(2, 2, 1) == 2);
  CHECK(pathstat::count_ne(3, 2, 1) == 5);
}

TEST_CASE("unified specializes to count_formula") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t j = 1; j <= (k - 1) * n && j <= 4; ++j) {
        CHECK(pathstat::unified_formula({k, 0, 1, j, n}) == pathstat::count_formula({n, k, j}));
      }
    }
  }
}

TEST_CASE("Catalan three ways") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    CHECK(pathstat::count_ne(n, 2, 1) == pathstat::count_formula({n, 2, 1}));
  }
}

TEST_CASE("integrality sweep") {
  // count_formula and unified_formula self-check divisibility internally
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 2; k <= 5; ++k) {
      for (std::int64_t j = 1; j <= (k - 1) * n; ++j) {
        CHECK_NOTHROW((void)pathstat::count_formula({n, k, j}));
      }
    }
  }
}
