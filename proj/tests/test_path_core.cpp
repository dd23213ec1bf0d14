#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathstat/counting.hpp"
#include "pathstat/path_core.hpp"

using pathstat::DiagonalPath;
using pathstat::FamilyParams;
using pathstat::Natural;
using pathstat::PathEnumerator;

namespace {

// Independent prefix-sum oracle for height profiles.
std::vector<std::int64_t> heights_oracle(const std::string& text) {
  std::vector<std::int64_t> h{0};
  for (char c : text) h.push_back(h.back() + (c == 'U' ? 1 : -1));
  return h;
}

std::vector<DiagonalPath> collect(const FamilyParams& params) {
  std::vector<DiagonalPath> out;
  PathEnumerator paths(params);
  DiagonalPath p;
  while (paths.next(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(DiagonalPath::parse("UU").render() == "UU");
  CHECK(DiagonalPath::parse("UDDUDUUUDDDDDUD").size() == 15);
  CHECK_THROWS_AS(DiagonalPath::parse("UX"), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalPath::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalPath::parse("ud"), std::invalid_argument);
}

TEST_CASE("validate_family") {
  CHECK(pathstat::validate_family(DiagonalPath::parse("UDDUDUUUDDDDDUD"), {5, 3, 1}));
  CHECK(pathstat::validate_family(DiagonalPath::parse("UUUU"), {2, 2, 2}));
  CHECK_FALSE(pathstat::validate_family(DiagonalPath::parse("UUUU"), {2, 2, 1}));
  CHECK_FALSE(pathstat::validate_family(DiagonalPath::parse("UU"), {5, 3, 1}));
}

TEST_CASE("heights") {
  CHECK(DiagonalPath::parse("UU").heights() == std::vector<std::int64_t>{0, 1, 2});
  CHECK(DiagonalPath::parse("UDDUDUUUDDDDDUD").heights() ==
        std::vector<std::int64_t>{0, 1, 0, -1, 0, -1, 0, 1, 2, 1, 0, -1, -2, -3, -2, -3});
  CHECK(DiagonalPath::parse("UDUUUDDDDDUDUDD").heights() ==
        std::vector<std::int64_t>{0, 1, 0, 1, 2, 3, 2, 1, 0, -1, -2, -1, -2, -1, -2, -3});
}

TEST_CASE("heights match prefix-sum oracle") {
  for (const auto& p : collect({3, 3, 2})) {
    CHECK(p.heights() == heights_oracle(p.render()));
  }
}

TEST_CASE("enumeration") {
  const auto tiny = collect({1, 2, 1});
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].render() == "UU");

  const auto small = collect({3, 2, 1});
  REQUIRE(small.size() == 15);
  CHECK(small.front().render() == "UUUUDD");
  CHECK(small.back().render() == "DDUUUU");
  for (std::size_t i = 1; i < small.size(); ++i) CHECK(small[i - 1] < small[i]);

  CHECK(collect({2, 3, 1}).size() == 20);
}

TEST_CASE("enumeration count equals C(kn, n+j) on a grid") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t k = 2; k <= 3; ++k) {
      for (std::int64_t j = 1; j <= (k - 1) * n && j <= 3; ++j) {
        const FamilyParams params{n, k, j};
        CHECK(Natural(collect(params).size()) == pathstat::family_size(params));
      }
    }
  }
}

TEST_CASE("terminal height is 2(n+j) - kn") {
  const FamilyParams params{3, 3, 2};
  for (const auto& p : collect(params)) {
    CHECK(p.heights().back() == 2 * params.upsteps() - params.length());
  }
}

TEST_CASE("rank and unrank") {
  const FamilyParams params{3, 2, 1};
  CHECK(pathstat::rank(DiagonalPath::parse("UUUUDD")) == 0);
  CHECK(pathstat::unrank(14, params).render() == "DDUUUU");
  CHECK_THROWS_AS(pathstat::unrank(15, params), std::out_of_range);

  const auto all = collect(params);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(pathstat::rank(all[i]) == i);
    CHECK(pathstat::unrank(Natural(i), params) == all[i]);
  }
}

TEST_CASE("rank respects enumeration order on a larger family") {
  const FamilyParams params{3, 3, 2};
  const auto all = collect(params);
  REQUIRE(Natural(all.size()) == pathstat::family_size(params));
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(pathstat::rank(all[i]) == i);
  }
}

TEST_CASE("ranged enumeration partitions the family") {
  const FamilyParams params{4, 2, 2};
  const auto all = collect(params);
  std::vector<DiagonalPath> pieced;
  const Natural total = pathstat::family_size(params);
  for (Natural lo = 0; lo < total; lo += 7) {
    Natural hi = lo + 7;
    if (hi > total) hi = total;
    PathEnumerator chunk(params, lo, hi);
    DiagonalPath p;
    while (chunk.next(p)) pieced.push_back(p);
  }
  CHECK(pieced == all);
}

TEST_CASE("rotated") {
  const auto p = DiagonalPath::parse("UDDU");
  CHECK(p.rotated(1).render() == "DDUU");
  CHECK(p.rotated(4).render() == "UDDU");
  CHECK(p.rotated(0) == p);
}

TEST_CASE("family params validation") {
  CHECK_THROWS_AS((FamilyParams{0, 2, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilyParams{3, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilyParams{1, 2, 2}.validate()), std::invalid_argument);  // (k-1)n < j
  CHECK_NOTHROW((FamilyParams{1, 2, 1}.validate()));
}
