#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathstat/bigint.hpp"
#include "pathstat/counting.hpp"
#include "pathstat/path_core.hpp"

namespace pathstat {

/// A counterexample: the offending path (text form), its mark, and the
/// expected/actual values as strings.
struct Witness {
  std::string path;
  std::int64_t mark{0};
  std::string expected;
  std::string actual;
};

/// Structured outcome of one verification suite. failures empty iff pass;
/// the list is capped at kMaxWitnesses, failure_count carries the full
/// total.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 20;

  std::string suite;
  nlohmann::json params;
  std::uint64_t cases{0};
  std::optional<std::vector<Natural>> bins;
  std::vector<Witness> failures;
  std::uint64_t failure_count{0};
  std::int64_t elapsed_ms{0};

  bool passed() const { return failure_count == 0; }
  void add_failure(Witness w);

  nlohmann::json to_json() const;
  std::string to_text() const;
  std::string to_csv() const;

  /// Equality modulo elapsed_ms, for determinism checks.
  bool same_outcome(const VerificationReport& other) const;
};

struct VerifyOptions {
  Natural budget{1000000};
  int threads{0};  // 0 = hardware concurrency, 1 = serial
};

/// Uniformity: the X-histogram over P(n,k,j) x [j] is flat with bin value
/// j*C(kn, n+j)/n.
VerificationReport verify_uniform(const FamilyParams& params, const VerifyOptions& opts = {});

/// Non-incidence: no interior k-divisible point ever lies ON a baseline.
VerificationReport verify_lemma(const FamilyParams& params, const VerifyOptions& opts = {});

/// j = 1 specialization: #{X = n-1} = (1/n)C(kn, n+1).
VerificationReport verify_corollary(const FamilyParams& params, const VerifyOptions& opts = {});

/// Shifted framing: per-shift counts for i = 0..j-1 sum to (j/n)C(kn, n+j),
/// and the counts at shifts j and j+1 are zero.
VerificationReport verify_main(const FamilyParams& params, const VerifyOptions& opts = {});

/// Orbit sizes are n/r with r | gcd(n, j) and partition C(kn, n+j).
VerificationReport verify_orbits(const FamilyParams& params, const VerifyOptions& opts = {});

/// Endpoint labeling: each label 0..n-1 used j/r times per class and
/// statistic_x(object) = label for every object.
VerificationReport verify_labels(const FamilyParams& params, const VerifyOptions& opts = {});

/// j = 1 bijection roundtrip: bijection_to(bijection_inverse(q), X(q)) = q
/// and bijection_inverse lands in {X = n-1}, over the whole family.
VerificationReport verify_bijection(const FamilyParams& params, const VerifyOptions& opts = {});

/// Integrality sweep: count_formula over n <= n_max, k <= k_max,
/// j <= (k-1)n, and the unified identity over a <= 5, b <= 3, c <= 3,
/// d <= 4, n <= unified_n_max where ad - bc > 0.
VerificationReport verify_integrality(std::int64_t n_max = 12, std::int64_t k_max = 5,
                                      std::int64_t unified_n_max = 10,
                                      const VerifyOptions& opts = {});

/// Generalization with b = 0: enumeration against (d/n)C(an, cn+d).
VerificationReport verify_general_a(std::int64_t a, std::int64_t c, std::int64_t d,
                                    std::int64_t n, const VerifyOptions& opts = {});

/// NE generalization: uniform marked statistic over {1..kn+j}, bijection
/// image equals the weakly-above family, enumerated count equals
/// (j/(kn+j))C(kn+j, n).
VerificationReport verify_general_b(std::int64_t n, std::int64_t k, std::int64_t j,
                                    const VerifyOptions& opts = {});

/// Every family suite applicable to the given params (plus bijection and
/// corollary when j = 1, and the NE generalization).
std::vector<VerificationReport> verify_all(const FamilyParams& params,
                                           const VerifyOptions& opts = {});

}  // namespace pathstat
