#include "pathstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pathstat/geometry.hpp"
#include "pathstat/ne_paths.hpp"
#include "pathstat/rotation.hpp"

namespace pathstat {

namespace {

using Clock = std::chrono::steady_clock;

std::string to_string(const Natural& v) { return v.str(); }

nlohmann::json family_json(const FamilyParams& p) {
  return {{"n", p.n}, {"k", p.k}, {"j", p.j}};
}

void check_budget(const Natural& size, const VerifyOptions& opts) {
  if (size > opts.budget) {
    throw std::invalid_argument("enumeration budget exceeded: family size " + size.str() +
                                " > budget " + opts.budget.str());
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [0, total) into consecutive rank ranges and maps fn over them,
// one worker per range. Results come back in rank order, so merging is
// deterministic regardless of thread count.
template <class Partial>
std::vector<Partial> map_rank_chunks(
    const FamilyParams& params, int threads,
    const std::function<Partial(const Natural&, const Natural&)>& fn) {
  const Natural total = family_size(params);
  int want = resolve_threads(threads);
  if (total < 4096) want = 1;

  std::vector<std::pair<Natural, Natural>> ranges;
  const Natural chunk = total / want;
  const Natural rem = total % want;
  Natural lo = 0;
  for (int i = 0; i < want; ++i) {
    Natural hi = lo + chunk + (Natural(i) < rem ? 1 : 0);
    if (hi > lo) ranges.emplace_back(lo, hi);
    lo = hi;
  }

  std::vector<Partial> partials(ranges.size());
  if (ranges.size() <= 1) {
    if (!ranges.empty()) partials[0] = fn(ranges[0].first, ranges[0].second);
    return partials;
  }
  std::vector<std::thread> workers;
  workers.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    workers.emplace_back([&, i] { partials[i] = fn(ranges[i].first, ranges[i].second); });
  }
  for (auto& w : workers) w.join();
  return partials;
}

// Witness accumulator with an exact total and a capped list.
struct WitnessLog {
  std::vector<Witness> list;
  std::uint64_t count{0};

  void add(Witness w) {
    ++count;
    if (list.size() < VerificationReport::kMaxWitnesses) list.push_back(std::move(w));
  }
  void merge(const WitnessLog& other) {
    count += other.count;
    for (const Witness& w : other.list) {
      if (list.size() >= VerificationReport::kMaxWitnesses) break;
      list.push_back(w);
    }
  }
};

void finish(VerificationReport& report, const Clock::time_point& start, WitnessLog log) {
  report.failures = std::move(log.list);
  report.failure_count = log.count;
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

void VerificationReport::add_failure(Witness w) {
  ++failure_count;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(w));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["params"] = params;
  out["cases"] = cases;
  if (bins) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Natural& b : *bins) arr.push_back(b.str());
    out["bins"] = arr;
  }
  nlohmann::json fails = nlohmann::json::array();
  for (const Witness& w : failures) {
    fails.push_back({{"path", w.path}, {"mark", w.mark}, {"expected", w.expected},
                     {"actual", w.actual}});
  }
  out["failures"] = fails;
  out["failure_count"] = failure_count;
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << " (cases " << cases;
  if (!passed()) out << ", failures " << failure_count;
  out << ", " << elapsed_ms << " ms)\n";
  out << "  params: " << params.dump() << "\n";
  if (bins) {
    out << "  bins:";
    for (const Natural& b : *bins) out << ' ' << b.str();
    out << "\n";
  }
  for (const Witness& w : failures) {
    out << "  witness: path=" << w.path << " mark=" << w.mark << " expected=" << w.expected
        << " actual=" << w.actual << "\n";
  }
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "suite,params,cases,failure_count,passed,bins,elapsed_ms\n";
  out << suite << ",\"" << params.dump() << "\"," << cases << ',' << failure_count << ','
      << (passed() ? 1 : 0) << ",\"";
  if (bins) {
    for (std::size_t i = 0; i < bins->size(); ++i) {
      if (i) out << ';';
      out << (*bins)[i].str();
    }
  }
  out << "\"," << elapsed_ms << "\n";
  for (const Witness& w : failures) {
    out << "witness," << w.path << ',' << w.mark << ",\"" << w.expected << "\",\"" << w.actual
        << "\",,\n";
  }
  return out.str();
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
  const auto key = [](const VerificationReport& r) {
    nlohmann::json j = r.to_json();
    j.erase("elapsed_ms");
    return j;
  };
  return key(*this) == key(other);
}

VerificationReport verify_uniform(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "uniform";
  report.params = family_json(params);

  struct Partial {
    std::vector<std::uint64_t> bins;
    std::uint64_t cases{0};
  };
  const auto labels = interior_kdiv_labels(params);
  const std::size_t n = static_cast<std::size_t>(params.n);
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        part.bins.assign(n, 0);
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          const auto h = p.heights();
          for (std::int64_t m = 1; m <= params.j; ++m) {
            const Baseline b = shifted_baseline(params, m - 1);
            std::int64_t x_stat = 0;
            for (std::int64_t x : labels) {
              if (side_of_baseline(b, x, h[static_cast<std::size_t>(x)]) == Side::Above) {
                ++x_stat;
              }
            }
            ++part.bins[static_cast<std::size_t>(x_stat)];
            ++part.cases;
          }
        }
        return part;
      });

  std::vector<Natural> bins(n, 0);
  WitnessLog log;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    for (std::size_t v = 0; v < n; ++v) bins[v] += part.bins[v];
  }
  const Natural expected = count_formula(params);
  for (std::size_t v = 0; v < n; ++v) {
    if (bins[v] != expected) {
      log.add({"bin " + std::to_string(v), 0, expected.str(), bins[v].str()});
    }
  }
  report.bins = std::move(bins);
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_lemma(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "lemma";
  report.params = family_json(params);

  struct Partial {
    WitnessLog log;
    std::uint64_t cases{0};
  };
  const auto labels = interior_kdiv_labels(params);
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          const auto h = p.heights();
          for (std::int64_t m = 1; m <= params.j; ++m) {
            const Baseline b = shifted_baseline(params, m - 1);
            ++part.cases;
            for (std::int64_t x : labels) {
              if (side_of_baseline(b, x, h[static_cast<std::size_t>(x)]) == Side::On) {
                part.log.add({p.render(), m, "no interior k-divisible point ON",
                              "ON at x=" + std::to_string(x)});
              }
            }
          }
        }
        return part;
      });

  WitnessLog log;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    log.merge(part.log);
  }
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_corollary(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  if (params.j != 1) throw std::invalid_argument("verify_corollary: requires j = 1");
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "corollary";
  report.params = family_json(params);

  struct Partial {
    std::uint64_t hits{0};
    std::uint64_t cases{0};
  };
  const auto labels = interior_kdiv_labels(params);
  const Baseline b = shifted_baseline(params, 0);
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          ++part.cases;
          if (all_labels_above(p.heights(), labels, b)) ++part.hits;
        }
        return part;
      });

  Natural hits = 0;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    hits += part.hits;
  }
  WitnessLog log;
  const Natural expected = count_formula(params);
  if (hits != expected) {
    log.add({"#{X = n-1}", 0, expected.str(), hits.str()});
  }
  report.bins = std::vector<Natural>{hits};
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_main(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "main";
  report.params = family_json(params);

  struct Partial {
    std::vector<std::uint64_t> shift_counts;
    std::uint64_t cases{0};
  };
  const auto labels = interior_kdiv_labels(params);
  const std::size_t shifts = static_cast<std::size_t>(params.j + 2);
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        part.shift_counts.assign(shifts, 0);
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          ++part.cases;
          const auto h = p.heights();
          for (std::size_t i = 0; i < shifts; ++i) {
            const Baseline b = shifted_baseline(params, static_cast<std::int64_t>(i));
            // A marked path's terminal point sits weakly above its baseline
            // (on it exactly at mark j), so the shifted framing must keep
            // the terminal point weakly above; interior-only tests admit
            // extra paths at shifts >= j, e.g. UUUDDD at shift 1 in the
            // n=3, k=3, j=1 family.
            if (all_labels_above(h, labels, b) &&
                side_of_baseline(b, params.length(), h.back()) != Side::Below) {
              ++part.shift_counts[i];
            }
          }
        }
        return part;
      });

  std::vector<Natural> counts(shifts, 0);
  for (const Partial& part : partials) {
    report.cases += part.cases;
    for (std::size_t i = 0; i < shifts; ++i) counts[i] += part.shift_counts[i];
  }
  WitnessLog log;
  const Natural expected = count_formula(params);
  Natural total = 0;
  for (std::int64_t i = 0; i < params.j; ++i) total += counts[static_cast<std::size_t>(i)];
  if (total != expected) {
    log.add({"sum over shifts 0..j-1", 0, expected.str(), total.str()});
  }
  for (std::size_t i = static_cast<std::size_t>(params.j); i < shifts; ++i) {
    if (counts[i] != 0) {
      log.add({"shift " + std::to_string(i), 0, "0", counts[i].str()});
    }
  }
  report.bins = std::move(counts);
  finish(report, start, std::move(log));
  return report;
}

namespace {

// True iff no rotation of the path precedes it lexicographically, i.e. the
// path is its orbit's canonical representative.
bool is_canonical(const DiagonalPath& path, const FamilyParams& params) {
  const auto& steps = path.steps();
  const std::int64_t len = path.size();
  for (std::int64_t off = params.k; off < len; off += params.k) {
    for (std::int64_t t = 0; t < len; ++t) {
      const Step a = steps[static_cast<std::size_t>((t + off) % len)];
      const Step b = steps[static_cast<std::size_t>(t)];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

VerificationReport verify_orbits(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "orbits";
  report.params = family_json(params);

  struct Partial {
    Natural classes{0};
    Natural size_sum{0};
    WitnessLog log;
    std::uint64_t cases{0};
  };
  const std::int64_t g = std::gcd(params.n, params.j);
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          ++part.cases;
          if (!is_canonical(p, params)) continue;
          const auto decomposition = primitive_decomposition(p, params);
          const RotationClass cls = orbit(p, params);
          ++part.classes;
          part.size_sum += static_cast<std::int64_t>(cls.paths.size());
          if (static_cast<std::int64_t>(cls.paths.size()) != params.n / decomposition.power) {
            part.log.add({p.render(), 0, "orbit size n/r = " +
                              std::to_string(params.n / decomposition.power),
                          std::to_string(cls.paths.size())});
          }
          if (g % decomposition.power != 0) {
            part.log.add({p.render(), 0, "r | gcd(n, j)",
                          "r = " + std::to_string(decomposition.power)});
          }
        }
        return part;
      });

  Natural classes = 0;
  Natural size_sum = 0;
  WitnessLog log;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    classes += part.classes;
    size_sum += part.size_sum;
    log.merge(part.log);
  }
  const Natural expected = family_size(params);
  if (size_sum != expected) {
    log.add({"sum of orbit sizes", 0, expected.str(), size_sum.str()});
  }
  report.bins = std::vector<Natural>{classes, size_sum};
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_labels(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "labels";
  report.params = family_json(params);

  struct Partial {
    WitnessLog log;
    std::uint64_t cases{0};
  };
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        PathEnumerator paths(params, lo, hi);
        DiagonalPath p;
        while (paths.next(p)) {
          if (!is_canonical(p, params)) continue;
          const RotationClass cls = orbit(p, params);
          const std::int64_t r = params.n / static_cast<std::int64_t>(cls.paths.size());
          const LabeledClass labeled = label_class(cls);
          std::vector<std::int64_t> uses(static_cast<std::size_t>(params.n), 0);
          for (std::size_t t = 0; t < cls.paths.size(); ++t) {
            for (std::int64_t m = 1; m <= params.j; ++m) {
              ++part.cases;
              const std::int64_t label = labeled.labels[t][static_cast<std::size_t>(m - 1)];
              ++uses[static_cast<std::size_t>(label)];
              const std::int64_t x_stat = statistic_x({cls.paths[t], m}, params);
              if (x_stat != label) {
                part.log.add({cls.paths[t].render(), m, "X = label " + std::to_string(label),
                              "X = " + std::to_string(x_stat)});
              }
            }
          }
          for (std::int64_t v = 0; v < params.n; ++v) {
            if (uses[static_cast<std::size_t>(v)] != params.j / r) {
              part.log.add({p.render(), 0,
                            "label " + std::to_string(v) + " used j/r = " +
                                std::to_string(params.j / r) + " times",
                            std::to_string(uses[static_cast<std::size_t>(v)])});
            }
          }
        }
        return part;
      });

  WitnessLog log;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    log.merge(part.log);
  }
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_bijection(const FamilyParams& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  params.validate();
  if (params.j != 1) throw std::invalid_argument("verify_bijection: requires j = 1");
  check_budget(family_size(params), opts);

  VerificationReport report;
  report.suite = "bijection";
  report.params = family_json(params);

  struct Partial {
    WitnessLog log;
    std::uint64_t cases{0};
  };
  const auto partials = map_rank_chunks<Partial>(
      params, opts.threads, [&](const Natural& lo, const Natural& hi) {
        Partial part;
        PathEnumerator paths(params, lo, hi);
        DiagonalPath q;
        while (paths.next(q)) {
          ++part.cases;
          const std::int64_t x_q = statistic_x({q, 1}, params);
          const DiagonalPath p = bijection_inverse(q, params);
          if (statistic_x({p, 1}, params) != params.n - 1) {
            part.log.add({q.render(), 1, "bijection_inverse lands in {X = n-1}",
                          "X = " + std::to_string(statistic_x({p, 1}, params))});
            continue;
          }
          const DiagonalPath back = bijection_to(p, params, x_q);
          if (back != q) {
            part.log.add({q.render(), 1, "bijection_to(inverse(q), X(q)) = q", back.render()});
          }
        }
        return part;
      });

  WitnessLog log;
  for (const Partial& part : partials) {
    report.cases += part.cases;
    log.merge(part.log);
  }
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_integrality(std::int64_t n_max, std::int64_t k_max,
                                      std::int64_t unified_n_max, const VerifyOptions&) {
  const auto start = Clock::now();
  VerificationReport report;
  report.suite = "integrality";
  report.params = {{"n_max", n_max}, {"k_max", k_max}, {"unified_n_max", unified_n_max}};

  WitnessLog log;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 2; k <= k_max; ++k) {
      for (std::int64_t j = 1; j <= (k - 1) * n; ++j) {
        ++report.cases;
        try {
          count_formula({n, k, j});
        } catch (const std::logic_error& e) {
          log.add({"(n,k,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(j) + ")",
                   0, "exact identity", e.what()});
        }
      }
    }
  }
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (std::int64_t b = 0; b <= 3; ++b) {
      for (std::int64_t c = 1; c <= 3; ++c) {
        for (std::int64_t d = 1; d <= 4; ++d) {
          if (a * d - b * c <= 0) continue;
          for (std::int64_t n = 1; n <= unified_n_max; ++n) {
            if (a * n + b < c * n + d) continue;
            ++report.cases;
            try {
              unified_formula({a, b, c, d, n});
            } catch (const std::logic_error& e) {
              log.add({"(a,b,c,d,n)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + "," + std::to_string(d) + "," + std::to_string(n) +
                           ")",
                       0, "exact unified identity", e.what()});
            }
          }
        }
      }
    }
  }
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_general_a(std::int64_t a, std::int64_t c, std::int64_t d,
                                    std::int64_t n, const VerifyOptions& opts) {
  const auto start = Clock::now();
  const GeneralParams g{a, 0, c, d, n};
  g.validate();
  check_budget(binomial(a * n, c * n + d), opts);

  VerificationReport report;
  report.suite = "general-a";
  report.params = {{"a", a}, {"c", c}, {"d", d}, {"n", n}};

  std::vector<std::int64_t> labels;
  for (std::int64_t i = 1; i < n; ++i) labels.push_back(i * a);

  std::vector<Natural> counts(static_cast<std::size_t>(d), 0);
  PathEnumerator paths(a * n, c * n + d);
  DiagonalPath p;
  while (paths.next(p)) {
    ++report.cases;
    const auto h = p.heights();
    for (std::int64_t i = 0; i < d; ++i) {
      const Baseline b{-((a - 2 * c) * n - 2), a * n, 2 * i};
      if (all_labels_above(h, labels, b)) ++counts[static_cast<std::size_t>(i)];
    }
  }

  WitnessLog log;
  const Natural expected = count_general_a(a, c, d, n);
  const Natural total = std::accumulate(counts.begin(), counts.end(), Natural(0));
  if (total != expected) {
    log.add({"sum over shifts 0..d-1", 0, expected.str(), total.str()});
  }
  report.bins = std::move(counts);
  finish(report, start, std::move(log));
  return report;
}

VerificationReport verify_general_b(std::int64_t n, std::int64_t k, std::int64_t j,
                                    const VerifyOptions& opts) {
  const auto start = Clock::now();
  if (n < 1 || k < 2 || j < 1) {
    throw std::invalid_argument("verify_general_b: need n >= 1, k >= 2, j >= 1");
  }
  const std::int64_t total_steps = k * n + j;
  check_budget(binomial(total_steps, n), opts);

  VerificationReport report;
  report.suite = "general-b";
  report.params = {{"n", n}, {"k", k}, {"j", j}};

  std::vector<Natural> hist(static_cast<std::size_t>(total_steps), 0);
  std::vector<NEPath> image;
  NEEnumerator family(n, (k - 1) * n + j);
  NEPath p;
  WitnessLog log;
  while (family.next(p)) {
    const auto hp = high_points(p, j, k);
    for (std::int64_t m = 1; m <= j; ++m) {
      ++report.cases;
      const std::int64_t x = hp[static_cast<std::size_t>(m - 1)];
      if (x < 1 || x > total_steps) {
        log.add({p.render(), m, "X in [1, kn+j]", std::to_string(x)});
        continue;
      }
      ++hist[static_cast<std::size_t>(x - 1)];
      if (x == total_steps) image.push_back(ne_final_bijection({p, m}, n, k, j));
    }
  }

  const Natural expected = count_ne(n, k, j);
  for (std::size_t v = 0; v < hist.size(); ++v) {
    if (hist[v] != expected) {
      log.add({"bin " + std::to_string(v + 1), 0, expected.str(), hist[v].str()});
    }
  }

  // image must equal the weakly-above family, as sets
  std::vector<NEPath> target;
  {
    NEEnumerator above(n, (k - 1) * n + j - 1);
    NEPath q;
    while (above.next(q)) {
      if (weakly_above(q, k)) target.push_back(q);
    }
  }
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    log.add({"bijection image", 0, "injective", "duplicate image path"});
  }
  if (image != target) {
    log.add({"bijection image", 0,
             "set equals weakly-above family (" + std::to_string(target.size()) + " paths)",
             std::to_string(image.size()) + " paths"});
  }
  if (weakly_above_count(n, k, j) != expected) {
    log.add({"weakly-above count", 0, expected.str(), weakly_above_count(n, k, j).str()});
  }

  report.bins = std::move(hist);
  finish(report, start, std::move(log));
  return report;
}

std::vector<VerificationReport> verify_all(const FamilyParams& params,
                                           const VerifyOptions& opts) {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_uniform(params, opts));
  reports.push_back(verify_lemma(params, opts));
  reports.push_back(verify_orbits(params, opts));
  reports.push_back(verify_labels(params, opts));
  reports.push_back(verify_main(params, opts));
  if (params.j == 1) {
    reports.push_back(verify_corollary(params, opts));
    reports.push_back(verify_bijection(params, opts));
  }
  reports.push_back(verify_general_b(params.n, params.k, params.j, opts));
  reports.push_back(verify_integrality(12, 5, 10, opts));
  return reports;
}

}  // namespace pathstat
