// pathstat: exact counting and exhaustive verification of diagonal-path
// families, their uniform baseline statistic, and the NE-path variant.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathstat/counting.hpp"
#include "pathstat/geometry.hpp"
#include "pathstat/ne_paths.hpp"
#include "pathstat/path_core.hpp"
#include "pathstat/rotation.hpp"
#include "pathstat/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct VerifyArgs {
  std::string suite;
  std::int64_t n{0}, k{0}, j{0};
  std::int64_t a{0}, c{0}, d{0};
  std::int64_t budget{1000000};
  int threads{0};
  std::string format{"text"};
};

void print_report(const pathstat::VerificationReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << report.to_csv();
  } else {
    std::cout << report.to_text();
  }
}

int run_verify(const VerifyArgs& args) {
  pathstat::VerifyOptions opts;
  opts.budget = args.budget;
  opts.threads = args.threads;
  const pathstat::FamilyParams family{args.n, args.k, args.j};

  std::vector<pathstat::VerificationReport> reports;
  if (args.suite == "uniform") {
    reports.push_back(pathstat::verify_uniform(family, opts));
  } else if (args.suite == "lemma") {
    reports.push_back(pathstat::verify_lemma(family, opts));
  } else if (args.suite == "orbits") {
    reports.push_back(pathstat::verify_orbits(family, opts));
  } else if (args.suite == "labels") {
    reports.push_back(pathstat::verify_labels(family, opts));
  } else if (args.suite == "bijection") {
    reports.push_back(pathstat::verify_bijection(family, opts));
  } else if (args.suite == "corollary") {
    reports.push_back(pathstat::verify_corollary(family, opts));
  } else if (args.suite == "main") {
    reports.push_back(pathstat::verify_main(family, opts));
  } else if (args.suite == "general-a") {
    reports.push_back(pathstat::verify_general_a(args.a, args.c, args.d, args.n, opts));
  } else if (args.suite == "general-b") {
    reports.push_back(pathstat::verify_general_b(args.n, args.k, args.j, opts));
  } else if (args.suite == "integrality") {
    reports.push_back(pathstat::verify_integrality(12, 5, 10, opts));
  } else if (args.suite == "all") {
    reports = pathstat::verify_all(family, opts);
  } else {
    throw std::invalid_argument("unknown suite '" + args.suite + "'");
  }

  bool all_passed = true;
  for (const auto& report : reports) {
    print_report(report, args.format);
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and exhaustive verification of lattice path statistics"};
  app.require_subcommand(1);

  // count
  std::int64_t n = 0, k = 0, j = 0;
  auto* count = app.add_subcommand("count", "Print (j/n)C(kn, n+j)");
  count->add_option("--n", n)->required();
  count->add_option("--k", k)->required();
  count->add_option("--j", j)->required();

  // count-general
  std::int64_t ga = 0, gb = 0, gc = 0, gd = 0, gn = 0;
  auto* count_general =
      app.add_subcommand("count-general", "Print (ad-bc)/(an+b) C(an+b, cn+d)");
  count_general->add_option("--a", ga)->required();
  count_general->add_option("--b", gb)->required();
  count_general->add_option("--c", gc)->required();
  count_general->add_option("--d", gd)->required();
  count_general->add_option("--n", gn)->required();

  // seq
  std::int64_t n_max = 0;
  bool bfile = false;
  auto* seq = app.add_subcommand("seq", "Emit the sequence (j/n)C(kn, n+j) up to n-max");
  seq->add_option("--k", k)->required();
  seq->add_option("--j", j)->required();
  seq->add_option("--n-max", n_max)->required();
  seq->add_flag("--bfile", bfile, "OEIS b-file format: 'n value' per line");

  // enumerate
  std::int64_t limit = -1;
  auto* enumerate = app.add_subcommand("enumerate", "List family paths in lexicographic order");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--j", j)->required();
  enumerate->add_option("--limit", limit, "Stop after this many paths");

  // stat
  std::string path_text;
  std::int64_t mark = 1;
  auto* stat = app.add_subcommand("stat", "Print the statistic X of a marked path");
  stat->add_option("--path", path_text)->required();
  stat->add_option("--n", n)->required();
  stat->add_option("--k", k)->required();
  stat->add_option("--j", j)->required();
  stat->add_option("--mark", mark);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Print the rotation class, canonical member first");
  orbit_cmd->add_option("--path", path_text)->required();
  orbit_cmd->add_option("--n", n)->required();
  orbit_cmd->add_option("--k", k)->required();
  orbit_cmd->add_option("--j", j)->required();

  // verify
  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vargs.suite, "uniform|lemma|orbits|labels|bijection|corollary|main|general-a|general-b|integrality|all")
      ->required();
  verify->add_option("--n", vargs.n);
  verify->add_option("--k", vargs.k);
  verify->add_option("--j", vargs.j);
  verify->add_option("--a", vargs.a);
  verify->add_option("--c", vargs.c);
  verify->add_option("--d", vargs.d);
  verify->add_option("--budget", vargs.budget, "Maximum family size to enumerate");
  verify->add_option("--threads", vargs.threads, "0 = all cores, 1 = serial");
  verify->add_option("--format", vargs.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      std::cout << pathstat::count_formula({n, k, j}).str() << "\n";
    } else if (count_general->parsed()) {
      std::cout << pathstat::unified_formula({ga, gb, gc, gd, gn}).str() << "\n";
    } else if (seq->parsed()) {
      for (const auto& [idx, value] : pathstat::sequence(k, j, n_max)) {
        if (bfile) std::cout << idx << ' ';
        std::cout << value.str() << "\n";
      }
    } else if (enumerate->parsed()) {
      const pathstat::FamilyParams params{n, k, j};
      params.validate();
      pathstat::PathEnumerator paths(params);
      pathstat::DiagonalPath p;
      std::int64_t emitted = 0;
      while (paths.next(p)) {
        if (limit >= 0 && emitted >= limit) break;
        std::cout << p.render() << "\n";
        ++emitted;
      }
    } else if (stat->parsed()) {
      const pathstat::FamilyParams params{n, k, j};
      const auto path = pathstat::DiagonalPath::parse(path_text);
      std::cout << pathstat::statistic_x({path, mark}, params) << "\n";
    } else if (orbit_cmd->parsed()) {
      const pathstat::FamilyParams params{n, k, j};
      const auto path = pathstat::DiagonalPath::parse(path_text);
      for (const auto& member : pathstat::orbit(path, params).paths) {
        std::cout << member.render() << "\n";
      }
    } else if (verify->parsed()) {
      return run_verify(vargs);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitPass;
}
