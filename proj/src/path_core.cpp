#include "pathstat/path_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathstat/counting.hpp"

namespace pathstat {

void FamilyParams::validate() const {
  if (n < 1 || k < 2 || j < 1) {
    throw std::invalid_argument("FamilyParams: need n >= 1, k >= 2, j >= 1");
  }
  if ((k - 1) * n < j) {
    throw std::invalid_argument("FamilyParams: need (k-1)n >= j");
  }
}

DiagonalPath DiagonalPath::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("path text must be nonempty");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw std::invalid_argument(std::string("invalid path character '") + c + "'");
    }
  }
  return DiagonalPath(std::move(steps));
}

std::string DiagonalPath::render() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

std::vector<std::int64_t> DiagonalPath::heights() const {
  std::vector<std::int64_t> h;
  h.reserve(steps_.size() + 1);
  std::int64_t y = 0;
  h.push_back(y);
  for (Step s : steps_) {
    y += (s == Step::Up) ? 1 : -1;
    h.push_back(y);
  }
  return h;
}

DiagonalPath DiagonalPath::rotated(std::int64_t offset) const {
  const auto len = static_cast<std::int64_t>(steps_.size());
  if (len == 0) return *this;
  offset = ((offset % len) + len) % len;
  std::vector<Step> out;
  out.reserve(steps_.size());
  out.insert(out.end(), steps_.begin() + offset, steps_.end());
  out.insert(out.end(), steps_.begin(), steps_.begin() + offset);
  return DiagonalPath(std::move(out));
}

bool validate_family(const DiagonalPath& path, const FamilyParams& params) {
  if (path.size() != params.length()) return false;
  const auto ups = std::count(path.steps().begin(), path.steps().end(), Step::Up);
  return static_cast<std::int64_t>(ups) == params.upsteps();
}

Natural rank(const DiagonalPath& path) {
  std::int64_t remaining = path.size();
  std::int64_t ups = static_cast<std::int64_t>(
      std::count(path.steps().begin(), path.steps().end(), Step::Up));
  Natural r = 0;
  for (Step s : path.steps()) {
    if (s == Step::Down) {
      // all paths with Up at this position precede this one
      r += binomial(remaining - 1, ups - 1);
    } else {
      --ups;
    }
    --remaining;
  }
  return r;
}

namespace {

std::vector<Step> unrank_steps(Natural r, std::int64_t length, std::int64_t upsteps) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(length));
  std::int64_t ups = upsteps;
  for (std::int64_t remaining = length; remaining > 0; --remaining) {
    const Natural with_up = binomial(remaining - 1, ups - 1);
    if (r < with_up) {
      steps.push_back(Step::Up);
      --ups;
    } else {
      r -= with_up;
      steps.push_back(Step::Down);
    }
  }
  return steps;
}

}  // namespace

DiagonalPath unrank(const Natural& r, const FamilyParams& params) {
  params.validate();
  if (r < 0 || r >= family_size(params)) {
    throw std::out_of_range("unrank: rank outside [0, C(kn, n+j))");
  }
  return DiagonalPath(unrank_steps(r, params.length(), params.upsteps()));
}

PathEnumerator::PathEnumerator(std::int64_t length, std::int64_t upsteps)
    : PathEnumerator(length, upsteps, 0, binomial(length, upsteps)) {}

PathEnumerator::PathEnumerator(std::int64_t length, std::int64_t upsteps,
                               const Natural& rank_lo, const Natural& rank_hi) {
  if (length < 1 || upsteps < 0 || upsteps > length) {
    throw std::invalid_argument("PathEnumerator: need 1 <= length and 0 <= upsteps <= length");
  }
  const Natural total = binomial(length, upsteps);
  if (rank_lo < 0 || rank_hi > total || rank_lo > rank_hi) {
    throw std::out_of_range("PathEnumerator: bad rank range");
  }
  remaining_ = rank_hi - rank_lo;
  if (remaining_ > 0) current_ = unrank_steps(rank_lo, length, upsteps);
}

PathEnumerator::PathEnumerator(const FamilyParams& params)
    : PathEnumerator(params.length(), params.upsteps()) {
  params.validate();
}

PathEnumerator::PathEnumerator(const FamilyParams& params, const Natural& rank_lo,
                               const Natural& rank_hi)
    : PathEnumerator(params.length(), params.upsteps(), rank_lo, rank_hi) {
  params.validate();
}

bool PathEnumerator::next(DiagonalPath& out) {
  if (remaining_ == 0) return false;
  out = DiagonalPath(current_);
  --remaining_;
  if (remaining_ > 0) {
    // lexicographic successor; Up < Down by enum value
    std::next_permutation(current_.begin(), current_.end());
  }
  return true;
}

}  // namespace pathstat
