#include <algorithm>
#include <string>

#include "subelect/hard.hpp"

namespace subelect {

BruteForceLimits brute_force_limits(CaseKind kind) {
  switch (kind) {
    case CaseKind::NoMatching:
      return kBruteForceNoMatching;
    case CaseKind::VoterMatchingGiven:
      return kBruteForceVoterMatching;
    case CaseKind::CandidateMatchingGiven:
      return kBruteForceCandidateMatching;
    case CaseKind::BothMatchingsGiven:
      return kBruteForceBothMatchings;
  }
  return kBruteForceNoMatching;
}

namespace {

// Enumerates every candidate injection and, for each, every voter matching
// between voters whose restricted, renamed votes are literally equal.
class Exhaustive {
 public:
  Exhaustive(const Election& e1, const Election& e2, Variant variant, const MatchingCase& mc)
      : e1_(e1), e2_(e2), variant_(variant) {
    m1_ = e1.num_candidates();
    m2_ = e2.num_candidates();
    n1_ = e1.num_voters();
    n2_ = e2.num_voters();
    if (mc.sigma()) given_sigma_ = mc.sigma()->forward(m1_);
    if (mc.pi()) given_pi_ = mc.pi()->forward(n1_);
    sigma_.assign(static_cast<std::size_t>(m1_), -1);
    used_c_.assign(static_cast<std::size_t>(m2_), 0);
  }

  IsoWitness run() {
    enumerate_sigma(0);
    return best_;
  }

 private:
  void enumerate_sigma(int c) {
    if (c == m1_) {
      evaluate_sigma();
      return;
    }
    const bool must_map = variant_ == Variant::MaxCommonVoter;
    if (!must_map) enumerate_sigma(c + 1);
    for (int d = 0; d < m2_; ++d) {
      if (used_c_[d]) continue;
      if (!given_sigma_.empty() && given_sigma_[c] != d) continue;
      sigma_[c] = d;
      used_c_[d] = 1;
      enumerate_sigma(c + 1);
      used_c_[d] = 0;
      sigma_[c] = -1;
    }
  }

  void evaluate_sigma() {
    int kept = 0;
    for (int c = 0; c < m1_; ++c) kept += sigma_[c] >= 0;
    if (variant_ == Variant::MaxCommonVoter && (kept != m1_ || m1_ != m2_)) return;
    if (variant_ == Variant::MaxCommonCand && n1_ != n2_) return;

    // Restricted votes: E1's renamed by sigma, E2's restricted to the image.
    std::vector<std::vector<int>> left(static_cast<std::size_t>(n1_)), right(static_cast<std::size_t>(n2_));
    for (int v = 0; v < n1_; ++v)
      for (Candidate c : e1_.vote(v))
        if (sigma_[c] >= 0) left[v].push_back(sigma_[c]);
    for (int u = 0; u < n2_; ++u)
      for (Candidate d : e2_.vote(u))
        if (used_c_[d]) right[u].push_back(d);
    equal_.assign(static_cast<std::size_t>(n1_) * n2_, 0);
    for (int v = 0; v < n1_; ++v)
      for (int u = 0; u < n2_; ++u)
        if (given_pi_.empty() || given_pi_[v] == u) equal_[static_cast<std::size_t>(v) * n2_ + u] = left[v] == right[u];

    kept_ = kept;
    pi_.clear();
    used_v_.assign(static_cast<std::size_t>(n2_), 0);
    enumerate_pi(0);
  }

  void enumerate_pi(int v) {
    if (v == n1_) {
      evaluate_pi();
      return;
    }
    if (variant_ != Variant::MaxCommonCand) enumerate_pi(v + 1);
    for (int u = 0; u < n2_; ++u) {
      if (used_v_[u] || !equal_[static_cast<std::size_t>(v) * n2_ + u]) continue;
      used_v_[u] = 1;
      pi_.emplace_back(v, u);
      enumerate_pi(v + 1);
      pi_.pop_back();
      used_v_[u] = 0;
    }
  }

  void evaluate_pi() {
    const std::int64_t value = witness_measure(variant_, static_cast<std::size_t>(kept_), pi_.size());
    if (value <= best_.value) return;
    std::vector<CandidateMatching::Pair> pairs;
    for (int c = 0; c < m1_; ++c)
      if (sigma_[c] >= 0) pairs.emplace_back(c, sigma_[c]);
    best_.sigma = CandidateMatching(std::move(pairs));
    best_.pi = VoterMatching(pi_);
    best_.value = value;
  }

  const Election& e1_;
  const Election& e2_;
  Variant variant_;
  int m1_, m2_, n1_, n2_;
  std::vector<int> given_sigma_, given_pi_;
  std::vector<int> sigma_;
  std::vector<char> used_c_, used_v_, equal_;
  std::vector<std::pair<int, int>> pi_;
  int kept_ = 0;
  IsoWitness best_;
};

}  // namespace

IsoWitness brute_force_max_common(const Election& e1, const Election& e2, Variant variant, const MatchingCase& mc) {
  if (variant != Variant::MaxCommon && variant != Variant::MaxCommonCand && variant != Variant::MaxCommonVoter)
    throw std::invalid_argument("brute_force_max_common: variant must be a maximum-common variant");
  mc.validate(e1, e2);
  const BruteForceLimits lim = brute_force_limits(mc.kind());
  const int m = std::max(e1.num_candidates(), e2.num_candidates());
  const int n = std::max(e1.num_voters(), e2.num_voters());
  if (m > lim.max_candidates || n > lim.max_voters) {
    throw SizeLimitError("exhaustive search limited to " + std::to_string(lim.max_candidates) + " candidates and " +
                         std::to_string(lim.max_voters) + " voters for matching case '" + to_string(mc.kind()) +
                         "'");
  }
  return Exhaustive(e1, e2, variant, mc).run();
}

}  // namespace subelect
