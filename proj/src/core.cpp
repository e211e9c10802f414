#include "subelect/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace subelect {

bool is_permutation_of(std::span<const int> vote, int m) {
  if (static_cast<int>(vote.size()) != m) return false;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int c : vote) {
    if (c < 0 || c >= m || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

void check_permutation(std::span<const int> vote, int m, const char* what) {
  if (!is_permutation_of(vote, m)) {
    throw std::invalid_argument(std::string(what) + " is not a permutation of 0.." +
                                std::to_string(m - 1));
  }
}

Election::Election(int num_candidates, std::vector<Vote> votes) : m_(num_candidates), votes_(std::move(votes)) {
  if (m_ < 1) throw std::invalid_argument("election needs at least one candidate");
  if (votes_.empty()) throw std::invalid_argument("election needs at least one vote");
  positions_.resize(votes_.size() * static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < votes_.size(); ++i) {
    check_permutation(votes_[i], m_, "vote");
    for (int p = 0; p < m_; ++p) positions_[i * m_ + votes_[i][p]] = p;
  }
}

// ---------------------------------------------------------------------------
// PartialMatching

template <class Tag>
PartialMatching<Tag>::PartialMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<int> rights;
  rights.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].first < 0 || pairs_[i].second < 0)
      throw std::invalid_argument("matching contains a negative index");
    if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
      throw std::invalid_argument("matching is not injective: left index " +
                                  std::to_string(pairs_[i].first) + " repeated");
    rights.push_back(pairs_[i].second);
  }
  std::sort(rights.begin(), rights.end());
  auto dup = std::adjacent_find(rights.begin(), rights.end());
  if (dup != rights.end())
    throw std::invalid_argument("matching is not injective: right index " + std::to_string(*dup) + " repeated");
}

template <class Tag>
PartialMatching<Tag> PartialMatching<Tag>::from_image(std::span<const int> image) {
  std::vector<Pair> pairs;
  pairs.reserve(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) pairs.emplace_back(static_cast<int>(i), image[i]);
  return PartialMatching(std::move(pairs));
}

template <class Tag>
PartialMatching<Tag> PartialMatching<Tag>::identity(int size) {
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pairs.emplace_back(i, i);
  return PartialMatching(std::move(pairs));
}

template <class Tag>
bool PartialMatching<Tag>::fits(int left_size, int right_size) const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const Pair& p) {
    return p.first < left_size && p.second < right_size;
  });
}

template <class Tag>
std::vector<int> PartialMatching<Tag>::forward(int left_size) const {
  std::vector<int> f(static_cast<std::size_t>(left_size), -1);
  for (auto [l, r] : pairs_) {
    if (l >= left_size) throw std::invalid_argument("matching index " + std::to_string(l) + " out of range");
    f[l] = r;
  }
  return f;
}

template <class Tag>
std::vector<int> PartialMatching<Tag>::backward(int right_size) const {
  std::vector<int> b(static_cast<std::size_t>(right_size), -1);
  for (auto [l, r] : pairs_) {
    if (r >= right_size) throw std::invalid_argument("matching index " + std::to_string(r) + " out of range");
    b[r] = l;
  }
  return b;
}

template <class Tag>
bool PartialMatching<Tag>::covers_left(int left_size) const {
  return static_cast<int>(pairs_.size()) == left_size && fits(left_size, std::numeric_limits<int>::max());
}

template <class Tag>
bool PartialMatching<Tag>::covers_right(int right_size) const {
  return static_cast<int>(pairs_.size()) == right_size && fits(std::numeric_limits<int>::max(), right_size);
}

template <class Tag>
bool PartialMatching<Tag>::contains(const Pair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

template class PartialMatching<CandidateTag>;
template class PartialMatching<VoterTag>;

// ---------------------------------------------------------------------------
// MatchingCase

CaseKind MatchingCase::kind() const {
  if (sigma_ && pi_) return CaseKind::BothMatchingsGiven;
  if (sigma_) return CaseKind::CandidateMatchingGiven;
  if (pi_) return CaseKind::VoterMatchingGiven;
  return CaseKind::NoMatching;
}

void MatchingCase::validate(const Election& e1, const Election& e2) const {
  if (sigma_ && !sigma_->fits(e1.num_candidates(), e2.num_candidates()))
    throw std::invalid_argument("candidate matching references a candidate that does not exist");
  if (pi_ && !pi_->fits(e1.num_voters(), e2.num_voters()))
    throw std::invalid_argument("voter matching references a voter that does not exist");
}

namespace {

constexpr std::pair<Variant, const char*> kVariantNames[] = {
    {Variant::Isomorphism, "iso"},
    {Variant::SubelectionIso, "subiso"},
    {Variant::CandSubelectionIso, "cand-subiso"},
    {Variant::VoterSubelectionIso, "voter-subiso"},
    {Variant::MaxCommon, "max-common"},
    {Variant::MaxCommonCand, "max-common-cand"},
    {Variant::MaxCommonVoter, "max-common-voter"},
};

constexpr std::pair<CaseKind, const char*> kCaseNames[] = {
    {CaseKind::NoMatching, "none"},
    {CaseKind::VoterMatchingGiven, "voter"},
    {CaseKind::CandidateMatchingGiven, "cand"},
    {CaseKind::BothMatchingsGiven, "both"},
};

}  // namespace

const char* to_string(Variant v) {
  for (auto [k, name] : kVariantNames)
    if (k == v) return name;
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (auto [k, name] : kVariantNames)
    if (text == name) return k;
  return std::nullopt;
}

const char* to_string(CaseKind c) {
  for (auto [k, name] : kCaseNames)
    if (k == c) return name;
  return "?";
}

std::optional<CaseKind> parse_case_kind(std::string_view text) {
  for (auto [k, name] : kCaseNames)
    if (text == name) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Election transforms

CandidateRestriction restrict_to_candidates(const Election& e, std::span<const Candidate> subset) {
  const int m = e.num_candidates();
  if (subset.empty()) throw std::invalid_argument("restrict_to_candidates: empty candidate set");
  std::vector<int> new_index(static_cast<std::size_t>(m), -1);
  for (Candidate c : subset) {
    if (c < 0 || c >= m) throw std::invalid_argument("restrict_to_candidates: candidate out of range");
    new_index[c] = 0;
  }
  std::vector<Candidate> kept;
  for (int c = 0; c < m; ++c) {
    if (new_index[c] == 0) {
      new_index[c] = static_cast<int>(kept.size());
      kept.push_back(c);
    }
  }
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(e.num_voters()));
  for (const Vote& v : e.votes()) {
    Vote r;
    r.reserve(kept.size());
    for (Candidate c : v)
      if (new_index[c] >= 0) r.push_back(new_index[c]);
    votes.push_back(std::move(r));
  }
  return {Election(static_cast<int>(kept.size()), std::move(votes)), std::move(kept)};
}

Election restrict_to_voters(const Election& e, std::span<const int> voters) {
  if (voters.empty()) throw std::invalid_argument("restrict_to_voters: empty voter set");
  std::vector<char> keep(static_cast<std::size_t>(e.num_voters()), 0);
  for (int v : voters) {
    if (v < 0 || v >= e.num_voters()) throw std::invalid_argument("restrict_to_voters: voter out of range");
    keep[v] = 1;
  }
  std::vector<Vote> votes;
  for (int v = 0; v < e.num_voters(); ++v)
    if (keep[v]) votes.push_back(e.vote(v));
  return Election(e.num_candidates(), std::move(votes));
}

Election apply_candidate_renaming(const Election& e, std::span<const Candidate> sigma) {
  check_permutation(sigma, e.num_candidates(), "candidate renaming");
  std::vector<Vote> votes = e.votes();
  for (Vote& v : votes)
    for (Candidate& c : v) c = sigma[c];
  return Election(e.num_candidates(), std::move(votes));
}

Election permute_voters(const Election& e, std::span<const int> pi) {
  check_permutation(pi, e.num_voters(), "voter permutation");
  std::vector<Vote> votes;
  votes.reserve(pi.size());
  for (int i : pi) votes.push_back(e.vote(i));
  return Election(e.num_candidates(), std::move(votes));
}

// ---------------------------------------------------------------------------
// Vote metrics

int swap_distance(std::span<const Candidate> v, std::span<const Candidate> u) {
  if (v.size() != u.size()) throw std::invalid_argument("swap_distance: votes differ in length");
  const int m = static_cast<int>(v.size());
  check_permutation(v, m, "vote");
  check_permutation(u, m, "vote");
  std::vector<int> pos_u(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) pos_u[u[p]] = p;
  int inversions = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pos_u[v[i]] > pos_u[v[j]]) ++inversions;
  return inversions;
}

bool is_single_peaked_vote(std::span<const Candidate> vote, std::span<const Candidate> axis) {
  const int m = static_cast<int>(axis.size());
  if (static_cast<int>(vote.size()) != m) throw std::invalid_argument("is_single_peaked_vote: shape mismatch");
  check_permutation(axis, m, "axis");
  check_permutation(vote, m, "vote");
  std::vector<int> where(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) where[axis[i]] = i;
  int lo = where[vote[0]];
  int hi = lo;
  for (int k = 1; k < m; ++k) {
    const int p = where[vote[k]];
    if (p == lo - 1) {
      lo = p;
    } else if (p == hi + 1) {
      hi = p;
    } else {
      return false;
    }
  }
  return true;
}

int most_frequent_vote_count(const Election& e) {
  std::vector<const Vote*> sorted;
  sorted.reserve(e.votes().size());
  for (const Vote& v : e.votes()) sorted.push_back(&v);
  std::sort(sorted.begin(), sorted.end(), [](const Vote* a, const Vote* b) { return *a < *b; });
  int best = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && *sorted[j] == *sorted[i]) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Witness verification

std::int64_t witness_measure(Variant variant, std::size_t kept_candidates, std::size_t kept_voters) {
  const auto kc = static_cast<std::int64_t>(kept_candidates);
  const auto kv = static_cast<std::int64_t>(kept_voters);
  switch (variant) {
    case Variant::CandSubelectionIso:
    case Variant::MaxCommonCand:
      return kc;
    case Variant::VoterSubelectionIso:
    case Variant::MaxCommonVoter:
      return kv;
    default:
      return kc * kv;
  }
}

namespace {

bool is_max_variant(Variant v) {
  return v == Variant::MaxCommon || v == Variant::MaxCommonCand || v == Variant::MaxCommonVoter;
}

template <class M>
bool subset_of(const M& sub, const M& super) {
  return std::all_of(sub.pairs().begin(), sub.pairs().end(), [&](const auto& p) { return super.contains(p); });
}

bool deletion_rules_hold(const Election& e1, const Election& e2, const IsoWitness& w, Variant variant) {
  const int m1 = e1.num_candidates(), m2 = e2.num_candidates();
  const int n1 = e1.num_voters(), n2 = e2.num_voters();
  const bool all_c1 = w.sigma.covers_left(m1);
  const bool all_v1 = w.pi.covers_left(n1);
  switch (variant) {
    case Variant::Isomorphism:
      return m1 == m2 && n1 == n2 && all_c1 && all_v1;
    case Variant::SubelectionIso:
      return all_c1 && all_v1;
    case Variant::CandSubelectionIso:
      return n1 == n2 && all_c1 && all_v1;
    case Variant::VoterSubelectionIso:
      return m1 == m2 && all_c1 && all_v1;
    case Variant::MaxCommon:
      return true;
    case Variant::MaxCommonCand:
      return n1 == n2 && all_v1;
    case Variant::MaxCommonVoter:
      return m1 == m2 && all_c1;
  }
  return false;
}

}  // namespace

bool verify_witness(const Election& e1, const Election& e2, const IsoWitness& w, Variant variant,
                    const MatchingCase& mc) {
  if (!w.sigma.fits(e1.num_candidates(), e2.num_candidates())) return false;
  if (!w.pi.fits(e1.num_voters(), e2.num_voters())) return false;
  if (mc.sigma() && !subset_of(w.sigma, *mc.sigma())) return false;
  if (mc.pi() && !subset_of(w.pi, *mc.pi())) return false;

  const std::int64_t measure = witness_measure(variant, w.sigma.size(), w.pi.size());
  if (w.value != measure) return false;
  // An empty common subelection is always a (trivial) solution.
  if (is_max_variant(variant) && measure == 0) return true;
  if (!deletion_rules_hold(e1, e2, w, variant)) return false;

  // Candidates of E1 kept by sigma, in E1 index order; their images must be
  // ordered identically by every matched pair of voters.
  for (auto [v, u] : w.pi.pairs()) {
    const auto& pairs = w.sigma.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const bool in_v = e1.prefers(v, pairs[i].first, pairs[j].first);
        const bool in_u = e2.prefers(u, pairs[i].second, pairs[j].second);
        if (in_v != in_u) return false;
      }
    }
  }
  return true;
}

}  // namespace subelect
