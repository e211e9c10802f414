#pragma once

// Ordinal elections, partial matchings between two elections, and the
// witnesses that certify (sub)isomorphisms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subelect {

using Candidate = int;
using Vote = std::vector<Candidate>;  // position 0 = most preferred

// An election over candidates 0..m-1 with n >= 1 strict complete votes.
// Each vote is stored as a ranking and as its inverse so that position
// lookups are O(1).
class Election {
 public:
  Election(int num_candidates, std::vector<Vote> votes);

  int num_candidates() const { return m_; }
  int num_voters() const { return static_cast<int>(votes_.size()); }

  const Vote& vote(int voter) const { return votes_[voter]; }
  const std::vector<Vote>& votes() const { return votes_; }

  // Rank of candidate c in the given voter's ballot (0 = top).
  int position(int voter, Candidate c) const {
    return positions_[static_cast<std::size_t>(voter) * m_ + c];
  }
  std::span<const int> positions(int voter) const {
    return {positions_.data() + static_cast<std::size_t>(voter) * m_,
            static_cast<std::size_t>(m_)};
  }

  bool prefers(int voter, Candidate a, Candidate b) const {
    return position(voter, a) < position(voter, b);
  }

  friend bool operator==(const Election& a, const Election& b) {
    return a.m_ == b.m_ && a.votes_ == b.votes_;
  }

 private:
  int m_;
  std::vector<Vote> votes_;
  std::vector<int> positions_;
};

// Throws std::invalid_argument unless `vote` is a permutation of 0..m-1.
void check_permutation(std::span<const int> vote, int m, const char* what);
bool is_permutation_of(std::span<const int> vote, int m);

// Partial injective map between two index sets. Pairs are kept sorted by
// the left index. The tag only separates candidate maps from voter maps.
template <class Tag>
class PartialMatching {
 public:
  using Pair = std::pair<int, int>;

  PartialMatching() = default;
  explicit PartialMatching(std::vector<Pair> pairs);

  // Total bijection i -> image[i] on 0..size-1.
  static PartialMatching from_image(std::span<const int> image);
  static PartialMatching identity(int size);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Dense forward/backward maps with -1 for unmatched entries. Throws
  // std::invalid_argument if an index falls outside the given ranges.
  std::vector<int> forward(int left_size) const;
  std::vector<int> backward(int right_size) const;

  bool covers_left(int left_size) const;
  bool covers_right(int right_size) const;
  bool contains(const Pair& p) const;
  // Indices within [0,left) x [0,right)?
  bool fits(int left_size, int right_size) const;

  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;
  friend auto operator<=>(const PartialMatching&, const PartialMatching&) = default;

 private:
  std::vector<Pair> pairs_;
};

struct CandidateTag {};
struct VoterTag {};
using CandidateMatching = PartialMatching<CandidateTag>;
using VoterMatching = PartialMatching<VoterTag>;

extern template class PartialMatching<CandidateTag>;
extern template class PartialMatching<VoterTag>;

// Candidate map sigma and voter map pi certifying that the subelection of
// E1 on (sigma's left side, pi's left side), renamed by sigma, equals the
// subelection of E2 on the right sides, vote for vote. `value` is the size
// in the measure of the problem being solved.
struct IsoWitness {
  CandidateMatching sigma;
  VoterMatching pi;
  std::int64_t value = 0;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

enum class CaseKind { NoMatching, VoterMatchingGiven, CandidateMatchingGiven, BothMatchingsGiven };

// Which correspondences between the two elections are fixed in advance.
class MatchingCase {
 public:
  static MatchingCase none() { return {}; }
  static MatchingCase voters(VoterMatching pi) { return {std::nullopt, std::move(pi)}; }
  static MatchingCase candidates(CandidateMatching sigma) { return {std::move(sigma), std::nullopt}; }
  static MatchingCase both(CandidateMatching sigma, VoterMatching pi) {
    return {std::move(sigma), std::move(pi)};
  }

  CaseKind kind() const;
  const std::optional<CandidateMatching>& sigma() const { return sigma_; }
  const std::optional<VoterMatching>& pi() const { return pi_; }

  // Throws std::invalid_argument if a given matching references an index
  // that does not exist in E1 / E2.
  void validate(const Election& e1, const Election& e2) const;

 private:
  MatchingCase() = default;
  MatchingCase(std::optional<CandidateMatching> s, std::optional<VoterMatching> p)
      : sigma_(std::move(s)), pi_(std::move(p)) {}

  std::optional<CandidateMatching> sigma_;
  std::optional<VoterMatching> pi_;
};

enum class Variant {
  Isomorphism,
  SubelectionIso,
  CandSubelectionIso,
  VoterSubelectionIso,
  MaxCommon,
  MaxCommonCand,
  MaxCommonVoter,
};

const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);
const char* to_string(CaseKind k);
std::optional<CaseKind> parse_case_kind(std::string_view text);

// Election restricted to a candidate subset, re-indexed by ascending
// original index: kept[new_index] = original index.
struct CandidateRestriction {
  Election election;
  std::vector<Candidate> kept;
};

CandidateRestriction restrict_to_candidates(const Election& e, std::span<const Candidate> subset);
// Voters keep their original relative order.
Election restrict_to_voters(const Election& e, std::span<const int> voters);
// sigma[c] is the new name of c; must be a bijection on 0..m-1.
Election apply_candidate_renaming(const Election& e, std::span<const Candidate> sigma);
// Result vote i is the input's vote pi[i].
Election permute_voters(const Election& e, std::span<const int> pi);

inline std::int64_t election_size(const Election& e) {
  return static_cast<std::int64_t>(e.num_candidates()) * e.num_voters();
}

// Kendall tau distance: number of candidate pairs ordered oppositely.
int swap_distance(std::span<const Candidate> v, std::span<const Candidate> u);

// True iff every top-k prefix of `vote` is contiguous on `axis`.
bool is_single_peaked_vote(std::span<const Candidate> vote, std::span<const Candidate> axis);

int most_frequent_vote_count(const Election& e);

// Checks that `w` certifies a solution of `variant` under `mc`: matchings
// are valid and agree with the given ones, the variant's deletion rules
// hold, the restricted votes coincide, and w.value equals the variant's
// measure. Never throws.
bool verify_witness(const Election& e1, const Election& e2, const IsoWitness& w, Variant variant,
                    const MatchingCase& mc);

// Size of a witness in the measure of `variant`.
std::int64_t witness_measure(Variant variant, std::size_t kept_candidates, std::size_t kept_voters);

}  // namespace subelect
