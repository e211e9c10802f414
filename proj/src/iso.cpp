#include "subelect/iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "subelect/matching.hpp"
#include "permutation_ids.hpp"

namespace subelect {

CandidateMatching derive_candidate_bijection(std::span<const Candidate> v, std::span<const Candidate> u) {
  if (v.size() != u.size()) throw std::invalid_argument("derive_candidate_bijection: votes differ in length");
  std::vector<CandidateMatching::Pair> pairs;
  pairs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) pairs.emplace_back(v[i], u[i]);
  return CandidateMatching(std::move(pairs));
}

namespace {

// Voters of one election keyed by the permutation that expresses their vote
// relative to a fixed reference. Two voters from different elections can be
// matched under the candidate bijection induced by the references iff their
// keys coincide.
struct KeyedVoters {
  std::vector<int> key;                     // key[voter]
  std::vector<std::pair<int, int>> by_key;  // (key, voter), sorted
};

void finish(KeyedVoters& kv) {
  kv.by_key.clear();
  for (int i = 0; i < static_cast<int>(kv.key.size()); ++i) kv.by_key.emplace_back(kv.key[i], i);
  std::sort(kv.by_key.begin(), kv.by_key.end());
}

// Keys relative to an anchor voter: voter w becomes the sequence of ranks
// (in the anchor's ballot) of the candidates w lists.
KeyedVoters keys_relative_to(const Election& e, int anchor, PermutationIds& ids, std::vector<int>& buf) {
  const int m = e.num_candidates();
  KeyedVoters kv;
  kv.key.resize(static_cast<std::size_t>(e.num_voters()));
  auto pos = e.positions(anchor);
  buf.resize(static_cast<std::size_t>(m));
  for (int w = 0; w < e.num_voters(); ++w) {
    const Vote& vote = e.vote(w);
    for (int p = 0; p < m; ++p) buf[p] = pos[vote[p]];
    kv.key[w] = ids.id(buf);
  }
  finish(kv);
  return kv;
}

// Keys under an explicit renaming (identity when rename is empty).
KeyedVoters keys_renamed(const Election& e, std::span<const int> rename, PermutationIds& ids) {
  const int m = e.num_candidates();
  KeyedVoters kv;
  kv.key.resize(static_cast<std::size_t>(e.num_voters()));
  std::vector<int> buf(static_cast<std::size_t>(m));
  for (int w = 0; w < e.num_voters(); ++w) {
    const Vote& vote = e.vote(w);
    for (int p = 0; p < m; ++p) buf[p] = rename.empty() ? vote[p] : rename[vote[p]];
    kv.key[w] = ids.id(buf);
  }
  finish(kv);
  return kv;
}

struct Best {
  std::int64_t value = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> sigma;  // image of each E1 candidate

  bool better_than(const Best& other) const {
    if (value != other.value) return value > other.value;
    if (pairs != other.pairs) return pairs < other.pairs;
    return sigma < other.sigma;
  }
};

class VoterMatchSearch {
 public:
  VoterMatchSearch(const Election& e1, const Election& e2, const std::optional<VoterMatching>& pi)
      : e1_(e1), e2_(e2) {
    if (pi) pi_forward_ = pi->forward(e1.num_voters());
  }

  // Upper bound (exact for the unrestricted case): for every shared key,
  // min of the multiplicities.
  std::int64_t bound(const KeyedVoters& a, const KeyedVoters& b) const {
    if (!pi_forward_.empty()) {
      std::int64_t count = 0;
      for (int v = 0; v < static_cast<int>(pi_forward_.size()); ++v)
        if (pi_forward_[v] >= 0 && a.key[v] == b.key[pi_forward_[v]]) ++count;
      return count;
    }
    std::int64_t total = 0;
    std::size_t i = 0, j = 0;
    while (i < a.by_key.size() && j < b.by_key.size()) {
      const int ka = a.by_key[i].first, kb = b.by_key[j].first;
      if (ka < kb) {
        ++i;
      } else if (kb < ka) {
        ++j;
      } else {
        std::size_t ci = 0, cj = 0;
        while (i < a.by_key.size() && a.by_key[i].first == ka) ++i, ++ci;
        while (j < b.by_key.size() && b.by_key[j].first == ka) ++j, ++cj;
        total += static_cast<std::int64_t>(std::min(ci, cj));
      }
    }
    return total;
  }

  // Builds the equal-vote bipartite graph and returns its maximum matching.
  BipartiteMatching match(const KeyedVoters& a, const KeyedVoters& b) {
    graph_.reset(e2_.num_voters());
    if (!pi_forward_.empty()) {
      for (int v = 0; v < e1_.num_voters(); ++v) {
        graph_.begin_left_vertex();
        const int u = pi_forward_[v];
        if (u >= 0 && a.key[v] == b.key[u]) graph_.add_neighbor(u);
      }
      return matcher_.solve(graph_);
    }
    // Run boundaries in b for each key.
    run_of_key_.clear();
    for (std::size_t j = 0; j < b.by_key.size();) {
      std::size_t k = j;
      while (k < b.by_key.size() && b.by_key[k].first == b.by_key[j].first) ++k;
      run_of_key_.emplace(b.by_key[j].first, std::make_pair(j, k));
      j = k;
    }
    for (int v = 0; v < e1_.num_voters(); ++v) {
      graph_.begin_left_vertex();
      auto it = run_of_key_.find(a.key[v]);
      if (it == run_of_key_.end()) continue;
      for (std::size_t k = it->second.first; k < it->second.second; ++k) graph_.add_neighbor(b.by_key[k].second);
    }
    return matcher_.solve(graph_);
  }

 private:
  const Election& e1_;
  const Election& e2_;
  std::vector<int> pi_forward_;
  BipartiteGraph graph_;
  BipartiteMatcher matcher_;
  std::unordered_map<int, std::pair<std::size_t, std::size_t>> run_of_key_;
};

IsoWitness to_witness(Best best) {
  IsoWitness w;
  if (best.value <= 0) return w;
  w.sigma = CandidateMatching::from_image(best.sigma);
  w.pi = VoterMatching(std::move(best.pairs));
  w.value = best.value;
  return w;
}

// Core search. With first_voter_only the first voter of E1 is assumed to be
// matched, which is valid whenever every E1 voter must be kept.
IsoWitness search(const Election& e1, const Election& e2, const MatchingCase& mc,
                  std::optional<std::int64_t> threshold, bool first_voter_only) {
  const int m = e1.num_candidates();
  if (m != e2.num_candidates()) return {};
  const auto& pi = mc.pi();
  if (pi && pi->empty()) return {};

  VoterMatchSearch engine(e1, e2, pi);
  Best best;
  auto consider = [&](const KeyedVoters& a, const KeyedVoters& b, std::vector<int> sigma) -> bool {
    const std::int64_t ub = engine.bound(a, b);
    if (ub < best.value) return false;
    BipartiteMatching bm = engine.match(a, b);
    Best cand{bm.size, std::move(bm.pairs), std::move(sigma)};
    if (cand.better_than(best)) best = std::move(cand);
    return threshold && best.value >= *threshold;
  };

  PermutationIds ids;
  if (const auto& sigma = mc.sigma()) {
    if (!sigma->covers_left(m) || !sigma->covers_right(m)) return {};
    std::vector<int> image = sigma->forward(m);
    KeyedVoters a = keys_renamed(e1, image, ids);
    KeyedVoters b = keys_renamed(e2, {}, ids);
    consider(a, b, std::move(image));
    return to_witness(std::move(best));
  }

  std::vector<int> buf;
  std::vector<KeyedVoters> right(static_cast<std::size_t>(e2.num_voters()));
  std::vector<char> right_ready(right.size(), 0);
  auto right_keys = [&](int u) -> const KeyedVoters& {
    if (!right_ready[u]) {
      right[u] = keys_relative_to(e2, u, ids, buf);
      right_ready[u] = 1;
    }
    return right[u];
  };

  PermutationIds sigma_ids;
  std::unordered_set<int> seen_sigma;
  std::vector<int> sigma(static_cast<std::size_t>(m));
  auto try_pair = [&](int v, const KeyedVoters& a, int u) -> bool {
    const Vote& vv = e1.vote(v);
    const Vote& uu = e2.vote(u);
    for (int p = 0; p < m; ++p) sigma[vv[p]] = uu[p];
    if (!seen_sigma.insert(sigma_ids.id(sigma)).second) return false;
    return consider(a, right_keys(u), sigma);
  };

  const int last_v = first_voter_only ? std::min(1, e1.num_voters()) : e1.num_voters();
  if (pi) {
    for (auto [v, u] : pi->pairs()) {
      if (v >= last_v) break;
      KeyedVoters a = keys_relative_to(e1, v, ids, buf);
      if (try_pair(v, a, u)) break;
    }
  } else {
    bool done = false;
    for (int v = 0; v < last_v && !done; ++v) {
      KeyedVoters a = keys_relative_to(e1, v, ids, buf);
      for (int u = 0; u < e2.num_voters() && !done; ++u) done = try_pair(v, a, u);
    }
  }
  return to_witness(std::move(best));
}

}  // namespace

IsoWitness max_common_voter_subelection(const Election& e1, const Election& e2, const MatchingCase& mc,
                                        std::optional<std::int64_t> threshold) {
  mc.validate(e1, e2);
  return search(e1, e2, mc, threshold, false);
}

std::optional<IsoWitness> voter_subelection_isomorphism(const Election& e1, const Election& e2,
                                                        const MatchingCase& mc) {
  mc.validate(e1, e2);
  const int n1 = e1.num_voters();
  if (e1.num_candidates() != e2.num_candidates() || n1 > e2.num_voters()) return std::nullopt;
  if (mc.pi() && !mc.pi()->covers_left(n1)) return std::nullopt;
  IsoWitness w = search(e1, e2, mc, n1, true);
  if (w.value != n1) return std::nullopt;
  return w;
}

std::optional<IsoWitness> election_isomorphism(const Election& e1, const Election& e2, const MatchingCase& mc) {
  mc.validate(e1, e2);
  if (e1.num_candidates() != e2.num_candidates() || e1.num_voters() != e2.num_voters()) return std::nullopt;
  auto w = voter_subelection_isomorphism(e1, e2, mc);
  if (w) w->value = election_size(e1);
  return w;
}

std::optional<IsoWitness> subelection_isomorphism_given_cand_matching(const Election& e1, const Election& e2,
                                                                      const CandidateMatching& sigma,
                                                                      const std::optional<VoterMatching>& pi,
                                                                      Variant variant) {
  if (variant != Variant::SubelectionIso && variant != Variant::CandSubelectionIso)
    throw std::invalid_argument("subelection_isomorphism_given_cand_matching: unsupported variant");
  const int m1 = e1.num_candidates();
  if (!sigma.fits(m1, e2.num_candidates()) || !sigma.covers_left(m1))
    throw std::invalid_argument("candidate matching must be total on the smaller election");
  if (pi && !pi->fits(e1.num_voters(), e2.num_voters()))
    throw std::invalid_argument("voter matching references a voter that does not exist");

  const int n1 = e1.num_voters();
  if (n1 > e2.num_voters()) return std::nullopt;
  if (variant == Variant::CandSubelectionIso && n1 != e2.num_voters()) return std::nullopt;

  std::vector<Candidate> image;
  for (auto [c, d] : sigma.pairs()) image.push_back(d);
  CandidateRestriction sub = restrict_to_candidates(e2, image);
  std::vector<int> reindex(static_cast<std::size_t>(e2.num_candidates()), -1);
  for (int i = 0; i < static_cast<int>(sub.kept.size()); ++i) reindex[sub.kept[i]] = i;
  std::vector<CandidateMatching::Pair> local;
  for (auto [c, d] : sigma.pairs()) local.emplace_back(c, reindex[d]);

  MatchingCase inner = pi ? MatchingCase::both(CandidateMatching(std::move(local)), *pi)
                          : MatchingCase::candidates(CandidateMatching(std::move(local)));
  auto w = voter_subelection_isomorphism(e1, sub.election, inner);
  if (!w) return std::nullopt;
  w->sigma = sigma;
  w->value = witness_measure(variant, sigma.size(), w->pi.size());
  return w;
}

}  // namespace subelect
