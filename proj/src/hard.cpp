#include "subelect/hard.hpp"

#include <algorithm>
#include <numeric>

#include "subelect/iso.hpp"
#include "subelect/matching.hpp"

namespace subelect {

namespace {

enum class Goal { SubIso, CandSubIso, MaxCommon, MaxCommonCand };

// Depth-first search over partial injections sigma: C1 -> C2, deciding
// candidates of E1 in index order (map to the smallest unused image first,
// skip last). Each node keeps the matrix of voter pairs whose votes agree on
// the candidates assigned so far; its maximum matching only shrinks as sigma
// grows, which drives both feasibility pruning and the bound.
class InjectionSearch {
 public:
  InjectionSearch(const Election& e1, const Election& e2, const MatchingCase& mc, Goal goal)
      : e1_(e1), e2_(e2), mc_(mc), goal_(goal), n1_(e1.num_voters()), n2_(e2.num_voters()),
        m1_(e1.num_candidates()), m2_(e2.num_candidates()) {
    sigma_.assign(static_cast<std::size_t>(m1_), -1);
    used_.assign(static_cast<std::size_t>(m2_), 0);
    if (mc.sigma()) given_sigma_ = mc.sigma()->forward(m1_);
  }

  // Decision goals: a witness or nothing. Max goals: always a witness.
  std::optional<IsoWitness> run() {
    std::vector<char> compat(static_cast<std::size_t>(n1_) * n2_, 0);
    if (const auto& pi = mc_.pi()) {
      for (auto [v, u] : pi->pairs()) compat[idx(v, u)] = 1;
    } else {
      std::fill(compat.begin(), compat.end(), 1);
    }
    dfs(0, compat);
    if (is_decision()) return found_;
    return best_;
  }

 private:
  bool is_decision() const { return goal_ == Goal::SubIso || goal_ == Goal::CandSubIso; }
  bool needs_all_e1_voters() const { return goal_ != Goal::MaxCommon; }
  std::size_t idx(int v, int u) const { return static_cast<std::size_t>(v) * n2_ + u; }

  BipartiteMatching matching(const std::vector<char>& compat) {
    graph_.reset(n2_);
    for (int v = 0; v < n1_; ++v) {
      graph_.begin_left_vertex();
      for (int u = 0; u < n2_; ++u)
        if (compat[idx(v, u)]) graph_.add_neighbor(u);
    }
    return matcher_.solve(graph_);
  }

  std::int64_t objective(int kept, int matched) const {
    return goal_ == Goal::MaxCommonCand ? kept : static_cast<std::int64_t>(kept) * matched;
  }

  void record(int kept, BipartiteMatching&& bm) {
    const std::int64_t value = objective(kept, bm.size);
    if (value <= best_.value) return;
    std::vector<CandidateMatching::Pair> pairs;
    for (int c = 0; c < m1_; ++c)
      if (sigma_[c] >= 0) pairs.emplace_back(c, sigma_[c]);
    best_.sigma = CandidateMatching(std::move(pairs));
    best_.pi = VoterMatching(std::move(bm.pairs));
    best_.value = value;
  }

  bool leaf_check() {
    std::vector<CandidateMatching::Pair> pairs;
    for (int c = 0; c < m1_; ++c) pairs.emplace_back(c, sigma_[c]);
    const Variant v = goal_ == Goal::SubIso ? Variant::SubelectionIso : Variant::CandSubelectionIso;
    found_ = subelection_isomorphism_given_cand_matching(e1_, e2_, CandidateMatching(std::move(pairs)), mc_.pi(), v);
    return found_.has_value();
  }

  // Returns true to stop the whole search.
  bool dfs(int c, const std::vector<char>& compat) {
    if (++nodes_ > kSearchNodeLimit)
      throw SizeLimitError("search exceeded " + std::to_string(kSearchNodeLimit) + " nodes");
    BipartiteMatching bm = matching(compat);
    const int mu = bm.size;
    if (needs_all_e1_voters() && mu < n1_) return false;

    const int remaining = std::min(m1_ - c, m2_ - kept_);
    if (is_decision()) {
      if (kept_ == m1_) return leaf_check();
      if (m1_ - c > m2_ - kept_) return false;
    } else {
      record(kept_, std::move(bm));
      if (c == m1_ || objective(kept_ + remaining, mu) <= best_.value) return false;
    }

    auto assign = [&](int d) -> bool {
      std::vector<char> next = compat;
      for (int v = 0; v < n1_; ++v) {
        for (int u = 0; u < n2_; ++u) {
          char& ok = next[idx(v, u)];
          if (!ok) continue;
          for (int c2 = 0; c2 < c && ok; ++c2) {
            if (sigma_[c2] < 0) continue;
            if (e1_.prefers(v, c, c2) != e2_.prefers(u, d, sigma_[c2])) ok = 0;
          }
        }
      }
      sigma_[c] = d;
      used_[d] = 1;
      ++kept_;
      const bool stop = dfs(c + 1, next);
      --kept_;
      used_[d] = 0;
      sigma_[c] = -1;
      return stop;
    };

    if (!given_sigma_.empty()) {
      const int d = given_sigma_[c];
      if (d >= 0 && assign(d)) return true;
    } else {
      for (int d = 0; d < m2_; ++d)
        if (!used_[d] && assign(d)) return true;
    }
    if (goal_ == Goal::SubIso || goal_ == Goal::CandSubIso) return false;
    return dfs(c + 1, compat);
  }

  const Election& e1_;
  const Election& e2_;
  const MatchingCase& mc_;
  Goal goal_;
  int n1_, n2_, m1_, m2_;
  std::vector<int> sigma_;
  std::vector<char> used_;
  std::vector<int> given_sigma_;
  int kept_ = 0;
  std::int64_t nodes_ = 0;
  IsoWitness best_;
  std::optional<IsoWitness> found_;
  BipartiteGraph graph_;
  BipartiteMatcher matcher_;
};

void require_total_bijections(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                              const VoterMatching& pi) {
  const int m = e1.num_candidates(), n = e1.num_voters();
  if (m != e2.num_candidates() || n != e2.num_voters())
    throw std::invalid_argument("both-matchings problem needs elections of equal shape");
  if (!sigma.fits(m, m) || !sigma.covers_left(m))
    throw std::invalid_argument("candidate matching must be a total bijection");
  if (!pi.fits(n, n) || !pi.covers_left(n)) throw std::invalid_argument("voter matching must be a total bijection");
}

}  // namespace

std::optional<IsoWitness> subelection_isomorphism(const Election& e1, const Election& e2, const MatchingCase& mc) {
  mc.validate(e1, e2);
  if (mc.sigma()) return subelection_isomorphism_given_cand_matching(e1, e2, *mc.sigma(), mc.pi(), Variant::SubelectionIso);
  if (e1.num_candidates() > e2.num_candidates() || e1.num_voters() > e2.num_voters()) return std::nullopt;
  if (mc.pi() && !mc.pi()->covers_left(e1.num_voters())) return std::nullopt;
  return InjectionSearch(e1, e2, mc, Goal::SubIso).run();
}

std::optional<IsoWitness> cand_subelection_isomorphism(const Election& e1, const Election& e2,
                                                       const MatchingCase& mc) {
  mc.validate(e1, e2);
  if (mc.sigma())
    return subelection_isomorphism_given_cand_matching(e1, e2, *mc.sigma(), mc.pi(), Variant::CandSubelectionIso);
  if (e1.num_candidates() > e2.num_candidates() || e1.num_voters() != e2.num_voters()) return std::nullopt;
  if (mc.pi() && !mc.pi()->covers_left(e1.num_voters())) return std::nullopt;
  return InjectionSearch(e1, e2, mc, Goal::CandSubIso).run();
}

Graph build_conflict_graph(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                           const VoterMatching& pi) {
  require_total_bijections(e1, e2, sigma, pi);
  const int m = e1.num_candidates();
  const std::vector<int> s = sigma.forward(m);
  Graph g = Graph::complete(m);
  for (auto [v, u] : pi.pairs())
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (g.adjacent(x, y) && e1.prefers(v, x, y) != e2.prefers(u, s[x], s[y])) g.remove_edge(x, y);
  return g;
}

IsoWitness max_common_cand_subelection_both(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                                            const VoterMatching& pi) {
  Graph g = build_conflict_graph(e1, e2, sigma, pi);
  const std::vector<int> clique = max_clique(g);
  const std::vector<int> s = sigma.forward(e1.num_candidates());
  std::vector<CandidateMatching::Pair> kept;
  for (int c : clique) kept.emplace_back(c, s[c]);
  IsoWitness w;
  w.sigma = CandidateMatching(std::move(kept));
  w.pi = pi;
  w.value = static_cast<std::int64_t>(clique.size());
  return w;
}

IsoWitness approx_common_cand_both(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                                   const VoterMatching& pi, int c) {
  if (c < 1) throw std::invalid_argument("approximation constant must be at least 1");
  require_total_bijections(e1, e2, sigma, pi);
  const int m = e1.num_candidates();
  const std::vector<int> s = sigma.forward(m);

  // Restricted to `subset`, every matched pair must list the same
  // candidates in the same order once E1's are renamed.
  auto feasible = [&](const std::vector<int>& subset) {
    std::vector<int> left, right;
    for (auto [v, u] : pi.pairs()) {
      left.clear();
      right.clear();
      for (Candidate x : e1.vote(v))
        if (std::binary_search(subset.begin(), subset.end(), x)) left.push_back(s[x]);
      for (Candidate y : e2.vote(u))
        if (std::find(left.begin(), left.end(), y) != left.end()) right.push_back(y);
      if (left != right) return false;
    }
    return true;
  };

  for (int size = std::min(c, m); size >= 1; --size) {
    std::vector<int> subset(static_cast<std::size_t>(size));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (feasible(subset)) {
        IsoWitness w;
        std::vector<CandidateMatching::Pair> kept;
        for (int x : subset) kept.emplace_back(x, s[x]);
        w.sigma = CandidateMatching(std::move(kept));
        w.pi = pi;
        w.value = size;
        return w;
      }
      // Next subset in lexicographic order.
      int i = size - 1;
      while (i >= 0 && subset[i] == m - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  throw std::logic_error("approx_common_cand_both: no feasible singleton");
}

IsoWitness max_common_subelection(const Election& e1, const Election& e2, const MatchingCase& mc) {
  mc.validate(e1, e2);
  return *InjectionSearch(e1, e2, mc, Goal::MaxCommon).run();
}

IsoWitness max_common_cand_subelection(const Election& e1, const Election& e2, const MatchingCase& mc) {
  mc.validate(e1, e2);
  const int n = e1.num_voters();
  if (n != e2.num_voters()) return {};
  if (mc.pi() && !mc.pi()->covers_left(n)) return {};
  const int m = e1.num_candidates();
  if (mc.kind() == CaseKind::BothMatchingsGiven && m == e2.num_candidates() && mc.sigma()->covers_left(m))
    return max_common_cand_subelection_both(e1, e2, *mc.sigma(), *mc.pi());
  return *InjectionSearch(e1, e2, mc, Goal::MaxCommonCand).run();
}

}  // namespace subelect
