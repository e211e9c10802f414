#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "subelect/core.hpp"

using namespace subelect;

namespace {

// a=0, b=1, c=2 and x=0, y=1, z=2, w=3.
Election example_e() { return Election(3, {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}); }
Election example_f() { return Election(4, {{3, 0, 1, 2}, {1, 3, 0, 2}, {2, 3, 1, 0}}); }

}  // namespace

TEST_CASE("election construction validates votes") {
  CHECK_THROWS_AS(Election(0, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Election(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Election(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Election(3, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Election(3, {{0, 1, 3}}), std::invalid_argument);
  const Election e = example_e();
  CHECK(e.num_candidates() == 3);
  CHECK(e.num_voters() == 3);
  CHECK(e.position(2, 0) == 2);
  CHECK(e.prefers(1, 1, 0));
  CHECK_FALSE(e.prefers(0, 1, 0));
  CHECK(election_size(e) == 9);
}

TEST_CASE("partial matchings") {
  CHECK_THROWS_AS(CandidateMatching({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateMatching({{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateMatching({{-1, 1}}), std::invalid_argument);
  const CandidateMatching s({{2, 0}, {0, 3}});
  CHECK(s.pairs() == std::vector<std::pair<int, int>>{{0, 3}, {2, 0}});
  CHECK(s.forward(3) == std::vector<int>{3, -1, 0});
  CHECK(s.backward(4) == std::vector<int>{2, -1, -1, 0});
  CHECK_FALSE(s.covers_left(3));
  CHECK(s.fits(3, 4));
  CHECK_FALSE(s.fits(3, 3));
  CHECK(s.contains({2, 0}));
  CHECK(VoterMatching::identity(3).covers_left(3));
  const std::vector<int> image{2, 0, 1};
  CHECK(CandidateMatching::from_image(image).pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}, {2, 1}});
}

TEST_CASE("matching cases") {
  CHECK(MatchingCase::none().kind() == CaseKind::NoMatching);
  CHECK(MatchingCase::voters(VoterMatching{}).kind() == CaseKind::VoterMatchingGiven);
  CHECK(MatchingCase::candidates(CandidateMatching{}).kind() == CaseKind::CandidateMatchingGiven);
  CHECK(MatchingCase::both({}, {}).kind() == CaseKind::BothMatchingsGiven);
  const Election e = example_e(), f = example_f();
  CHECK_NOTHROW(MatchingCase::candidates(CandidateMatching({{2, 3}})).validate(e, f));
  CHECK_THROWS_AS(MatchingCase::candidates(CandidateMatching({{3, 0}})).validate(e, f), std::invalid_argument);
  CHECK_THROWS_AS(MatchingCase::voters(VoterMatching({{0, 3}})).validate(e, f), std::invalid_argument);
}

TEST_CASE("variant and case names round-trip") {
  for (Variant v : {Variant::Isomorphism, Variant::SubelectionIso, Variant::CandSubelectionIso,
                    Variant::VoterSubelectionIso, Variant::MaxCommon, Variant::MaxCommonCand, Variant::MaxCommonVoter})
    CHECK(parse_variant(to_string(v)) == v);
  for (CaseKind k : {CaseKind::NoMatching, CaseKind::VoterMatchingGiven, CaseKind::CandidateMatchingGiven,
                     CaseKind::BothMatchingsGiven})
    CHECK(parse_case_kind(to_string(k)) == k);
  CHECK_FALSE(parse_variant("isomorphism").has_value());
  CHECK(std::string(to_string(Variant::CandSubelectionIso)) == "cand-subiso");
}

TEST_CASE("restrictions and renamings") {
  const Election f = example_f();
  const std::vector<Candidate> xyz{2, 0, 1};
  const CandidateRestriction r = restrict_to_candidates(f, xyz);
  CHECK(r.kept == std::vector<Candidate>{0, 1, 2});
  // Dropping w from F leaves exactly E under a->x, b->y, c->z.
  CHECK(r.election == example_e());

  const std::vector<int> voters{2, 0};
  const Election sub = restrict_to_voters(f, voters);
  CHECK(sub.votes() == std::vector<Vote>{f.vote(0), f.vote(2)});  // original order kept

  const std::vector<Candidate> sigma{1, 2, 0};
  const Election renamed = apply_candidate_renaming(example_e(), sigma);
  CHECK(renamed.vote(0) == Vote{1, 2, 0});
  const std::vector<int> pi{2, 0, 1};
  CHECK(permute_voters(example_e(), pi).vote(0) == example_e().vote(2));
  const std::vector<Candidate> bad{0, 0, 1};
  CHECK_THROWS_AS(apply_candidate_renaming(example_e(), bad), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_candidates(f, std::vector<Candidate>{}), std::invalid_argument);
}

TEST_CASE("swap distance agrees with bubble sort count") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = oracle::uniform_int(rng, 1, 8);
    const auto v = oracle::random_permutation(rng, m), u = oracle::random_permutation(rng, m);
    CHECK(swap_distance(v, u) == oracle::bubble_swaps(v, u));
    CHECK(swap_distance(v, u) == swap_distance(u, v));
  }
  const Vote id{0, 1, 2, 3}, rev{3, 2, 1, 0};
  CHECK(swap_distance(id, rev) == 6);
}

TEST_CASE("single-peakedness") {
  const Vote axis{0, 1, 2, 3, 4};
  CHECK(is_single_peaked_vote(Vote{2, 1, 3, 0, 4}, axis));
  CHECK(is_single_peaked_vote(Vote{4, 3, 2, 1, 0}, axis));
  CHECK_FALSE(is_single_peaked_vote(Vote{2, 0, 1, 3, 4}, axis));
  // 2^(m-1) votes are single-peaked on any fixed axis.
  for (int m = 1; m <= 6; ++m) {
    Vote v(static_cast<std::size_t>(m)), ax(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    std::iota(ax.begin(), ax.end(), 0);
    int count = 0;
    do count += is_single_peaked_vote(v, ax);
    while (std::next_permutation(v.begin(), v.end()));
    CHECK(count == (1 << (m - 1)));
  }
}

TEST_CASE("most frequent vote count") {
  CHECK(most_frequent_vote_count(example_e()) == 1);
  CHECK(most_frequent_vote_count(Election(2, {{0, 1}, {1, 0}, {0, 1}})) == 2);
}

TEST_CASE("witness measure") {
  CHECK(witness_measure(Variant::MaxCommon, 3, 4) == 12);
  CHECK(witness_measure(Variant::MaxCommonCand, 3, 4) == 3);
  CHECK(witness_measure(Variant::MaxCommonVoter, 3, 4) == 4);
  CHECK(witness_measure(Variant::CandSubelectionIso, 3, 4) == 3);
  CHECK(witness_measure(Variant::VoterSubelectionIso, 3, 4) == 4);
  CHECK(witness_measure(Variant::SubelectionIso, 3, 4) == 12);
}

TEST_CASE("verify_witness on the introductory example") {
  const Election e = example_e(), f = example_f();
  IsoWitness w{CandidateMatching({{0, 0}, {1, 1}, {2, 2}}), VoterMatching::identity(3), 9};
  CHECK(verify_witness(e, f, w, Variant::SubelectionIso, MatchingCase::none()));
  CHECK(verify_witness(e, f, IsoWitness{w.sigma, w.pi, 3}, Variant::CandSubelectionIso, MatchingCase::none()));
  CHECK_FALSE(verify_witness(e, f, IsoWitness{w.sigma, w.pi, 8}, Variant::SubelectionIso, MatchingCase::none()));
  CHECK_FALSE(verify_witness(e, f, w, Variant::VoterSubelectionIso, MatchingCase::none()));  // m differs
  CHECK_FALSE(verify_witness(e, f, w, Variant::Isomorphism, MatchingCase::none()));
  // Mapping c to w breaks v3 vs u3.
  IsoWitness bad{CandidateMatching({{0, 0}, {1, 1}, {2, 3}}), VoterMatching::identity(3), 9};
  CHECK_FALSE(verify_witness(e, f, bad, Variant::SubelectionIso, MatchingCase::none()));
  // Must agree with a given voter matching.
  CHECK_FALSE(verify_witness(e, f, w, Variant::SubelectionIso, MatchingCase::voters(VoterMatching({{0, 1}}))));

  // sigma(a) = x, sigma(b) = w: v2, v3 and all of U read w > x, so two
  // voters survive on two candidates.
  const CandidateMatching given({{0, 0}, {1, 3}});
  IsoWitness two{given, VoterMatching({{1, 0}, {2, 1}}), 4};
  CHECK(verify_witness(e, f, two, Variant::MaxCommon, MatchingCase::candidates(given)));
  IsoWitness three{given, VoterMatching({{0, 2}, {1, 0}, {2, 1}}), 6};
  CHECK_FALSE(verify_witness(e, f, three, Variant::MaxCommon, MatchingCase::candidates(given)));
}
