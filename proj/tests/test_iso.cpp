#include <doctest.h>

#include "oracle.hpp"
#include "subelect/iso.hpp"

using namespace subelect;

namespace {

Election example_e() { return Election(3, {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}); }
Election example_f() { return Election(4, {{3, 0, 1, 2}, {1, 3, 0, 2}, {2, 3, 1, 0}}); }

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("derive_candidate_bijection") {
  // v1 = a b c against u1 restricted to x, y, z.
  CHECK(derive_candidate_bijection(Vote{0, 1, 2}, Vote{0, 1, 2}).pairs() == Pairs{{0, 0}, {1, 1}, {2, 2}});
  CHECK(derive_candidate_bijection(Vote{2, 0, 1}, Vote{2, 0, 1}) == CandidateMatching::identity(3));
  CHECK(derive_candidate_bijection(Vote{0, 1}, Vote{1, 0}).pairs() == Pairs{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(derive_candidate_bijection(Vote{0, 1}, Vote{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("election isomorphism") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Election e = oracle::random_election(rng, oracle::uniform_int(rng, 1, 6), oracle::uniform_int(rng, 1, 6), 3);
    const auto emb = oracle::embed(rng, e, 0, 0);
    const auto w = election_isomorphism(e, emb.election, MatchingCase::none());
    REQUIRE(w.has_value());
    CHECK(w->value == election_size(e));
    CHECK(verify_witness(e, emb.election, *w, Variant::Isomorphism, MatchingCase::none()));
    const auto both = MatchingCase::both(CandidateMatching::from_image(emb.sigma), VoterMatching::from_image(emb.pi));
    CHECK(election_isomorphism(e, emb.election, both).has_value());
  }
  CHECK_FALSE(election_isomorphism(Election(2, {{0, 1}, {0, 1}}), Election(2, {{0, 1}, {1, 0}}), MatchingCase::none()));
  const auto single = election_isomorphism(Election(2, {{0, 1}}), Election(2, {{1, 0}}), MatchingCase::none());
  REQUIRE(single.has_value());
  CHECK(single->sigma.pairs() == Pairs{{0, 1}, {1, 0}});
  CHECK_FALSE(election_isomorphism(example_e(), example_f(), MatchingCase::none()));
  CHECK_THROWS_AS(election_isomorphism(example_e(), example_e(), MatchingCase::voters(VoterMatching({{0, 5}}))),
                  std::invalid_argument);
}

TEST_CASE("voter subelection isomorphism") {
  const Election e = example_e();
  const std::vector<int> keep{2, 0};
  const auto w = voter_subelection_isomorphism(restrict_to_voters(e, keep), e, MatchingCase::none());
  REQUIRE(w.has_value());
  CHECK(w->value == 2);
  CHECK_FALSE(voter_subelection_isomorphism(Election(2, {{0, 1}, {0, 1}}), Election(2, {{0, 1}, {1, 0}}),
                                            MatchingCase::none()));
  const auto one = voter_subelection_isomorphism(Election(3, {{0, 1, 2}}), e, MatchingCase::none());
  REQUIRE(one.has_value());
  CHECK(one->pi.pairs() == Pairs{{0, 0}});
  CHECK_FALSE(voter_subelection_isomorphism(e, Election(3, {{0, 1, 2}}), MatchingCase::none()));
}

TEST_CASE("max common voter subelection examples") {
  const Election e = example_e();
  CHECK(max_common_voter_subelection(e, e, MatchingCase::none()).value == 3);
  CHECK(max_common_voter_subelection(Election(2, {{0, 1}, {1, 0}}), Election(2, {{0, 1}, {0, 1}}),
                                     MatchingCase::none())
            .value == 1);
  CHECK(max_common_voter_subelection(e, example_f(), MatchingCase::none()).value == 0);
  // Ties: the smallest voter-pair list wins.
  const IsoWitness w =
      max_common_voter_subelection(Election(2, {{0, 1}, {0, 1}}), Election(2, {{1, 0}, {0, 1}, {0, 1}}),
                                   MatchingCase::none());
  CHECK(w.value == 2);
  CHECK(w.pi.pairs() == Pairs{{0, 1}, {1, 2}});
  CHECK(w.sigma.pairs() == Pairs{{0, 0}, {1, 1}});
  const IsoWitness t = max_common_voter_subelection(e, e, MatchingCase::none(), 2);
  CHECK(t.value >= 2);
  CHECK(verify_witness(e, e, t, Variant::MaxCommonVoter, MatchingCase::none()));
}

TEST_CASE("max common voter subelection against an identity election") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = oracle::uniform_int(rng, 1, 4), n = oracle::uniform_int(rng, 1, 6);
    const Election e = oracle::random_election(rng, m, n, 3);
    const Election id(m, std::vector<Vote>(static_cast<std::size_t>(n), oracle::random_permutation(rng, m)));
    CHECK(max_common_voter_subelection(e, id, MatchingCase::none()).value == most_frequent_vote_count(e));
  }
}

TEST_CASE("max common voter subelection properties") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = oracle::uniform_int(rng, 1, 5);
    const Election a = oracle::random_election(rng, m, oracle::uniform_int(rng, 1, 7), oracle::uniform_int(rng, 1, 4));
    const Election b = oracle::random_election(rng, m, oracle::uniform_int(rng, 1, 7), oracle::uniform_int(rng, 1, 4));
    const IsoWitness w = max_common_voter_subelection(a, b, MatchingCase::none());
    CHECK(verify_witness(a, b, w, Variant::MaxCommonVoter, MatchingCase::none()));
    CHECK(w.value == oracle::max_common(a, b, Variant::MaxCommonVoter, {}));
    CHECK(max_common_voter_subelection(b, a, MatchingCase::none()).value == w.value);
    const auto renamed = oracle::embed(rng, b, 0, 0).election;
    CHECK(max_common_voter_subelection(a, renamed, MatchingCase::none()).value == w.value);
    std::vector<Vote> more = b.votes();
    more.push_back(oracle::random_permutation(rng, m));
    CHECK(max_common_voter_subelection(a, Election(m, more), MatchingCase::none()).value >= w.value);
  }
}

TEST_CASE("max common voter subelection in every matching case") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = oracle::uniform_int(rng, 1, 4);
    const int n1 = oracle::uniform_int(rng, 1, 5), n2 = oracle::uniform_int(rng, 1, 5);
    const Election a = oracle::random_election(rng, m, n1, 3);
    const Election b = trial % 2 ? oracle::random_election(rng, m, n2, 3) : oracle::embed(rng, a, 0, 1).election;
    oracle::Given given;
    if (trial % 4 >= 2) given.sigma = oracle::random_injection(rng, m, m, 0.9);
    if (trial % 8 >= 4) given.pi = oracle::random_injection(rng, a.num_voters(), b.num_voters(), 0.8);
    const MatchingCase mc =
        given.sigma && given.pi ? MatchingCase::both(CandidateMatching(oracle::pairs_of(*given.sigma)),
                                                     VoterMatching(oracle::pairs_of(*given.pi)))
        : given.sigma           ? MatchingCase::candidates(CandidateMatching(oracle::pairs_of(*given.sigma)))
        : given.pi              ? MatchingCase::voters(VoterMatching(oracle::pairs_of(*given.pi)))
                                : MatchingCase::none();
    const IsoWitness w = max_common_voter_subelection(a, b, mc);
    CHECK(w.value == oracle::max_common(a, b, Variant::MaxCommonVoter, given));
    CHECK(verify_witness(a, b, w, Variant::MaxCommonVoter, mc));
    const auto d = voter_subelection_isomorphism(a, b, mc);
    CHECK(d.has_value() == oracle::decide(a, b, Variant::VoterSubelectionIso, given));
    if (d) CHECK(verify_witness(a, b, *d, Variant::VoterSubelectionIso, mc));
  }
}

TEST_CASE("subelection isomorphism with a given candidate matching") {
  const Election e = example_e(), f = example_f();
  const CandidateMatching abc({{0, 0}, {1, 1}, {2, 2}});
  const auto w = subelection_isomorphism_given_cand_matching(e, f, abc, std::nullopt, Variant::SubelectionIso);
  REQUIRE(w.has_value());
  CHECK(w->value == 9);
  CHECK(verify_witness(e, f, *w, Variant::SubelectionIso, MatchingCase::candidates(abc)));
  CHECK(subelection_isomorphism_given_cand_matching(e, f, abc, std::nullopt, Variant::CandSubelectionIso)->value == 3);

  // x and y swapped: every u orders them opposite to the renamed v.
  const CandidateMatching swapped({{0, 1}, {1, 0}, {2, 2}});
  CHECK_FALSE(subelection_isomorphism_given_cand_matching(e, f, swapped, std::nullopt, Variant::SubelectionIso));

  const std::vector<Candidate> subset{0, 2, 3};
  const CandidateRestriction r = restrict_to_candidates(f, subset);
  const CandidateMatching inclusion({{0, 0}, {1, 2}, {2, 3}});
  CHECK(subelection_isomorphism_given_cand_matching(r.election, f, inclusion, VoterMatching::identity(3),
                                                    Variant::CandSubelectionIso));

  CHECK_THROWS_AS(subelection_isomorphism_given_cand_matching(e, f, CandidateMatching({{0, 0}}), std::nullopt,
                                                              Variant::SubelectionIso),
                  std::invalid_argument);
  CHECK_THROWS_AS(subelection_isomorphism_given_cand_matching(e, f, abc, std::nullopt, Variant::MaxCommon),
                  std::invalid_argument);
}
