#include <doctest.h>

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <numeric>

#include "oracle.hpp"
#include "subelect/cultures.hpp"

using namespace subelect;

namespace {

// Exact expectation by summing over all m! orders weighted phi^swaps.
double enumerated_expected_swaps(int m, double phi) {
  std::vector<int> v(static_cast<std::size_t>(m)), id(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  std::iota(id.begin(), id.end(), 0);
  double z = 0, total = 0;
  do {
    const int d = oracle::bubble_swaps(id, v);
    const double w = std::pow(phi, d);
    z += w;
    total += d * w;
  } while (std::next_permutation(v.begin(), v.end()));
  return total / z;
}

double chi_square_p(const std::map<Vote, int>& counts, int categories, int samples) {
  const double expected = static_cast<double>(samples) / categories;
  double stat = 0;
  for (const auto& [vote, k] : counts) stat += (k - expected) * (k - expected) / expected;
  stat += (categories - static_cast<int>(counts.size())) * expected;  // unseen categories
  boost::math::chi_squared dist(categories - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST_CASE("culture text forms") {
  CHECK(to_string(parse_culture("ic")) == "ic");
  CHECK(to_string(parse_culture(" id ")) == "id");
  CHECK(to_string(parse_culture("urn(alpha=0.1)")) == "urn(alpha=0.1)");
  CHECK(parse_culture("urn(0.5)") == Culture::urn(0.5));
  CHECK(parse_culture("mallows(normphi=1/3)").normphi == doctest::Approx(1.0 / 3));
  CHECK(to_string(parse_culture("mallows(normphi=0.6667)")) == "mallows(normphi=0.6667)");
  CHECK(parse_culture("1d").kind == CultureKind::Interval1D);
  CHECK(parse_culture("walsh").kind == CultureKind::Walsh);
  CHECK(parse_culture("conitzer").kind == CultureKind::Conitzer);
  for (const char* bad : {"", "foo", "urn", "urn(alpha=-1)", "mallows(normphi=1.5)", "urn(beta=1)", "urn(alpha=x)",
                          "mallows(normphi=1/0)"})
    CHECK_THROWS_AS(parse_culture(bad), std::invalid_argument);
  const auto list = parse_culture_list("id, urn(alpha=0.1),mallows(normphi=1/3)");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == Culture::urn(0.1));
  for (const Culture& c : list) CHECK(parse_culture(to_string(c)) == c);
}

TEST_CASE("samplers are deterministic and valid") {
  for (const char* text : {"id", "ic", "urn(alpha=0.3)", "mallows(normphi=0.5)", "1d", "walsh", "conitzer"}) {
    const Culture c = parse_culture(text);
    const Election a = sample({c, 7, 20, 42});
    CHECK(a.num_candidates() == 7);
    CHECK(a.num_voters() == 20);
    CHECK(a == sample({c, 7, 20, 42}));
    if (c.kind != CultureKind::Identity) CHECK_FALSE(a == sample({c, 7, 20, 43}));
  }
  CHECK_THROWS_AS(sample({Culture::impartial(), 0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sample({Culture::urn(-1), 3, 3, 1}), std::invalid_argument);
  for (int m = 1; m <= 3; ++m)
    for (const char* text : {"id", "ic", "urn(alpha=1)", "mallows(normphi=0.5)", "1d", "walsh", "conitzer"})
      CHECK(sample({parse_culture(text), m, 4, 1}).num_candidates() == m);
}

TEST_CASE("identity and degenerate parameters") {
  const Election id = sample({Culture::identity(), 6, 30, 5});
  CHECK(most_frequent_vote_count(id) == 30);
  const Election mal = sample({Culture::mallows(0), 6, 30, 5});
  CHECK(most_frequent_vote_count(mal) == 30);
  CHECK(sample({Culture::urn(0), 6, 30, 5}) == sample({Culture::impartial(), 6, 30, 5}));
}

TEST_CASE("single-peaked cultures respect their axis") {
  for (const char* text : {"1d", "walsh", "conitzer"}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const CultureSample s = sample_with_axis({parse_culture(text), 8, 25, seed});
      REQUIRE(s.axis.size() == 8);
      for (const Vote& v : s.election.votes()) CHECK(is_single_peaked_vote(v, s.axis));
    }
  }
  CHECK(sample_with_axis({Culture::impartial(), 4, 2, 0}).axis.empty());
}

TEST_CASE("walsh is uniform over single-peaked votes") {
  const int m = 4, samples = 16000;
  const Election e = sample({Culture::walsh(), m, samples, 99});
  std::map<Vote, int> counts;
  for (const Vote& v : e.votes()) ++counts[v];
  CHECK(counts.size() == 8u);
  CHECK(chi_square_p(counts, 8, samples) > 0.01);
}

TEST_CASE("conitzer peaks are uniform") {
  const int m = 5, samples = 10000;
  const Election e = sample({Culture::conitzer(), m, samples, 7});
  std::map<Vote, int> tops;
  for (const Vote& v : e.votes()) ++tops[Vote{v[0]}];
  CHECK(chi_square_p(tops, m, samples) > 0.01);
}

TEST_CASE("expected swaps") {
  for (int m = 1; m <= 10; ++m) {
    CHECK(expected_swaps(m, 1.0) == doctest::Approx(m * (m - 1) / 4.0).epsilon(1e-12));
    CHECK(expected_swaps(m, 0.0) == 0.0);
  }
  for (double phi : {0.1, 0.5, 0.9}) CHECK(expected_swaps(2, phi) == doctest::Approx(phi / (1 + phi)).epsilon(1e-12));
  for (int m = 1; m <= 6; ++m)
    for (double phi : {0.0, 0.2, 0.5, 0.77, 1.0})
      CHECK(expected_swaps(m, phi) == doctest::Approx(enumerated_expected_swaps(m, phi)).epsilon(1e-10));
  CHECK_THROWS_AS(expected_swaps(3, 1.5), std::invalid_argument);
}

TEST_CASE("mallows calibration") {
  CHECK(calibrate_mallows_phi(10, 0.0) == 0.0);
  CHECK(calibrate_mallows_phi(10, 1.0) == 1.0);
  CHECK(std::abs(calibrate_mallows_phi(2, 0.5) - 1.0 / 3) < 1e-9);
  for (int m = 2; m <= 10; ++m)
    for (double p : {0.1, 1.0 / 3, 0.5, 2.0 / 3, 0.9})
      CHECK(std::abs(expected_swaps(m, calibrate_mallows_phi(m, p)) - p * m * (m - 1) / 4) <= 1e-8);
  CHECK_THROWS_AS(calibrate_mallows_phi(3, -0.1), std::invalid_argument);
}

TEST_CASE("mallows draws follow phi^swaps around the centre") {
  // m = 3, phi = 1/2: weights 1, 2x 1/2, 2x 1/4, 1/8 for distances 0..3.
  const double normphi = expected_swaps(3, 0.5) / 1.5;
  const int samples = 20000;
  const Election e = sample({Culture::mallows(normphi), 3, samples, 3});
  std::map<Vote, int> counts;
  for (const Vote& v : e.votes()) ++counts[v];
  const Vote centre = std::max_element(counts.begin(), counts.end(), [](auto& a, auto& b) {
                        return a.second < b.second;
                      })->first;
  const double z = 1 + 2 * 0.5 + 2 * 0.25 + 0.125;
  double stat = 0;
  for (const auto& [v, k] : counts) {
    const double expected = samples * std::pow(0.5, oracle::bubble_swaps(centre, v)) / z;
    stat += (k - expected) * (k - expected) / expected;
  }
  CHECK(counts.size() == 6u);
  boost::math::chi_squared dist(5);
  CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 0.01);
}

TEST_CASE("urn statistic does not depend on the seed stream") {
  // Same culture, two unrelated families of seeds.
  auto mean_top = [](std::uint64_t family) {
    double total = 0;
    const int samples = 1500;
    for (int s = 0; s < samples; ++s) {
      const Election e = sample({Culture::urn(0.3), 5, 12, derive_seed(family, static_cast<std::uint64_t>(samples - s))});
      total += most_frequent_vote_count(e);
    }
    return total / samples;
  };
  CHECK(std::abs(mean_top(1) - mean_top(2)) < 0.25);
}

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  CHECK(derive_seed(1, 2, 3, 0) != derive_seed(1, 2, 3, 1));
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(uniform_below(rng, 7) < 7);
    const double u = uniform_unit(rng);
    CHECK((u >= 0 && u < 1));
  }
}
