#pragma once

// Statistical cultures: seeded generators of random elections.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "subelect/core.hpp"

namespace subelect {

enum class CultureKind { Identity, ImpartialCulture, Urn, Mallows, Interval1D, Walsh, Conitzer };

// A culture together with its parameter: alpha for Urn, norm-phi for Mallows.
struct Culture {
  CultureKind kind = CultureKind::ImpartialCulture;
  double alpha = 0.0;
  double normphi = 0.0;

  static Culture identity() { return {CultureKind::Identity}; }
  static Culture impartial() { return {CultureKind::ImpartialCulture}; }
  static Culture urn(double alpha) { return {CultureKind::Urn, alpha, 0.0}; }
  static Culture mallows(double normphi) { return {CultureKind::Mallows, 0.0, normphi}; }
  static Culture interval_1d() { return {CultureKind::Interval1D}; }
  static Culture walsh() { return {CultureKind::Walsh}; }
  static Culture conitzer() { return {CultureKind::Conitzer}; }

  friend bool operator==(const Culture&, const Culture&) = default;
};

// Canonical text: id, ic, urn(alpha=A), mallows(normphi=P), 1d, walsh,
// conitzer. Parameters print in shortest round-trip form.
std::string to_string(const Culture& c);
// Accepts the canonical text; parameters may also be written as p/q.
// Throws std::invalid_argument on malformed input or out-of-range values.
Culture parse_culture(std::string_view text);
// Comma-separated list; commas inside parentheses do not split.
std::vector<Culture> parse_culture_list(std::string_view text);

struct CultureSpec {
  Culture culture;
  int m = 1;
  int n = 1;
  std::uint64_t seed = 0;
};

// Election plus, for the single-peaked cultures, the societal axis the
// votes are single-peaked with respect to (empty otherwise).
struct CultureSample {
  Election election;
  std::vector<Candidate> axis;
};

CultureSample sample_with_axis(const CultureSpec& spec);
Election sample(const CultureSpec& spec);

// Expected swap distance between a Mallows(phi) draw and its centre.
double expected_swaps(int m, double phi);
// phi such that expected_swaps(m, phi) = normphi * m(m-1)/4.
double calibrate_mallows_phi(int m, double normphi);

// Independent 64-bit stream seed for (seed, a, b, c).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Portable uniform draws on top of mt19937_64 (standard distributions are
// implementation-defined, and samples must not depend on the library).
using Rng = std::mt19937_64;
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
double uniform_unit(Rng& rng);
Vote uniform_permutation(Rng& rng, int m);

}  // namespace subelect
