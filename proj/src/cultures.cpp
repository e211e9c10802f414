#include "subelect/cultures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subelect {

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(seed);
  h = mix(h ^ a);
  h = mix(h ^ b);
  return mix(h ^ c);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vote uniform_permutation(Rng& rng, int m) {
  Vote v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(v[i], v[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  return v;
}

namespace {

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

// ---------------------------------------------------------------------------
// Text form

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s) {
  auto parse_plain = [](std::string_view t) {
    double x = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), x);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size() || t.empty())
      throw std::invalid_argument("malformed number '" + std::string(t) + "'");
    return x;
  };
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const double den = parse_plain(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return parse_plain(s.substr(0, slash)) / den;
  }
  return parse_plain(s);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// name(key=value) -> value; throws if key differs.
double parameter(std::string_view text, std::string_view name, std::string_view key) {
  std::string_view rest = text.substr(name.size());
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw std::invalid_argument("culture '" + std::string(text) + "' needs " + std::string(key) + "=VALUE");
  rest = trim(rest.substr(1, rest.size() - 2));
  if (auto eq = rest.find('='); eq != std::string_view::npos) {
    if (trim(rest.substr(0, eq)) != key)
      throw std::invalid_argument("culture '" + std::string(text) + "': unknown parameter");
    rest = trim(rest.substr(eq + 1));
  }
  return parse_number(rest);
}

void check(const Culture& c) {
  if (c.kind == CultureKind::Urn && !(c.alpha >= 0 && std::isfinite(c.alpha)))
    throw std::invalid_argument("urn alpha must be a finite nonnegative number");
  if (c.kind == CultureKind::Mallows && !(c.normphi >= 0 && c.normphi <= 1))
    throw std::invalid_argument("mallows normphi must lie in [0, 1]");
}

}  // namespace

std::string to_string(const Culture& c) {
  switch (c.kind) {
    case CultureKind::Identity:
      return "id";
    case CultureKind::ImpartialCulture:
      return "ic";
    case CultureKind::Urn:
      return "urn(alpha=" + format_number(c.alpha) + ")";
    case CultureKind::Mallows:
      return "mallows(normphi=" + format_number(c.normphi) + ")";
    case CultureKind::Interval1D:
      return "1d";
    case CultureKind::Walsh:
      return "walsh";
    case CultureKind::Conitzer:
      return "conitzer";
  }
  return "?";
}

Culture parse_culture(std::string_view text) {
  text = trim(text);
  Culture c;
  if (text == "id") {
    c = Culture::identity();
  } else if (text == "ic") {
    c = Culture::impartial();
  } else if (text == "1d") {
    c = Culture::interval_1d();
  } else if (text == "walsh") {
    c = Culture::walsh();
  } else if (text == "conitzer") {
    c = Culture::conitzer();
  } else if (text.starts_with("urn")) {
    c = Culture::urn(parameter(text, "urn", "alpha"));
  } else if (text.starts_with("mallows")) {
    c = Culture::mallows(parameter(text, "mallows", "normphi"));
  } else {
    throw std::invalid_argument("unknown culture '" + std::string(text) + "'");
  }
  check(c);
  return c;
}

std::vector<Culture> parse_culture_list(std::string_view text) {
  std::vector<Culture> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      if (!item.empty()) out.push_back(parse_culture(item));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty culture list");
  return out;
}

// ---------------------------------------------------------------------------
// Mallows calibration

double expected_swaps(int m, double phi) {
  if (m < 1 || !(phi >= 0 && phi <= 1)) throw std::invalid_argument("expected_swaps: bad arguments");
  // Inserting the (i+1)-th candidate of the centre displaces it by d in
  // 0..i positions with probability proportional to phi^d.
  double total = 0;
  for (int i = 1; i < m; ++i) {
    double weight = 1, z = 0, mean = 0;
    for (int d = 0; d <= i; ++d) {
      z += weight;
      mean += d * weight;
      weight *= phi;
    }
    total += mean / z;
  }
  return total;
}

double calibrate_mallows_phi(int m, double normphi) {
  if (m < 1 || !(normphi >= 0 && normphi <= 1)) throw std::invalid_argument("calibrate_mallows_phi: bad arguments");
  if (normphi == 0) return 0;
  if (normphi == 1) return 1;
  const double target = normphi * m * (m - 1) / 4.0;
  double lo = 0, hi = 1;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (expected_swaps(m, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Samplers

namespace {

Vote mallows_vote(Rng& rng, const Vote& centre, double phi, std::vector<double>& weights) {
  const int m = static_cast<int>(centre.size());
  Vote v;
  v.reserve(centre.size());
  for (int i = 0; i < m; ++i) {
    // Slot j in 0..i; slot i keeps the centre's order, slot j costs i-j swaps.
    weights.assign(static_cast<std::size_t>(i) + 1, 0.0);
    double w = 1, total = 0;
    for (int j = i; j >= 0; --j) {
      weights[j] = w;
      total += w;
      w *= phi;
    }
    double r = uniform_unit(rng) * total;
    int slot = i;
    for (int j = 0; j <= i; ++j) {
      if (r < weights[j]) {
        slot = j;
        break;
      }
      r -= weights[j];
    }
    v.insert(v.begin() + slot, centre[i]);
  }
  return v;
}

Vote walsh_vote(Rng& rng, int m) {
  // Fill from the bottom: the last-ranked remaining candidate is always one
  // of the two ends of the remaining axis interval.
  Vote v(static_cast<std::size_t>(m));
  int lo = 0, hi = m - 1;
  for (int pos = m - 1; pos > 0; --pos) v[pos] = coin(rng) ? lo++ : hi--;
  v[0] = lo;
  return v;
}

Vote conitzer_vote(Rng& rng, int m) {
  Vote v;
  v.reserve(static_cast<std::size_t>(m));
  int lo = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)));
  int hi = lo;
  v.push_back(lo);
  while (static_cast<int>(v.size()) < m) {
    bool left;
    if (lo == 0) {
      left = false;
    } else if (hi == m - 1) {
      left = true;
    } else {
      left = coin(rng);
    }
    v.push_back(left ? --lo : ++hi);
  }
  return v;
}

}  // namespace

CultureSample sample_with_axis(const CultureSpec& spec) {
  check(spec.culture);
  const int m = spec.m, n = spec.n;
  if (m < 1 || n < 1) throw std::invalid_argument("culture sample needs m >= 1 and n >= 1");
  Rng rng(spec.seed);
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(n));
  std::vector<Candidate> axis;
  auto natural_axis = [&] {
    axis.resize(static_cast<std::size_t>(m));
    std::iota(axis.begin(), axis.end(), 0);
  };

  switch (spec.culture.kind) {
    case CultureKind::Identity: {
      Vote v = uniform_permutation(rng, m);
      votes.assign(static_cast<std::size_t>(n), v);
      break;
    }
    case CultureKind::ImpartialCulture:
      for (int i = 0; i < n; ++i) votes.push_back(uniform_permutation(rng, m));
      break;
    case CultureKind::Urn: {
      // After i draws the urn holds m! originals and i*alpha*m! copies.
      // With alpha = 0 no coin is drawn, so the stream matches IC exactly.
      const double alpha = spec.culture.alpha;
      for (int i = 0; i < n; ++i) {
        const double fresh = 1.0 / (1.0 + i * alpha);
        if (i == 0 || alpha == 0 || uniform_unit(rng) < fresh) {
          votes.push_back(uniform_permutation(rng, m));
        } else {
          votes.push_back(votes[uniform_below(rng, static_cast<std::uint64_t>(i))]);
        }
      }
      break;
    }
    case CultureKind::Mallows: {
      const double phi = calibrate_mallows_phi(m, spec.culture.normphi);
      const Vote centre = uniform_permutation(rng, m);
      std::vector<double> weights;
      for (int i = 0; i < n; ++i) votes.push_back(mallows_vote(rng, centre, phi, weights));
      break;
    }
    case CultureKind::Interval1D: {
      std::vector<double> point(static_cast<std::size_t>(m));
      for (double& p : point) p = uniform_unit(rng);
      axis.resize(static_cast<std::size_t>(m));
      std::iota(axis.begin(), axis.end(), 0);
      std::sort(axis.begin(), axis.end(), [&](int a, int b) {
        return point[a] != point[b] ? point[a] < point[b] : a < b;
      });
      for (int i = 0; i < n; ++i) {
        const double x = uniform_unit(rng);
        Vote v(static_cast<std::size_t>(m));
        std::iota(v.begin(), v.end(), 0);
        std::sort(v.begin(), v.end(), [&](int a, int b) {
          const double da = std::abs(point[a] - x), db = std::abs(point[b] - x);
          return da != db ? da < db : a < b;
        });
        votes.push_back(std::move(v));
      }
      break;
    }
    case CultureKind::Walsh:
      natural_axis();
      for (int i = 0; i < n; ++i) votes.push_back(walsh_vote(rng, m));
      break;
    case CultureKind::Conitzer:
      natural_axis();
      for (int i = 0; i < n; ++i) votes.push_back(conitzer_vote(rng, m));
      break;
  }
  return {Election(m, std::move(votes)), std::move(axis)};
}

Election sample(const CultureSpec& spec) { return sample_with_axis(spec).election; }

}  // namespace subelect
