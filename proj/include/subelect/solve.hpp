#pragma once

// One entry point for every problem variant and matching case.

#include <cstdint>
#include <optional>

#include "subelect/core.hpp"

namespace subelect {

enum class SolveMethod { Auto, BruteForce };

struct SolveOutcome {
  // Decision variants: whether a witness exists. Maximisation variants:
  // true unless a threshold was given and the optimum falls below it.
  bool success = false;
  std::optional<IsoWitness> witness;  // optimum / certificate, if any
};

// Validates the matching case, then runs the polynomial solver where one
// exists and the exact exponential one otherwise. BruteForce is available
// for the maximisation variants only and may throw SizeLimitError.
SolveOutcome solve(const Election& e1, const Election& e2, Variant variant, const MatchingCase& mc,
                   std::optional<std::int64_t> threshold = std::nullopt, SolveMethod method = SolveMethod::Auto);

bool is_decision_variant(Variant v);

}  // namespace subelect
