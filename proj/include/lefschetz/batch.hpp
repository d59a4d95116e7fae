// Batch evaluation and property checking over many fibrations.
//
// Each kernel has a serial reference and an OpenMP version. The parallel
// versions write results by instance index, so output never depends on
// thread scheduling.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/fibration.hpp"

namespace lefschetz {

bool operator==(const InvariantsReport& a, const InvariantsReport& b);

std::vector<InvariantsReport> evaluate_serial(std::span<const PlanarFibration> batch);
std::vector<InvariantsReport> evaluate_parallel(std::span<const PlanarFibration> batch);

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  int max_r = 4;
  int max_m = 10;
};

/// Deterministic for a given config: r uniform in 1..max_r, m uniform in
/// 0..max_m, each cycle enclosing a uniform nonempty proper boundary subset.
std::vector<PlanarFibration> random_fibrations(const FuzzConfig& config);

/// Every fibration with 0 <= r <= max_r and at most max_m cycles, each
/// cycle enclosing a nonempty proper subset of the boundary components.
/// Cycle lists are enumerated as ordered sequences.
std::vector<PlanarFibration> exhaustive_fibrations(int max_r, int max_m);

/// Names of the properties that `f` violates; empty when all hold.
std::vector<std::string> check_invariants(const PlanarFibration& f);

struct FuzzFailure {
  std::size_t index = 0;
  std::vector<std::string> violations;
};

struct FuzzSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  /// Sorted by instance index.
  std::vector<FuzzFailure> failures;
};

FuzzSummary check_serial(std::span<const PlanarFibration> batch);
FuzzSummary check_parallel(std::span<const PlanarFibration> batch);

}  // namespace lefschetz
