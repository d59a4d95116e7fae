#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/batch.hpp"
#include "lefschetz/document.hpp"

using namespace lefschetz;

TEST_CASE("random fibrations are deterministic per seed") {
  const FuzzConfig config{42, 50, 5, 12};
  const auto a = random_fibrations(config);
  const auto b = random_fibrations(config);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(fibration_to_json(a[i]) == fibration_to_json(b[i]));
    CHECK(a[i].r() >= 1);
    CHECK(a[i].r() <= 5);
    CHECK(a[i].m() <= 12);
    for (const auto& c : a[i].cycles()) CHECK(c.allowable());
  }
  CHECK(random_fibrations({1, 0, 3, 3}).empty());
  CHECK_THROWS(random_fibrations({1, 5, 0, 3}));
}

TEST_CASE("exhaustive enumeration counts ordered cycle lists") {
  // r = 0: 1; r = 1: 2 curves, 1 + 2 + 4; r = 2: 6 curves, 1 + 6 + 36.
  CHECK(exhaustive_fibrations(2, 2).size() == 51);
  CHECK(exhaustive_fibrations(0, 3).size() == 1);
}

TEST_CASE("parallel evaluation matches the serial reference") {
  const auto batch = random_fibrations({7, 120, 6, 20});
  const auto serial = evaluate_serial(batch);
  const auto parallel = evaluate_parallel(batch);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("invariant checks pass on random and exhaustive instances") {
  const auto batch = random_fibrations({1, 100, 4, 10});
  const auto serial = check_serial(batch);
  const auto parallel = check_parallel(batch);
  CHECK(serial.total == 100);
  CHECK(serial.passed == 100);
  CHECK(serial.failures.empty());
  CHECK(parallel.passed == serial.passed);

  const auto small = exhaustive_fibrations(2, 3);
  const auto summary = check_parallel(small);
  CHECK(summary.passed == small.size());
}

TEST_CASE("invariant checks run on the example families") {
  for (int r = 2; r <= 5; ++r) {
    CHECK(check_invariants(example_y1(r)).empty());
    CHECK(check_invariants(example_y2(r)).empty());
  }
}
