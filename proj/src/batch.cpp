#include "lefschetz/batch.hpp"

#include <algorithm>
#include <exception>
#include <random>

#include <omp.h>

namespace lefschetz {

bool operator==(const InvariantsReport& a, const InvariantsReport& b) {
  return a.m == b.m && a.r == b.r && a.d == b.d && a.sigma == b.sigma &&
         a.b1 == b.b1 && a.b2 == b.b2 && a.euler == b.euler &&
         a.intersection_form == b.intersection_form &&
         a.definiteness == b.definiteness && a.oracle_sigma == b.oracle_sigma &&
         a.oracle_agrees == b.oracle_agrees &&
         a.outside_hypotheses == b.outside_hypotheses;
}

std::vector<InvariantsReport> evaluate_serial(std::span<const PlanarFibration> batch) {
  std::vector<InvariantsReport> out;
  out.reserve(batch.size());
  for (const auto& f : batch) out.push_back(betti_report(f));
  return out;
}

std::vector<InvariantsReport> evaluate_parallel(std::span<const PlanarFibration> batch) {
  std::vector<InvariantsReport> out(batch.size());
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = betti_report(batch[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<PlanarFibration> random_fibrations(const FuzzConfig& config) {
  if (config.max_r < 1 || config.max_m < 0)
    throw std::invalid_argument("fuzz bounds must be positive");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_r(1, config.max_r);
  std::uniform_int_distribution<int> pick_m(0, config.max_m);

  std::vector<PlanarFibration> out;
  out.reserve(config.count);
  for (std::size_t k = 0; k < config.count; ++k) {
    const int r = pick_r(rng);
    const int m = pick_m(rng);
    const PlanarSurface surface(r);
    // Bitmasks over boundary components 0..r, excluding empty and full.
    std::uniform_int_distribution<std::uint64_t> pick_mask(1, (std::uint64_t{1} << (r + 1)) - 2);
    std::vector<CurveClass> cycles;
    cycles.reserve(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) {
      const auto mask = pick_mask(rng);
      std::vector<int> subset;
      for (int i = 0; i <= r; ++i)
        if (mask >> i & 1) subset.push_back(i);
      cycles.push_back(CurveClass::enclosing(surface, std::move(subset)));
    }
    out.emplace_back(surface, std::move(cycles));
  }
  return out;
}

std::vector<PlanarFibration> exhaustive_fibrations(int max_r, int max_m) {
  std::vector<PlanarFibration> out;
  out.emplace_back(PlanarSurface(0), std::vector<CurveClass>{});
  for (int r = 1; r <= max_r; ++r) {
    const PlanarSurface surface(r);
    std::vector<CurveClass> curves;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << (r + 1)); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i <= r; ++i)
        if (mask >> i & 1) subset.push_back(i);
      curves.push_back(CurveClass::enclosing(surface, std::move(subset)));
    }
    for (int m = 0; m <= max_m; ++m) {
      std::vector<std::size_t> digits(static_cast<std::size_t>(m), 0);
      while (true) {
        std::vector<CurveClass> cycles;
        cycles.reserve(digits.size());
        for (auto d : digits) cycles.push_back(curves[d]);
        out.emplace_back(surface, std::move(cycles));

        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == curves.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    }
  }
  return out;
}

namespace {

WallResult wall_of(const PlanarSurface& surface, const std::vector<CurveClass>& cycles) {
  return wall_correction(standard_triple(surface, cycles));
}

void check_all(const PlanarFibration& f, std::vector<std::string>& bad) {
  auto expect = [&](bool ok, const char* name) {
    if (!ok) bad.emplace_back(name);
  };

  const PlanarSurface& surface = f.surface();
  const auto& cycles = f.cycles();
  const int r = f.r();
  const long m = static_cast<long>(f.m());
  const TorusBoundarySpace z(r);
  const RationalMatrix b = cycle_matrix(f);
  const auto d = static_cast<long>(rank(b));

  const WallTriple triple = standard_triple(surface, cycles);
  const WallResult wall = wall_correction(triple);
  const InvariantsReport rep = betti_report(f, wall);

  expect(signature_theorem1(f) == signature_wall_oracle(f, wall), "formula_matches_wall_oracle");
  expect(rep.oracle_agrees, "report_oracle_agrees");
  expect(wall.correction == SignatureTriple{wall.w_dim, 0, 0}, "psi_positive_definite");
  expect(static_cast<long>(wall.w_dim) == d, "w_dim_equals_cycle_rank");
  expect(wall.psi.is_symmetric(), "psi_symmetric");

  const auto kernel_route = lplus_kernel(mapping_torus_boundary_map(surface, cycles));
  expect(kernel_route == lplus_closed_form(surface, cycles), "lplus_closed_form_equals_kernel");
  expect(kernel_route == triple.l_plus(), "standard_triple_uses_kernel");

  expect(subspace_intersection(triple.l_minus(), triple.l_zero()).dim() == 0,
         "l_minus_meets_l_zero_trivially");
  Vector all_m(z.dim());
  for (int i = 0; i <= r; ++i) all_m[z.m_index(i)] = 1;
  expect(subspace_intersection(triple.l_minus(), triple.l_plus()) ==
             Subspace::span(z.dim(), {all_m}),
         "l_minus_meets_l_plus_in_sum_of_meridians");

  const auto gram = symmetric_signature(psi_gram_closed_form(surface, cycles));
  expect(gram.n_minus == 0 && static_cast<long>(gram.n_plus) == d, "gram_psd_of_cycle_rank");

  expect(rep.sigma == -m + r - rep.b1, "signature_from_b1");
  expect(rep.intersection_form == SignatureTriple{0, static_cast<std::size_t>(m - d), 0},
         "intersection_form_negative_definite");
  expect(rep.definiteness != Definiteness::Indefinite, "never_indefinite");
  expect(rep.sigma <= 0 && ((rep.sigma == 0) == (d == m)), "signature_nonpositive");

  if (m > 1) {
    std::vector<CurveClass> reversed(cycles.rbegin(), cycles.rend());
    std::vector<CurveClass> rotated(cycles.begin() + 1, cycles.end());
    rotated.push_back(cycles.front());
    for (const auto* perm : {&reversed, &rotated}) {
      const PlanarFibration g(surface, *perm);
      const WallResult w = wall_of(surface, *perm);
      expect(w.w_dim == wall.w_dim && w.correction == wall.correction &&
                 betti_report(g, w) == rep,
             "order_independent");
    }
  }

  if (m > 0) {
    std::vector<CurveClass> flipped = cycles;
    for (std::size_t s = 0; s < flipped.size(); s += 2) flipped[s] = flipped[s].negated();
    expect(wall_of(surface, flipped).sigma_correction == wall.sigma_correction,
           "sign_independent");
  }

  if (r >= 1) {
    const Subspace span = Subspace::column_span(b);
    std::vector<CurveClass> candidates{CurveClass::enclosing(surface, {1})};
    if (m > 0) candidates.push_back(cycles.front());
    for (const auto& extra : candidates) {
      std::vector<CurveClass> longer = cycles;
      longer.push_back(extra);
      const PlanarFibration g(surface, longer);
      const long drop = span.contains(to_rational(extra.vector())) ? 1 : 0;
      expect(signature_wall_oracle(g, wall_of(surface, longer)) == rep.oracle_sigma - drop,
             "append_cycle_signature_step");
    }
  }
}

FuzzFailure check_one(const PlanarFibration& f, std::size_t index) {
  FuzzFailure out{index, {}};
  try {
    check_all(f, out.violations);
  } catch (const std::exception& e) {
    out.violations.push_back(std::string("exception: ") + e.what());
  }
  return out;
}

FuzzSummary summarize(std::vector<FuzzFailure> results) {
  FuzzSummary s;
  s.total = results.size();
  for (auto& r : results) {
    if (r.violations.empty())
      ++s.passed;
    else
      s.failures.push_back(std::move(r));
  }
  return s;
}

}  // namespace

std::vector<std::string> check_invariants(const PlanarFibration& f) {
  return check_one(f, 0).violations;
}

FuzzSummary check_serial(std::span<const PlanarFibration> batch) {
  std::vector<FuzzFailure> results;
  results.reserve(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) results.push_back(check_one(batch[i], i));
  return summarize(std::move(results));
}

FuzzSummary check_parallel(std::span<const PlanarFibration> batch) {
  std::vector<FuzzFailure> results(batch.size());
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    results[k] = check_one(batch[k], k);
  }
  return summarize(std::move(results));
}

}  // namespace lefschetz
