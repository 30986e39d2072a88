#pragma once

#include <array>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "eulerwalk/lattice.hpp"
#include "eulerwalk/rng.hpp"
#include "eulerwalk/stats.hpp"
#include "eulerwalk/tour.hpp"

namespace eulerwalk {

/// Sample i always draws from SeededRng(seed, i), so results do not depend
/// on how samples are spread over threads.
struct SampleConfig {
  std::uint64_t seed = 1;
  std::int64_t samples = 1;
  int threads = 0;  // 0: hardware concurrency
};

int resolve_threads(int requested);

/// Runs body(index, acc) for every sample index on a pool of workers, each
/// with a private accumulator; accumulators are merged with += in worker
/// order. Accumulators must form a commutative monoid for the result to be
/// independent of the thread count.
template <class Acc, class Body>
Acc run_samples(const SampleConfig& config, Body&& body, Acc init = Acc{}) {
  const std::int64_t n = config.samples;
  const int workers = static_cast<int>(std::min<std::int64_t>(resolve_threads(config.threads), std::max<std::int64_t>(n, 1)));
  std::vector<Acc> partial(static_cast<std::size_t>(workers), init);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      const std::int64_t begin = n * w / workers;
      const std::int64_t end = n * (w + 1) / workers;
      for (std::int64_t i = begin; i < end; ++i) body(i, partial[static_cast<std::size_t>(w)]);
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc total = init;
  for (const auto& p : partial) total += p;
  return total;
}

// ---------------------------------------------------------------------------
// Full-tour contour/dimer balance.

struct DeltaDistribution {
  Histogram histogram;
  Moments moments;
};

/// Draws a uniform unicycle with the chip at vertex 0 per sample, runs a
/// full Euler tour and records contours - dimers.
DeltaDistribution delta_distribution(const Lattice& lattice, const RoutingOrder& order,
                                     const SampleConfig& config);

// ---------------------------------------------------------------------------
// Successive-state correlations.

struct CorrelationEstimate {
  std::int64_t tours = 0;
  std::int64_t states = 0;
  PairCounts pairs;
  std::int64_t dimers = 0;

  double dimer_fraction = 0;
  double dimer_fraction_se = 0;
  PairFrequencies frequencies;
  /// Standard errors from the spread of per-tour frequencies (tours are
  /// independent; steps within a tour are not).
  PairFrequencies standard_errors;
};

CorrelationEstimate estimate_correlations(const Lattice& lattice, const RoutingOrder& order,
                                          const SampleConfig& config);

// ---------------------------------------------------------------------------
// Mean-square displacement.

struct FitWindow {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

/// [0, n] with n the shorter side of the lattice: the short-time linear
/// regime. Later times bend as the walk starts to feel the torus.
FitWindow default_msd_window(const Lattice& lattice);

struct MsdCurve {
  std::int64_t samples = 0;
  std::vector<double> mean_r2;  // index t = 0..t_max
  FitWindow window;
  LinearFit fit;
};

/// Averages r(t)^2 over recorded logs and fits the slope over `window`.
MsdCurve msd_curve(std::span<const TourLog> logs, std::int64_t t_max, FitWindow window);

/// Streaming version: draws uniform unicycles (chip at vertex 0) and
/// accumulates r(t)^2 for t <= t_max without storing logs.
MsdCurve estimate_msd(const Lattice& lattice, const RoutingOrder& order, const SampleConfig& config,
                      std::int64_t t_max, FitWindow window);

// ---------------------------------------------------------------------------
// Contour reversal on planar grids.

struct PlanarCheckReport {
  std::int64_t samples = 0;
  std::int64_t rejected_draws = 0;
  std::int64_t delta_violations = 0;     // reversal delta != -1
  std::int64_t external_violations = 0;  // an external rotor moved
  std::int64_t internal_violations = 0;  // an internal rotor missed a full turn
  std::int64_t reversal_failures = 0;    // final cycle not the reversed contour
  std::int64_t stage_samples = 0;        // samples with all three stages seen
  std::int64_t stage_violations = 0;     // s1 + s2 + s3 != area - 1
  std::int64_t max_steps = 0;
  std::int64_t max_area = 0;
  Histogram delta_histogram;

  PlanarCheckReport& operator+=(const PlanarCheckReport& o);
  bool all_passed() const {
    return delta_violations == 0 && external_violations == 0 && internal_violations == 0 &&
           reversal_failures == 0 && stage_violations == 0;
  }
};

/// Per sample: uniform chip, uniform unicycle, redrawn from the same stream
/// until the chip's cycle is a clockwise contour; then the reversal
/// experiment under clockwise routing.
PlanarCheckReport planar_check(const Lattice& lattice, const SampleConfig& config);

// ---------------------------------------------------------------------------
// Second-segment balance on the torus.

struct ConjectureReport {
  std::int64_t samples = 0;
  std::int64_t rejected_draws = 0;
  std::int64_t additivity_failures = 0;   // open segments do not sum to the tour delta
  std::int64_t first_segment_failures = 0;  // closed first segment != -1
  Histogram return_delta;  // delta over [rho-bar, rho), terminal excluded
  Histogram tour_delta;

  ConjectureReport& operator+=(const ConjectureReport& o);
  std::int64_t min_return_delta() const { return return_delta.empty() ? 0 : return_delta.begin()->first; }
};

/// Conditions on a contractible clockwise contour through the chip, splits
/// the tour at the reversed-contour state and measures both segments.
ConjectureReport conjecture_check(const Lattice& lattice, const SampleConfig& config);

}  // namespace eulerwalk
