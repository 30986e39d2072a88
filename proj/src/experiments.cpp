#include "eulerwalk/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "eulerwalk/reversal.hpp"
#include "eulerwalk/sampler.hpp"

namespace eulerwalk {

namespace {

constexpr int kMaxConditioningDraws = 100000;

struct HistogramAcc {
  Histogram histogram;
  HistogramAcc& operator+=(const HistogramAcc& o) {
    merge_into(histogram, o.histogram);
    return *this;
  }
};

struct CorrelationAcc {
  std::int64_t tours = 0;
  std::int64_t states = 0;
  std::int64_t dimers = 0;
  std::int64_t dimers_sq = 0;
  PairCounts pairs;
  std::array<std::int64_t, 4> pairs_sq{};

  CorrelationAcc& operator+=(const CorrelationAcc& o) {
    tours += o.tours;
    states += o.states;
    dimers += o.dimers;
    dimers_sq += o.dimers_sq;
    pairs += o.pairs;
    for (int k = 0; k < 4; ++k) pairs_sq[k] += o.pairs_sq[k];
    return *this;
  }
};

struct MsdAcc {
  std::int64_t samples = 0;
  std::vector<std::int64_t> sums;

  MsdAcc& operator+=(const MsdAcc& o) {
    samples += o.samples;
    if (sums.size() < o.sums.size()) sums.resize(o.sums.size(), 0);
    for (std::size_t t = 0; t < o.sums.size(); ++t) sums[t] += o.sums[t];
    return *this;
  }
};

TourOptions counting_only() {
  TourOptions options;
  options.record_kinds = false;
  options.record_delta = false;
  options.check_recurrent = false;
  return options;
}

// Standard error of the mean of per-tour frequencies x_i = c_i / m.
double tour_mean_se(std::int64_t sum, std::int64_t sum_sq, std::int64_t tours, std::int64_t m) {
  if (tours < 2) return 0.0;
  const long double n = tours;
  const long double var_counts = (static_cast<long double>(sum_sq) - static_cast<long double>(sum) * sum / n) / (n - 1);
  const long double scale = static_cast<long double>(m) * m;
  return static_cast<double>(std::sqrt(std::max<long double>(var_counts, 0) / scale / n));
}

template <class Accept>
RotorState draw_conditioned(const Lattice& lattice, SeededRng& rng, bool random_chip, Accept&& accept,
                            std::int64_t& rejected) {
  for (int attempt = 0; attempt < kMaxConditioningDraws; ++attempt) {
    const VertexId chip =
        random_chip ? static_cast<VertexId>(rng.below(static_cast<std::uint32_t>(lattice.vertex_count()))) : 0;
    RotorState state = sample_unicycle(lattice, chip, rng);
    if (accept(state)) return state;
    ++rejected;
  }
  throw InvariantViolation("no conditioned state found after " + std::to_string(kMaxConditioningDraws) + " draws");
}

bool has_clockwise_contour(const RotorState& state, const Lattice& lattice) {
  if (cycle_kind(state, lattice) == CycleKind::Dimer) return false;
  return find_cycle(state, lattice).orientation == Orientation::CW;
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

DeltaDistribution delta_distribution(const Lattice& lattice, const RoutingOrder& order,
                                     const SampleConfig& config) {
  const TourOptions options = counting_only();
  auto acc = run_samples<HistogramAcc>(config, [&](std::int64_t i, HistogramAcc& out) {
    SeededRng rng(config.seed, static_cast<std::uint64_t>(i));
    const RotorState state = sample_unicycle(lattice, 0, rng);
    ++out.histogram[run_euler_tour(state, lattice, order, options).delta()];
  });
  DeltaDistribution result;
  result.histogram = std::move(acc.histogram);
  result.moments = moments_of(result.histogram);
  return result;
}

CorrelationEstimate estimate_correlations(const Lattice& lattice, const RoutingOrder& order,
                                          const SampleConfig& config) {
  const TourOptions options = counting_only();
  auto acc = run_samples<CorrelationAcc>(config, [&](std::int64_t i, CorrelationAcc& out) {
    SeededRng rng(config.seed, static_cast<std::uint64_t>(i));
    const RotorState state = sample_unicycle(lattice, 0, rng);
    const TourLog log = run_euler_tour(state, lattice, order, options);
    ++out.tours;
    out.states += log.steps;
    out.dimers += log.dimers;
    out.dimers_sq += log.dimers * log.dimers;
    out.pairs += log.pairs;
    const std::array<std::int64_t, 4> c{log.pairs.dd, log.pairs.dc, log.pairs.cd, log.pairs.cc};
    for (int k = 0; k < 4; ++k) out.pairs_sq[k] += c[k] * c[k];
  });

  CorrelationEstimate e;
  e.tours = acc.tours;
  e.states = acc.states;
  e.pairs = acc.pairs;
  e.dimers = acc.dimers;
  if (e.states == 0) return e;
  const std::int64_t m = lattice.directed_edge_count();
  e.dimer_fraction = static_cast<double>(e.dimers) / static_cast<double>(e.states);
  e.dimer_fraction_se = tour_mean_se(acc.dimers, acc.dimers_sq, acc.tours, m);
  const auto total = static_cast<double>(e.pairs.total());
  e.frequencies = {e.pairs.dd / total, e.pairs.dc / total, e.pairs.cd / total, e.pairs.cc / total};
  e.standard_errors = {tour_mean_se(acc.pairs.dd, acc.pairs_sq[0], acc.tours, m),
                       tour_mean_se(acc.pairs.dc, acc.pairs_sq[1], acc.tours, m),
                       tour_mean_se(acc.pairs.cd, acc.pairs_sq[2], acc.tours, m),
                       tour_mean_se(acc.pairs.cc, acc.pairs_sq[3], acc.tours, m)};
  return e;
}

FitWindow default_msd_window(const Lattice& lattice) {
  const std::int64_t n = std::min(lattice.width(), lattice.height());
  return {0, n};
}

namespace {

MsdCurve finish_curve(std::vector<double> mean_r2, std::int64_t samples, FitWindow window) {
  MsdCurve curve;
  curve.samples = samples;
  curve.mean_r2 = std::move(mean_r2);
  curve.window = window;
  curve.fit = fit_line(curve.mean_r2, window.first, window.last);
  return curve;
}

}  // namespace

MsdCurve msd_curve(std::span<const TourLog> logs, std::int64_t t_max, FitWindow window) {
  if (logs.empty()) throw InputError("msd_curve needs at least one log");
  if (t_max < 1) throw InputError("msd_curve needs t_max >= 1");
  std::vector<long double> sums(static_cast<std::size_t>(t_max) + 1, 0);
  for (const TourLog& log : logs) {
    if (static_cast<std::int64_t>(log.msd.size()) < t_max + 1) {
      throw InputError("log has only " + std::to_string(log.msd.size()) + " displacement entries");
    }
    for (std::int64_t t = 0; t <= t_max; ++t) sums[static_cast<std::size_t>(t)] += log.msd[static_cast<std::size_t>(t)];
  }
  std::vector<double> mean(sums.size());
  for (std::size_t t = 0; t < sums.size(); ++t) mean[t] = static_cast<double>(sums[t] / logs.size());
  return finish_curve(std::move(mean), static_cast<std::int64_t>(logs.size()), window);
}

MsdCurve estimate_msd(const Lattice& lattice, const RoutingOrder& order, const SampleConfig& config,
                      std::int64_t t_max, FitWindow window) {
  if (t_max < 1) throw InputError("estimate_msd needs t_max >= 1");
  if (config.samples < 1) throw InputError("estimate_msd needs at least one sample");
  TourOptions options = counting_only();
  options.record_msd = true;
  options.msd_horizon = t_max;
  auto never = [](const RotorState&) { return false; };
  auto acc = run_samples<MsdAcc>(config, [&](std::int64_t i, MsdAcc& out) {
    SeededRng rng(config.seed, static_cast<std::uint64_t>(i));
    RotorState state = sample_unicycle(lattice, 0, rng);
    const TourLog log = run_sub_tour(state, lattice, order, never, t_max, options);
    if (out.sums.empty()) out.sums.assign(static_cast<std::size_t>(t_max) + 1, 0);
    for (std::size_t t = 0; t < log.msd.size(); ++t) out.sums[t] += log.msd[t];
    ++out.samples;
  });
  std::vector<double> mean(acc.sums.size());
  for (std::size_t t = 0; t < acc.sums.size(); ++t) {
    mean[t] = static_cast<double>(acc.sums[t]) / static_cast<double>(acc.samples);
  }
  return finish_curve(std::move(mean), acc.samples, window);
}

PlanarCheckReport& PlanarCheckReport::operator+=(const PlanarCheckReport& o) {
  samples += o.samples;
  rejected_draws += o.rejected_draws;
  delta_violations += o.delta_violations;
  external_violations += o.external_violations;
  internal_violations += o.internal_violations;
  reversal_failures += o.reversal_failures;
  stage_samples += o.stage_samples;
  stage_violations += o.stage_violations;
  max_steps = std::max(max_steps, o.max_steps);
  max_area = std::max(max_area, o.max_area);
  merge_into(delta_histogram, o.delta_histogram);
  return *this;
}

PlanarCheckReport planar_check(const Lattice& lattice, const SampleConfig& config) {
  const RoutingOrder order = RoutingOrder::clockwise();
  return run_samples<PlanarCheckReport>(config, [&](std::int64_t i, PlanarCheckReport& out) {
    SeededRng rng(config.seed, static_cast<std::uint64_t>(i));
    const RotorState state = draw_conditioned(
        lattice, rng, true, [&](const RotorState& s) { return has_clockwise_contour(s, lattice); },
        out.rejected_draws);
    const ReversalReport r = planar_reversal_experiment(lattice, state, order);
    ++out.samples;
    ++out.delta_histogram[r.delta];
    if (r.delta != -1) ++out.delta_violations;
    if (r.external_changed) ++out.external_violations;
    if (!r.internal_full_rotation) ++out.internal_violations;
    if (!r.cycle_reversed) ++out.reversal_failures;
    if (r.stages_recorded) {
      ++out.stage_samples;
      const std::int64_t sum = r.stage_areas[0] + r.stage_areas[1] + r.stage_areas[2];
      if (sum != r.contour_area - 1) ++out.stage_violations;
    }
    out.max_steps = std::max(out.max_steps, r.steps_taken);
    out.max_area = std::max(out.max_area, r.contour_area);
  });
}

ConjectureReport& ConjectureReport::operator+=(const ConjectureReport& o) {
  samples += o.samples;
  rejected_draws += o.rejected_draws;
  additivity_failures += o.additivity_failures;
  first_segment_failures += o.first_segment_failures;
  merge_into(return_delta, o.return_delta);
  merge_into(tour_delta, o.tour_delta);
  return *this;
}

ConjectureReport conjecture_check(const Lattice& lattice, const SampleConfig& config) {
  if (!lattice.is_torus()) throw InputError("conjecture check runs on a torus");
  const RoutingOrder order = RoutingOrder::clockwise();
  const std::int64_t m = lattice.directed_edge_count();
  const TourOptions options = counting_only();
  return run_samples<ConjectureReport>(config, [&](std::int64_t i, ConjectureReport& out) {
    SeededRng rng(config.seed, static_cast<std::uint64_t>(i));
    const RotorState initial = draw_conditioned(
        lattice, rng, false, [&](const RotorState& s) { return has_clockwise_contour(s, lattice); },
        out.rejected_draws);
    const CycleInfo cycle = find_cycle(initial, lattice);

    const TourLog full = run_euler_tour(initial, lattice, order, options);

    RotorState walker = initial;
    ReachesConfiguration reversed(reversed_cycle_arrows(initial, cycle, lattice), initial.chip);
    const TourLog first = run_sub_tour(walker, lattice, order, reversed, m, options);
    if (first.truncated) throw InvariantViolation("reversed contour never appeared within one tour");
    const std::int64_t first_closed = first.delta() + (cycle_kind(walker, lattice) == CycleKind::Contour ? 1 : -1);

    ReachesConfiguration back(initial.arrows, initial.chip);
    const TourLog second = run_sub_tour(walker, lattice, order, back, m, options);
    if (second.truncated) throw InvariantViolation("tour did not return to the initial state");

    ++out.samples;
    if (first_closed != -1) ++out.first_segment_failures;
    if (first.delta() + second.delta() != full.delta() || first.steps + second.steps != m) {
      ++out.additivity_failures;
    }
    ++out.return_delta[second.delta()];
    ++out.tour_delta[full.delta()];
  });
}

}  // namespace eulerwalk
