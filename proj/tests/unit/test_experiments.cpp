#include <doctest.h>

#include <cmath>

#include "eulerwalk/experiments.hpp"
#include "eulerwalk/stats.hpp"

using namespace eulerwalk;

TEST_CASE("moments of a histogram") {
  // Sample {1, 2, 2, 3, 7}.
  const Histogram h{{1, 1}, {2, 2}, {3, 1}, {7, 1}};
  const Moments m = moments_of(h);
  CHECK(m.count == 5);
  CHECK(m.min == 1);
  CHECK(m.max == 7);
  CHECK(m.mean == doctest::Approx(3.0));
  // Central deviations -2, -1, -1, 0, 4.
  CHECK(m.m2 == doctest::Approx(22.0 / 5));
  CHECK(m.m3 == doctest::Approx((-8 - 1 - 1 + 64) / 5.0));
  CHECK(m.m4 == doctest::Approx((16 + 1 + 1 + 256) / 5.0));
  CHECK(m.skewness == doctest::Approx(m.m3 / std::pow(m.m2, 1.5)));
  CHECK(m.excess_kurtosis == doctest::Approx(m.m4 / (m.m2 * m.m2) - 3));
  CHECK(m.mean_standard_error == doctest::Approx(std::sqrt(22.0 / 4 / 5)));
}

TEST_CASE("histogram merge") {
  Histogram a{{1, 2}, {3, 1}};
  merge_into(a, Histogram{{3, 4}, {-2, 1}});
  CHECK(a == Histogram{{-2, 1}, {1, 2}, {3, 5}});
}

TEST_CASE("least squares line") {
  std::vector<double> ys;
  for (int t = 0; t < 20; ++t) ys.push_back(2.5 * t - 1);
  LinearFit f = fit_line(ys, 0, 19);
  CHECK(f.slope == doctest::Approx(2.5));
  CHECK(f.intercept == doctest::Approx(-1));
  CHECK(f.points == 20);
  ys[0] = 100;  // outside the window
  f = fit_line(ys, 5, 10);
  CHECK(f.slope == doctest::Approx(2.5));
  CHECK_THROWS_AS(fit_line(ys, 5, 20), std::invalid_argument);
  CHECK_THROWS_AS(fit_line(ys, 5, 5), std::invalid_argument);
}

TEST_CASE("run_samples merges independent of thread count") {
  struct Sum {
    std::int64_t total = 0;
    std::int64_t count = 0;
    Sum& operator+=(const Sum& o) {
      total += o.total;
      count += o.count;
      return *this;
    }
  };
  auto body = [](std::int64_t i, Sum& acc) {
    acc.total += i * i;
    ++acc.count;
  };
  for (int threads : {1, 2, 3, 8}) {
    const Sum s = run_samples<Sum>({1, 1000, threads}, body);
    CHECK(s.count == 1000);
    CHECK(s.total == 999LL * 1000 * 1999 / 6);
  }
  CHECK_THROWS_AS(run_samples<Sum>({1, 10, 4}, [](std::int64_t i, Sum&) {
                    if (i == 7) throw StateError("boom");
                  }),
                  StateError);
}

TEST_CASE("experiments are reproducible across thread counts") {
  const Lattice t = Lattice::torus(8, 8);
  const auto order = RoutingOrder::cross();
  const DeltaDistribution a = delta_distribution(t, order, {5, 40, 1});
  const DeltaDistribution b = delta_distribution(t, order, {5, 40, 4});
  CHECK(a.histogram == b.histogram);

  const CorrelationEstimate c1 = estimate_correlations(t, order, {5, 20, 1});
  const CorrelationEstimate c2 = estimate_correlations(t, order, {5, 20, 3});
  CHECK(c1.pairs == c2.pairs);
  CHECK(c1.standard_errors.dd == c2.standard_errors.dd);
  CHECK(c1.dimer_fraction_se == c2.dimer_fraction_se);
  CHECK(c1.states == 20 * 256);
  CHECK(c1.pairs.total() == c1.states);

  const MsdCurve m1 = estimate_msd(t, order, {5, 10, 1}, 16, {0, 8});
  const MsdCurve m2 = estimate_msd(t, order, {5, 10, 2}, 16, {0, 8});
  CHECK(m1.mean_r2 == m2.mean_r2);
  CHECK(m1.mean_r2.size() == 17);
}

TEST_CASE("delta distribution on a small torus") {
  // The mean over uniform unicycles is exactly 4; 2000 tours on Torus(4,4).
  const Lattice t = Lattice::torus(4, 4);
  for (const auto& order : {RoutingOrder::clockwise(), RoutingOrder::cross()}) {
    const DeltaDistribution d = delta_distribution(t, order, {17, 2000, 0});
    CHECK(d.moments.count == 2000);
    CHECK(std::abs(d.moments.mean - 4) < 4 * d.moments.mean_standard_error);
    // Delta over a tour of even length is even.
    for (const auto& [delta, n] : d.histogram) CHECK(delta % 2 == 0);
  }
}

TEST_CASE("msd default window") {
  CHECK(default_msd_window(Lattice::torus(100, 100)).first == 0);
  CHECK(default_msd_window(Lattice::torus(100, 100)).last == 100);
  CHECK(default_msd_window(Lattice::torus(30, 50)).last == 30);
}

TEST_CASE("planar check on a small grid") {
  const PlanarCheckReport r = planar_check(Lattice::planar_grid(6, 6), {3, 100, 0});
  CHECK(r.samples == 100);
  CHECK(r.all_passed());
  CHECK(r.delta_histogram == Histogram{{-1, 100}});
  CHECK(r.stage_samples > 0);
}

TEST_CASE("conjecture check segments add up") {
  const ConjectureReport r = conjecture_check(Lattice::torus(8, 8), {3, 40, 0});
  CHECK(r.samples == 40);
  CHECK(r.additivity_failures == 0);
  CHECK(r.first_segment_failures == 0);
  std::int64_t n = 0;
  for (const auto& [d, c] : r.return_delta) n += c;
  CHECK(n == 40);
  CHECK_THROWS_AS(conjecture_check(Lattice::planar_grid(5, 5), {3, 1, 1}), InputError);
}
