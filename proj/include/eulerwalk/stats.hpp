#pragma once

#include <cstdint>
#include <map>
#include <span>

namespace eulerwalk {

using Histogram = std::map<std::int64_t, std::int64_t>;

void merge_into(Histogram& into, const Histogram& from);

/// Central moments of an integer-valued sample given as a histogram.
struct Moments {
  std::int64_t count = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  double mean = 0;
  double m2 = 0;  // population central moments
  double m3 = 0;
  double m4 = 0;
  double skewness = 0;         // m3 / m2^{3/2}
  double excess_kurtosis = 0;  // m4 / m2^2 - 3
  double mean_standard_error = 0;
};

Moments moments_of(const Histogram& histogram);

/// Ordinary least squares y = intercept + slope * x.
struct LinearFit {
  double slope = 0;
  double intercept = 0;
  std::int64_t points = 0;
};

/// Fits ys[t] against t for t in [first, last].
LinearFit fit_line(std::span<const double> ys, std::int64_t first, std::int64_t last);

}  // namespace eulerwalk
