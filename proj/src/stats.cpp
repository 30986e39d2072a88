#include "eulerwalk/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerwalk {

void merge_into(Histogram& into, const Histogram& from) {
  for (const auto& [value, count] : from) into[value] += count;
}

Moments moments_of(const Histogram& histogram) {
  Moments m;
  long double sum = 0;
  for (const auto& [value, count] : histogram) {
    m.count += count;
    sum += static_cast<long double>(value) * count;
  }
  if (m.count == 0) return m;
  m.min = histogram.begin()->first;
  m.max = histogram.rbegin()->first;
  const long double mean = sum / m.count;
  long double c2 = 0, c3 = 0, c4 = 0;
  for (const auto& [value, count] : histogram) {
    const long double d = value - mean;
    const long double d2 = d * d;
    c2 += d2 * count;
    c3 += d2 * d * count;
    c4 += d2 * d2 * count;
  }
  m.mean = static_cast<double>(mean);
  m.m2 = static_cast<double>(c2 / m.count);
  m.m3 = static_cast<double>(c3 / m.count);
  m.m4 = static_cast<double>(c4 / m.count);
  if (m.m2 > 0) {
    m.skewness = m.m3 / std::pow(m.m2, 1.5);
    m.excess_kurtosis = m.m4 / (m.m2 * m.m2) - 3.0;
  }
  if (m.count > 1) m.mean_standard_error = std::sqrt(static_cast<double>(c2 / (m.count - 1)) / m.count);
  return m;
}

LinearFit fit_line(std::span<const double> ys, std::int64_t first, std::int64_t last) {
  if (first < 0 || last < first || last >= static_cast<std::int64_t>(ys.size())) {
    throw std::invalid_argument("fit window outside the data");
  }
  if (last == first) throw std::invalid_argument("fit window needs at least two points");
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<long double>(last - first + 1);
  for (std::int64_t t = first; t <= last; ++t) {
    const long double x = t;
    const long double y = ys[static_cast<std::size_t>(t)];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {static_cast<double>(slope), static_cast<double>((sy - slope * sx) / n),
          static_cast<std::int64_t>(n)};
}

}  // namespace eulerwalk
