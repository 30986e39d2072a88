#include "eulerwalk/green.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace eulerwalk {

namespace {

using std::numbers::pi;

std::pair<int, int> canonical(int p, int q) {
  p = std::abs(p);
  q = std::abs(q);
  return {std::min(p, q), std::max(p, q)};
}

}  // namespace

std::optional<double> green_exact(int p, int q) {
  const auto [a, b] = canonical(p, q);
  switch (a * 4 + b) {
    case 0: return 0.0;
    case 1: return -0.25;
    case 2: return -1.0 + 2.0 / pi;
    case 3: return -17.0 / 4.0 + 12.0 / pi;
    case 5: return -1.0 / pi;
    case 6: return 0.25 - 2.0 / pi;
    case 7: return 2.0 - 23.0 / (3.0 * pi);
    case 10: return -4.0 / (3.0 * pi);
    case 11: return -0.25 - 2.0 / (3.0 * pi);
    case 15: return -23.0 / (15.0 * pi);
    default: break;
  }
  return std::nullopt;
}

double green(int p, int q, double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
  // The t-power index decays, the phase index oscillates: keep the larger one decaying.
  const auto [phase, power] = canonical(p, q);
  if (phase == 0 && power == 0) return 0.0;
  const double n = power;
  const double k = phase;

  // With u = sin(b/2): sqrt(y^2 - 1) = 2u sqrt(1 + u^2) and t = exp(-2 asinh u),
  // which keeps both factors accurate as b -> 0.
  auto integrand = [n, k](double b) {
    const double u = std::sin(0.5 * b);
    const double half = std::sin(0.5 * k * b);
    const double numerator = std::expm1(-2.0 * n * std::asinh(u)) * std::cos(k * b) - 2.0 * half * half;
    return numerator / (2.0 * u * std::sqrt(1.0 + u * u));
  };

  // The integrand is even in b and 0/0 at b = 0 with limit -n; near zero it
  // is -n + (n^2 - k^2) b / 2 + O(b^2).
  const double cut = 1e-4 / std::max(1.0, n);
  const double head = -n * cut + (n * n - k * k) * cut * cut / 4.0;

  double error = 0;
  const double body = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, cut, pi, 20, tolerance * 1e-2, &error);
  const double achieved = error / (2.0 * pi);
  if (!(achieved <= tolerance)) {
    throw QuadratureError("g(" + std::to_string(p) + "," + std::to_string(q) +
                              ") quadrature did not converge; achieved " + std::to_string(achieved),
                          achieved);
  }
  return (head + body) / (2.0 * pi);
}

double GreenKernel::operator()(int p, int q) const {
  const auto key = canonical(p, q);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::optional<double> value;
  if (source_ == GreenSource::Exact) value = green_exact(key.first, key.second);
  if (!value) value = green(key.first, key.second, tolerance_);
  std::unique_lock lock(mutex_);
  cache_.emplace(key, *value);
  return *value;
}

}  // namespace eulerwalk
