#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace eulerwalk {

/// Quadrature failed to reach the requested absolute tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Finite part g_{p,q} of the infinite square-lattice Green function,
/// G(r) = G(0) + g(r), normalised so that g(0,0) = 0 and g(0,1) = -1/4.
///
/// Evaluated by one-dimensional adaptive Gauss-Kronrod quadrature after the
/// inner integral has been done in closed form:
///   g_{p,q} = 1/(4 pi) * int_{-pi}^{pi} (t^|p| e^{i q b} - 1) / sqrt(y^2 - 1) db,
///   y = 2 - cos b,  t = y - sqrt(y^2 - 1).
/// Throws QuadratureError if the error estimate exceeds `tolerance`.
double green(int p, int q, double tolerance = 1e-12);

/// Closed forms for |p|, |q| <= 3; nullopt outside that table.
std::optional<double> green_exact(int p, int q);

enum class GreenSource { Exact, Quadrature };

/// Memoising evaluator. Tabulated values come from the closed forms when
/// the source is Exact; everything else falls back to quadrature.
class GreenKernel {
 public:
  explicit GreenKernel(GreenSource source = GreenSource::Exact, double tolerance = 1e-12)
      : source_(source), tolerance_(tolerance) {}

  double operator()(int p, int q) const;
  double tolerance() const { return tolerance_; }
  GreenSource source() const { return source_; }

 private:
  GreenSource source_;
  double tolerance_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<int, int>, double> cache_;
};

}  // namespace eulerwalk
