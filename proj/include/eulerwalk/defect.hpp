#pragma once

#include <array>

#include "eulerwalk/green.hpp"
#include "eulerwalk/lattice.hpp"

namespace eulerwalk {

using Matrix3 = std::array<std::array<double, 3>, 3>;

double determinant(const Matrix3& m);

/// A 3x3 matrix whose entries are affine in the bond weight eps.
struct AffineMatrix3 {
  Matrix3 constant{};
  Matrix3 slope{};

  Matrix3 at(double eps) const;
};

/// Two lattice bonds e1 = {i0, i1}, e2 = {i0, i2} meeting at i0.
/// A90: i1 = i0 + (0,1), i2 = i0 + (1,0). B180: i1 = i0 + (0,1), i2 = i0 + (0,-1).
enum class BondGeometry { A90, B180 };

struct DefectCase {
  BondGeometry geometry = BondGeometry::A90;
  /// Both bonds forced in; e1 in, e2 out; e1 out, e2 in; both out.
  std::array<AffineMatrix3, 4> defects{};
  /// G_{ij} = g(r_j - r_i) with the divergent constant G(0) dropped.
  Matrix3 green{};

  /// Builds the case and checks every defect row sums to zero in both
  /// the constant and the eps part; throws std::logic_error otherwise.
  static DefectCase make(BondGeometry geometry, const GreenKernel& kernel);
};

/// det(I + B G) as a polynomial c0 + c1 eps + c2 eps^2, recovered exactly
/// from its values at eps = 1, 2, 3.
std::array<double, 3> determinant_coefficients(const AffineMatrix3& defect, const Matrix3& green);

/// Probabilities that bonds e1/e2 are in (+) or out (-) of a uniform
/// spanning tree of the infinite lattice.
struct PairProbabilities {
  double pp = 0;
  double pm = 0;
  double mp = 0;
  double mm = 0;
};

PairProbabilities pair_probabilities(const DefectCase& defect_case);

/// Predicted dimer/contour correlations at successive tour steps on a
/// large torus.
struct CorrelationPrediction {
  double dd = 0;
  double dc = 0;
  double cd = 0;
  double cc = 0;
};

CorrelationPrediction predict_correlations(const RoutingOrder& order, const GreenKernel& kernel = GreenKernel{});

/// Probability that a uniform unicycle's cycle is a dimer on the MxN torus.
double predict_dimer_probability(int m, int n);

}  // namespace eulerwalk
