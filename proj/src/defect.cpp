#include "eulerwalk/defect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerwalk {

namespace {

struct Offset {
  int x;
  int y;
};

std::array<Offset, 3> bond_sites(BondGeometry geometry) {
  if (geometry == BondGeometry::A90) return {{{0, 0}, {0, 1}, {1, 0}}};
  return {{{0, 0}, {0, 1}, {0, -1}}};
}

AffineMatrix3 affine(const Matrix3& constant, const Matrix3& slope) { return {constant, slope}; }

void require_zero_row_sums(const AffineMatrix3& m, int index) {
  for (const Matrix3* part : {&m.constant, &m.slope}) {
    for (const auto& row : *part) {
      if (row[0] + row[1] + row[2] != 0.0) {
        throw std::logic_error("defect matrix B" + std::to_string(index) + " has a nonzero row sum");
      }
    }
  }
}

}  // namespace

double determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 AffineMatrix3::at(double eps) const {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = constant[i][j] + eps * slope[i][j];
  return out;
}

DefectCase DefectCase::make(BondGeometry geometry, const GreenKernel& kernel) {
  DefectCase c;
  c.geometry = geometry;
  // Weight eps on a bond forces it into the tree as eps -> infinity;
  // weight -1 deletes it.
  c.defects[0] = affine({}, {{{2, -1, -1}, {-1, 1, 0}, {-1, 0, 1}}});
  c.defects[1] = affine({{{-1, 0, 1}, {0, 0, 0}, {1, 0, -1}}}, {{{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}});
  c.defects[2] = affine({{{-1, 1, 0}, {1, -1, 0}, {0, 0, 0}}}, {{{1, 0, -1}, {0, 0, 0}, {-1, 0, 1}}});
  c.defects[3] = affine({{{-2, 1, 1}, {1, -1, 0}, {1, 0, -1}}}, {});
  for (int k = 0; k < 4; ++k) require_zero_row_sums(c.defects[k], k + 1);

  const auto sites = bond_sites(geometry);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      c.green[i][j] = kernel(sites[j].x - sites[i].x, sites[j].y - sites[i].y);
    }
  }
  return c;
}

std::array<double, 3> determinant_coefficients(const AffineMatrix3& defect, const Matrix3& green) {
  auto value_at = [&](double eps) {
    const Matrix3 b = defect.at(eps);
    Matrix3 m{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double s = i == j ? 1.0 : 0.0;
        for (int k = 0; k < 3; ++k) s += b[i][k] * green[k][j];
        m[i][j] = s;
      }
    }
    return determinant(m);
  };
  const double d1 = value_at(1), d2 = value_at(2), d3 = value_at(3);
  return {3 * d1 - 3 * d2 + d3, (-5 * d1 + 8 * d2 - 3 * d3) / 2, (d1 - 2 * d2 + d3) / 2};
}

PairProbabilities pair_probabilities(const DefectCase& defect_case) {
  PairProbabilities p;
  p.pp = determinant_coefficients(defect_case.defects[0], defect_case.green)[2];
  p.pm = determinant_coefficients(defect_case.defects[1], defect_case.green)[1];
  p.mp = determinant_coefficients(defect_case.defects[2], defect_case.green)[1];
  p.mm = determinant_coefficients(defect_case.defects[3], defect_case.green)[0];
  return p;
}

CorrelationPrediction predict_correlations(const RoutingOrder& order, const GreenKernel& kernel) {
  const PairProbabilities a = pair_probabilities(DefectCase::make(BondGeometry::A90, kernel));
  if (order.kind() == RoutingOrder::Kind::Clockwise) {
    // Successive clockwise arrows always meet at 90 degrees.
    return {a.pp, a.mp, a.mp, a.mm};
  }
  // Cross routing alternates 180-degree (N-S, E-W) and 90-degree (S-E, W-N) turns.
  const PairProbabilities b = pair_probabilities(DefectCase::make(BondGeometry::B180, kernel));
  return {(a.pp + b.pp) / 2, (a.mp + b.mp) / 2, (a.mp + b.mp) / 2, (a.mm + b.mm) / 2};
}

double predict_dimer_probability(int m, int n) {
  if (m < 3 || n < 3) throw InputError("torus requires M >= 3 and N >= 3");
  return 0.5 - 1.0 / (2.0 * static_cast<double>(m) * static_cast<double>(n));
}

}  // namespace eulerwalk
