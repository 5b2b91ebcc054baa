#pragma once

#include <array>
#include <vector>

#include "tpsm/errors.hpp"

namespace tpsm {

// 2D point in normalized image coordinates [-1, 1]^2. Pixel centers map as
// x_pix = (x + 1) / 2 * (W - 1); see motion.hpp for the lattice helpers.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

enum class FrameTag { source, driving };

// Ordered control points belonging to one frame.
struct KeypointSet {
  std::vector<Point2> points;
  FrameTag frame = FrameTag::source;
};

// Row-major 2x3 matrix acting on homogeneous [x, y, 1]^T.
struct AffineTransform {
  std::array<double, 6> m{1.0, 0.0, 0.0, 0.0, 1.0, 0.0};

  static AffineTransform identity() { return {}; }
  static AffineTransform translation(double tx, double ty) {
    return {{1.0, 0.0, tx, 0.0, 1.0, ty}};
  }
  // Determinant of the left 2x2 block; the transform is invertible iff
  // this is nonzero.
  double linear_det() const { return m[0] * m[4] - m[1] * m[3]; }
};

// One thin-plate spline transform: affine block plus radial terms weighted
// by one 2-vector per kernel center. An empty center list degenerates to a
// plain affine transform. Solver output satisfies the side conditions
// sum_i w_i = 0, sum_i w_i x_i = 0, sum_i w_i y_i = 0 (finite bending
// energy) and interpolates its correspondences to 1e-8.
struct TpsTransform {
  AffineTransform affine;
  std::vector<Point2> weights;
  KeypointSet centers;

  static TpsTransform identity() { return {}; }
};

// U(r) = r^2 log r^2 with the continuous limit U(0) = 0. Throws
// std::domain_error for negative r.
double radial_basis(double r);

// Interpolating TPS through centers[i] -> targets[i] with minimal bending
// energy, via the dense (N+3) x (N+3) system with partial-pivoting LU.
// Requires N >= 3 non-collinear, pairwise-distinct centers. Degeneracy
// (duplicates, collinearity, condition number > 1e12) raises SingularError
// naming the offending configuration.
TpsTransform solve_tps(const KeypointSet& centers, const KeypointSet& targets);

// A [p; 1] + sum_i w_i U(|center_i - p|).
Point2 apply_tps(const TpsTransform& t, Point2 p);

// Closed-form bending energy sum_ij (w_i . w_j) U(|c_i - c_j|), the finite
// expression of the integral of squared second derivatives up to a positive
// constant. Requires the side conditions to hold within 1e-6 (the energy is
// infinite otherwise); clamped at zero against rounding.
double bending_energy(const TpsTransform& t);

Point2 apply_affine(const AffineTransform& a, Point2 p);

// Inverse affine; raises SingularError (reporting the determinant) when the
// left 2x2 block has |det| <= 1e-12.
AffineTransform invert_affine(const AffineTransform& a);

// Composition acting as a after b: apply(result, p) == apply(a, apply(b, p)).
AffineTransform compose_affine(const AffineTransform& a, const AffineTransform& b);

}  // namespace tpsm
