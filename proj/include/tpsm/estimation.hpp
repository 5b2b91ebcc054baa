#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tpsm/motion.hpp"

namespace tpsm {

// The N source/driving pairs generating one TPS transform. The forward
// model solves each transform with centers = driving, targets = source
// (backward-warping convention).
struct TransformKeypoints {
  KeypointSet source;
  KeypointSet driving;
};
using CandidateKeypoints = std::vector<TransformKeypoints>;

struct PixelIndex {
  int row = 0;
  int col = 0;
};

// Inverse problem: recover the keypoints (and optionally the background
// affine) whose forward model reproduces `target`. Contribution maps are
// held fixed. Needs at least 2*K*N probe pixels so the residual has at
// least as many scalars as unknowns.
struct FitProblem {
  DenseFlow target;
  int num_tps = 0;         // K
  int points_per_tps = 0;  // N
  ContributionMaps contribs;
  AffineTransform bg = AffineTransform::identity();
  bool bg_free = false;
  std::vector<PixelIndex> sample_pixels;
};

// Uniform per_axis x per_axis probe subgrid (all rows/cols when the grid is
// smaller than per_axis).
std::vector<PixelIndex> uniform_probe_pixels(SamplingGrid grid, int per_axis);

struct ResidualEval {
  bool feasible = false;   // false when a candidate's TPS solve is degenerate
  Eigen::VectorXd values;  // two entries (dx, dy) per probe pixel
};

struct FitConfig {
  int max_iter = 100;
  double initial_damping = 1e-3;  // lambda_0
  double damping_cap = 1e8;
  double tol = 1e-10;     // on both step norm and residual rms
  double fd_step = 1e-5;  // central-difference step, normalized units
};

struct FitReport {
  CandidateKeypoints keypoints;
  AffineTransform bg;
  double residual_rms = 0.0;
  int iterations = 0;
  bool converged = false;
  double damping_final = 0.0;
  std::string termination;
};

// Forward-model flow minus target at every probe pixel, flattened
// (dx, dy) per pixel. A degenerate candidate comes back with
// feasible = false instead of throwing.
ResidualEval flow_residual(const CandidateKeypoints& candidate, const FitProblem& problem);

// Central finite differences of flow_residual. Columns follow the parameter
// packing: per transform, source x/y for each point, then driving x/y; the
// six background entries (row-major) are appended when problem.bg_free.
Eigen::MatrixXd numeric_jacobian(const CandidateKeypoints& candidate, const FitProblem& problem,
                                 double step);

// Levenberg-Marquardt with multiplicative damping (x10 on rejection, /10 on
// acceptance). Accepted residual norms decrease monotonically; terminates on
// step norm < tol, residual rms < tol, max_iter, or the damping cap (all
// steps rejected), and the report says which.
FitReport fit_keypoints(const FitProblem& problem, const CandidateKeypoints& init,
                        const FitConfig& config);

}  // namespace tpsm
