#pragma once

#include <cstdint>

#include "tpsm/sampler.hpp"

namespace tpsm {

// Random deformation used to probe keypoint equivariance: a TPS solved on
// the G x G lattice over [-1, 1]^2 whose targets get i.i.d.
// uniform(-sigma, sigma) offsets from the seeded generator (dx then dy per
// lattice point, row-major).
struct RandomTpsSpec {
  int grid_size = 3;   // G >= 2
  double sigma = 0.1;  // > 0, normalized units
  std::uint64_t seed = 0;
};

TpsTransform random_tps(const RandomTpsSpec& spec);

// Mean absolute difference, over all 2n coordinates, between the keypoints
// detected on the warped image and the deformation applied to the keypoints
// detected on the source.
double equivariance_loss(const KeypointSet& detected_on_warped, const TpsTransform& t_ran,
                         const KeypointSet& detected_on_source);

// Sum of |entries| of lift(a_bwd) * lift(a_fwd) - I3, where lift appends the
// homogeneous row (0, 0, 1). Zero exactly when the two affines are mutual
// inverses.
double bg_consistency_loss(const AffineTransform& a_fwd, const AffineTransform& a_bwd);

// Sum over pyramid levels of the mean absolute difference between the warped
// source level and the driving level, with the fixed mean-pool pyramid as
// the feature extractor. Pixels whose sample coordinate leaves [-1, 1]^2 are
// excluded from the mean; means run over valid pixels x channels so values
// stay comparable across resolutions.
double warp_loss(const FeatureMap& src, const FeatureMap& drv, const DenseFlow& flow, int levels);

// Sum over j < scales of mean |downsample^j(a) - downsample^j(b)|.
double multires_l1(const FeatureMap& a, const FeatureMap& b, int scales);

}  // namespace tpsm
