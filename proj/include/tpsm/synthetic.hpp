#pragma once

#include <span>

#include "tpsm/motion.hpp"

namespace tpsm {

// Defaults used by the CLI when no contribution file is given.
inline constexpr double kDefaultContribSigma = 0.15;
inline constexpr double kDefaultContribGain = 5.0;

// Contribution logits with a Gaussian bump around each keypoint: channel 0
// stays at zero, channel k gets gain * sum_i exp(-|p - c_ki|^2 / (2 sigma^2))
// over the k-th group's points.
ContributionLogits gaussian_bump_logits(std::span<const KeypointSet> groups, SamplingGrid grid,
                                        double sigma, double gain);

}  // namespace tpsm
