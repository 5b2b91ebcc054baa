#pragma once

#include <span>
#include <vector>

#include "tpsm/motion.hpp"

namespace tpsm {

// Channel-major raster: data[(c * H + r) * W + col].
struct FeatureMap {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;

  static FeatureMap zeros(int channels, int height, int width);

  double at(int c, int r, int col) const {
    return data[(std::size_t(c) * height + r) * width + col];
  }
  double& at(int c, int r, int col) {
    return data[(std::size_t(c) * height + r) * width + col];
  }
  SamplingGrid grid() const { return {height, width}; }
};

// Per-pixel [0, 1] field marking how much of a warped feature survives.
struct OcclusionMask {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  double at(int r, int c) const { return values[std::size_t(r) * width + c]; }
  double& at(int r, int c) { return values[std::size_t(r) * width + c]; }
};

enum class BorderMode { clamp, zero };

// Backward bilinear sampling of src at flow's coordinates; the output takes
// the flow grid's dimensions, src may differ in size (normalized
// coordinates bridge the two). clamp replicates edge pixels; zero returns 0
// for coordinates outside [-1, 1]^2.
FeatureMap bilinear_warp(const FeatureMap& src, const DenseFlow& flow, BorderMode border);

// Elementwise product with the mask, broadcast over channels.
FeatureMap apply_mask(const FeatureMap& warped, const OcclusionMask& mask);

// 2x2 mean pooling with floor-halved dimensions (never below 1); windows
// touching the boundary clamp to the valid cells.
FeatureMap downsample(const FeatureMap& x);

// Level j is downsample applied j times; level 0 is x itself.
std::vector<FeatureMap> build_pyramid(const FeatureMap& x, int levels);

// Spatial bilinear resampling of the coordinate field. Normalized
// coordinates are resolution-independent, so values are not rescaled.
DenseFlow resize_flow(const DenseFlow& flow, SamplingGrid target);

// Level j = apply_mask(bilinear_warp(downsample^j(src), resize_flow(flow,
// level-j grid), clamp), masks[j]); level grids halve from the flow grid.
std::vector<FeatureMap> warp_mask_pyramid(const FeatureMap& src, const DenseFlow& flow,
                                          std::span<const OcclusionMask> masks, int levels);

// Dimensions after one downsample step.
inline SamplingGrid halved(SamplingGrid g) {
  return {g.height > 1 ? g.height / 2 : 1, g.width > 1 ? g.width / 2 : 1};
}

}  // namespace tpsm
