#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tpsm/geometry.hpp"

namespace tpsm {

struct SamplingGrid {
  int height = 0;
  int width = 0;
  bool operator==(const SamplingGrid&) const = default;
  std::size_t pixels() const { return std::size_t(height) * std::size_t(width); }
};

// Positions within kGridSnapEpsilon pixels of an integer lattice point snap
// exactly, so lattice round trips (normalized -> pixel) reproduce integer
// positions bit for bit; the measured round-trip rounding error is below
// 1e-12 px for any practical extent.
inline constexpr double kGridSnapEpsilon = 1e-9;

// Normalized coordinate of pixel center `index` on an axis with `extent`
// pixels: 2 i / (extent - 1) - 1; a single-pixel axis maps to 0.
double lattice_coord(int index, int extent);
// Fractional pixel position of a normalized coordinate (with the snap above).
double pixel_coord(double normalized, int extent);
double normalized_from_pixel(double pixel, int extent);

// Backward mapping field: at(r, c) is the normalized source coordinate
// sampled when producing output pixel (r, c). Values may leave [-1, 1]^2;
// the sampler's border mode decides what happens there.
struct DenseFlow {
  SamplingGrid grid;
  std::vector<Point2> coords;  // row-major

  const Point2& at(int r, int c) const { return coords[std::size_t(r) * grid.width + c]; }
  Point2& at(int r, int c) { return coords[std::size_t(r) * grid.width + c]; }
};

// K+1 scalar fields over the grid, channel-major; channel 0 belongs to the
// background transform.
struct ContributionLogits {
  SamplingGrid grid;
  int num_tps = 0;  // K
  std::vector<double> values;  // (K+1) * H * W

  double at(int k, int r, int c) const {
    return values[(std::size_t(k) * grid.height + r) * grid.width + c];
  }
  double& at(int k, int r, int c) {
    return values[(std::size_t(k) * grid.height + r) * grid.width + c];
  }
  static ContributionLogits zeros(SamplingGrid grid, int num_tps);
};

// Softmax-normalized contribution fields: entries in [0, 1], summing to 1
// over the K+1 channels at every pixel.
struct ContributionMaps {
  SamplingGrid grid;
  int num_tps = 0;
  std::vector<double> values;

  double at(int k, int r, int c) const {
    return values[(std::size_t(k) * grid.height + r) * grid.width + c];
  }
  double& at(int k, int r, int c) {
    return values[(std::size_t(k) * grid.height + r) * grid.width + c];
  }
};

// Bernoulli keep decisions for the K TPS channels of one dropout
// application; the background channel is never dropped. Flags come from
// mt19937_64(seed), one 53-bit uniform draw per channel in index order,
// keep = (u >= probability) -- reproducible from (seed, probability, K).
struct DropoutPlan {
  double probability = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> keep;  // K entries, 0 or 1
};

DropoutPlan make_dropout_plan(std::uint64_t seed, double probability, int num_tps);

// Identity backward flow: at(r, c) = the normalized coordinate of (r, c).
DenseFlow identity_grid(SamplingGrid grid);

// Per-pixel softmax over the K+1 channels, stabilized by max subtraction.
ContributionMaps softmax_contributions(const ContributionLogits& logits);

// Softmax with dropped TPS channels removed and survivors rescaled by
// 1/(1-P) inside the normalization; dropped channels come out exactly zero
// and each pixel still sums to 1.
ContributionMaps dropout_contributions(const ContributionLogits& logits, const DropoutPlan& plan);

// Per-pixel convex combination of the K+1 transformed lattice coordinates:
// M_0(p) bg(p) + sum_k M_k(p) tps_k(p).
DenseFlow combine_flows(std::span<const TpsTransform> tps, const AffineTransform& bg,
                        const ContributionMaps& contribs, SamplingGrid grid);

}  // namespace tpsm
