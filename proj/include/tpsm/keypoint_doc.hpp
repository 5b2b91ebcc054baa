#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "tpsm/geometry.hpp"

namespace tpsm {

struct KeypointFrame {
  std::vector<KeypointSet> source;   // K groups of N points
  std::vector<KeypointSet> driving;  // K groups of N points
  std::optional<AffineTransform> bg;
};

// On-disk keypoint container: JSON with an explicit version field and
// normalized coordinates, so files are resolution-independent.
struct KeypointDocument {
  int version = 1;
  int num_tps = 0;         // K
  int points_per_tps = 0;  // N
  std::vector<KeypointFrame> frames;
};

// Reading validates version == 1, group counts (K groups of exactly N
// [x, y] pairs per block) and finiteness; violations raise ContractError.
KeypointDocument read_keypoint_document(const std::filesystem::path& path);
void write_keypoint_document(const std::filesystem::path& path, const KeypointDocument& doc);

// Forward/backward affine pair for the consistency diagnostic.
struct BgPairDocument {
  AffineTransform fwd;
  AffineTransform bwd;
};

BgPairDocument read_bg_pair(const std::filesystem::path& path);
void write_bg_pair(const std::filesystem::path& path, const BgPairDocument& pair);

}  // namespace tpsm
