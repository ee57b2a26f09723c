#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pcplan/geom.hpp"
#include "pcplan/scene.hpp"
#include "pcplan/suggest.hpp"

namespace pcplan {

struct MdeConfig {
  double epsilon = 1.0;
  double clip_max = 3.2;
  /// Chamfer distances are taken in units of 1/length_scale meters (100 = centimeters).
  double length_scale = 100.0;
  std::size_t neighbors = 5;
  double voxel_size = kDefaultVoxelSize;
  ContactParams contact;
  bool operator==(const MdeConfig&) const = default;
};

/// Block stacking: epsilon 1, clip 3.2. Table bussing: epsilon 0.01, clip 5000.
MdeConfig default_mde_config(TaskKind kind);

/// Sum over objects of (CD(expected_i, observed_i) + eps) / (CD(expected_i, initial_i) + eps).
/// Chamfer values are multiplied by length_scale^2 before use. Throws MismatchedObjects.
double deviation_label(const SegmentedCloud& expected, const SegmentedCloud& observed,
                       const SegmentedCloud& initial, double epsilon, double length_scale = 1.0);

struct LabelScaler {
  double clip_max = 0.0;
  double lo = 0.0, hi = 0.0;
  /// Clip then min-max; a degenerate range maps everything to 0.
  double apply(double raw) const;
  bool operator==(const LabelScaler&) const = default;
};

/// Learns min/max of the clipped labels.
LabelScaler fit_scaler(std::span<const double> raw, double clip_max);

inline constexpr std::size_t kMdeFeatures = 4;
using MdeFeatures = std::array<double, kMdeFeatures>;

/// [objects carried by the moved one (transitively), voxel overlap at the target,
///  displacement of the moved object's centroid (m), rotation angle (rad)]
MdeFeatures transition_features(const SegmentedCloud& cloud, const Action& action, const MdeConfig& config);

struct MdeExample {
  MdeFeatures features{};
  double raw_label = 0.0;
  double label = 0.0;  // scaled to [0, 1]
  bool operator==(const MdeExample&) const = default;
};

class MdeModel {
 public:
  MdeConfig config;
  LabelScaler scaler;
  std::vector<MdeExample> examples;
  MdeFeatures scale{};  // per-feature standard deviation used in the distance
  bool fitted = false;

  /// Distance-weighted k-NN over standardized features, clamped to [0, 1].
  double predict(const SegmentedCloud& cloud, const Action& action) const;
  double predict(const MdeFeatures& features) const;
  bool operator==(const MdeModel&) const = default;
};

using Simulator = std::function<SegmentedCloud(const SegmentedCloud&, const Action&)>;
using CloudAction = std::pair<SegmentedCloud, Action>;

MdeModel fit_mde(const std::vector<CloudAction>& transitions, const Simulator& simulator, const MdeConfig& config,
                 std::uint64_t seed = 0);

/// k placement suggestions per object, one step each, on every scene.
std::vector<CloudAction> mde_rollouts(const std::vector<SegmentedCloud>& scenes, const PlacementSuggester& placement,
                                      std::size_t k, std::uint64_t seed);

}  // namespace pcplan
