#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcplan/dataset.hpp"
#include "pcplan/geom.hpp"
#include "pcplan/rng.hpp"
#include "pcplan/scene.hpp"

namespace pcplan {

// ---------------------------------------------------------------------------
// Interfaces used by the planners

class ObjectSuggester {
 public:
  virtual ~ObjectSuggester() = default;
  /// Probability of moving each object next, aligned with cloud.object_ids().
  virtual std::vector<double> distribution(const SegmentedCloud& cloud) const = 0;
  bool operator==(const ObjectSuggester&) const = default;
};

struct PlacementSample {
  RigidTransform transform;
  double probability = 0.0;
};

class PlacementSuggester {
 public:
  virtual ~PlacementSuggester() = default;
  virtual std::vector<PlacementSample> suggest(const SegmentedCloud& cloud, ObjectId object, std::size_t k,
                                               std::uint64_t seed) const = 0;
  bool operator==(const PlacementSuggester&) const = default;
};

class UniformObjectSuggester final : public ObjectSuggester {
 public:
  std::vector<double> distribution(const SegmentedCloud& cloud) const override;
};

std::vector<double> softmax(std::span<const double> scores, double temperature = 1.0);

// ---------------------------------------------------------------------------
// Object suggester: logistic scorer over per-object query features

inline constexpr std::size_t kObjectFeatures = 4;
using ObjectFeatures = std::array<double, kObjectFeatures>;

struct ObjectFitOptions {
  std::size_t iterations = 2000;
  double learning_rate = 0.5;
  double l2 = 1e-3;
  std::uint64_t seed = 0;
};

class ObjectSuggesterModel final : public ObjectSuggester {
 public:
  ObjectFeatures weights{};
  double bias = 0.0;
  std::map<std::string, double> class_prior;  // smoothed P(moved | present)
  double temperature = 1.0;
  double cell_size = 0.01;  // XY cell used for the covered-from-above feature
  bool fitted = false;

  /// [covered fraction, normalized height, objects resting on it, class prior]
  ObjectFeatures features(const SegmentedCloud& cloud, ObjectId id) const;
  std::vector<double> scores(const SegmentedCloud& cloud) const;
  std::vector<double> distribution(const SegmentedCloud& cloud) const override;
  bool operator==(const ObjectSuggesterModel&) const = default;
};

ObjectSuggesterModel fit_object_suggester(const TransitionDataset& dataset, const ObjectFitOptions& options = {});

// ---------------------------------------------------------------------------
// Placement suggester: class-conditional memory of anchor-relative placements

inline constexpr const char* kTableAnchor = "table";

struct PlacementMode {
  Vec3 offset = Vec3::Zero();  // anchor top center -> moved bottom center (absolute for the table)
  double yaw = 0.0;            // heading change applied by the demonstration
  std::size_t count = 0;
  double weight = 0.0;         // count / key count
  bool operator==(const PlacementMode&) const = default;
};

using PlacementKey = std::pair<std::string, std::string>;  // (moved class, anchor class)

struct LatentCandidate {
  Vec3 z = Vec3::Zero();  // placement target position
  double probability = 0.0;
  double yaw = 0.0;
  ObjectId anchor = kTable;
};

class PlacementSuggesterModel final : public PlacementSuggester {
 public:
  std::map<PlacementKey, std::vector<PlacementMode>> modes;
  std::map<PlacementKey, double> key_weight;  // key count / moved-class count
  double translation_sigma = 0.005;           // radial RMS of XY jitter, meters
  double yaw_sigma = 3.0 * std::numbers::pi / 180.0;
  double merge_distance = 0.01;
  double merge_yaw = 5.0 * std::numbers::pi / 180.0;
  ContactParams contact;
  bool fitted = false;

  /// Every stored mode instantiated against every matching anchor; masses sum to 1.
  std::vector<LatentCandidate> candidates(const SegmentedCloud& cloud, ObjectId object) const;
  std::vector<PlacementSample> suggest(const SegmentedCloud& cloud, ObjectId object, std::size_t k,
                                       std::uint64_t seed) const override;
  bool operator==(const PlacementSuggesterModel&) const = default;
};

struct PlacementFitOptions {
  double translation_sigma = 0.005;
  double yaw_sigma = 3.0 * std::numbers::pi / 180.0;
  ContactParams contact;
};

PlacementSuggesterModel fit_placement_suggester(const TransitionDataset& dataset,
                                                const PlacementFitOptions& options = {});

/// One rescoring step: mass_j *= |z_j - z_i|^2 / max_j |z_j - z_i|^2, then
/// renormalize. Returns false (and zeroes everything) when no mass remains.
bool rescore(std::vector<double>& mass, std::span<const Vec3> z, std::size_t sampled);

/// Sequential draw of up to k candidate indices with rescoring after each draw.
std::vector<std::size_t> sample_candidates(std::span<const LatentCandidate> candidates, std::size_t k, Rng& rng);

// ---------------------------------------------------------------------------
// Metrics

struct SuggesterMetrics {
  double object_accuracy = 0.0;
  double translation_error = 0.0;  // meters, mean winner-takes-all
  double rotation_error = 0.0;     // degrees, mean winner-takes-all
  std::size_t transitions = 0;
  std::size_t placement_skipped = 0;  // held-out moves with no applicable mode
};

SuggesterMetrics evaluate_suggesters(const ObjectSuggester& obj, const PlacementSuggester& plc,
                                     const TransitionDataset& heldout, std::size_t samples = 10,
                                     std::uint64_t seed = 0);

}  // namespace pcplan
