#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "pcplan/geom.hpp"

namespace pcplan {

enum class TaskKind { BlockStacking, TableBussing };

std::string to_string(TaskKind kind);
/// "block_stacking" or "table_bussing"; throws InvalidSpec otherwise.
TaskKind parse_task_kind(const std::string& name);

/// Canonical object geometry in its own frame: base at z = 0, axis through the origin.
struct ObjectTemplate {
  std::string object_class;
  PointSet points;
  double footprint_radius = 0.0;  // circumscribed XY radius
  double height = 0.0;
};

/// Built-in templates: block_red/block_green/block_blue (4 cm cubes), plate, bowl, cup.
ObjectTemplate builtin_template(const std::string& object_class);
bool is_builtin_class(const std::string& object_class);

/// Pose of one object in an explicit layout. `on` is the index of the supporting
/// object in the spec's object list, or -1 for the table. x, y are absolute and
/// must lie within the supporter's footprint.
struct ExplicitPose {
  double x = 0.0, y = 0.0, yaw = 0.0;
  int on = -1;
};

struct LayoutRecipe {
  /// Bottom-to-top object indices. Objects not listed stand alone on the table.
  std::vector<std::vector<int>> stack_groups;
  /// When true (and stack_groups is empty) the objects are partitioned into
  /// random stacks, larger footprints below.
  bool random_stacks = false;
  double x_min = -0.2, x_max = 0.2, y_min = -0.2, y_max = 0.2;
  /// Uniform XY offset of a stacked object relative to its supporter, meters.
  double xy_jitter = 0.004;
  double yaw_min = -std::numbers::pi, yaw_max = std::numbers::pi;
  /// Extra clearance between stack bases on the table, meters.
  double clearance = 0.01;
};

struct SceneSpec {
  TaskKind task = TaskKind::BlockStacking;
  std::vector<ObjectTemplate> objects;  // object id = index
  std::vector<ExplicitPose> poses;      // explicit layout when non-empty
  LayoutRecipe recipe;
  std::uint64_t seed = 0;
  bool occlusion = false;
};

/// Spec for a bundled family: "block_stacking_3", "table_bussing_2plate",
/// "table_bussing_2bowl". Layout is a random-stack recipe.
SceneSpec family_spec(const std::string& family, std::uint64_t seed);
std::vector<std::string> family_names();

SegmentedCloud generate_scene(const SceneSpec& spec);

// ---------------------------------------------------------------------------
// Support relations and settle dynamics

inline constexpr ObjectId kTable = -2;
inline constexpr ObjectId kUnsupported = -3;

struct ContactParams {
  double tolerance = 0.005;
  double table_z = 0.0;
  bool operator==(const ContactParams&) const = default;
};

class SupportGraph {
 public:
  /// Supporter of `id`: another object, kTable, or kUnsupported.
  ObjectId below(ObjectId id) const;
  /// Objects resting directly on `id`, ascending.
  std::vector<ObjectId> above(ObjectId id) const;
  /// Everything resting on `id` directly or indirectly, ascending.
  std::vector<ObjectId> dependents(ObjectId id) const;
  bool all_supported() const;
  const std::map<ObjectId, ObjectId>& edges() const { return below_; }

  void set(ObjectId above, ObjectId below) { below_[above] = below; }

 private:
  std::map<ObjectId, ObjectId> below_;
};

SupportGraph support_graph(const SegmentedCloud& cloud, const ContactParams& params = {});

/// Applies the action, then lets every unsupported object drop straight down
/// onto the highest surface beneath it (or the table).
SegmentedCloud execute_action(const SegmentedCloud& cloud, const Action& action, const ContactParams& params = {});

/// Settle rule alone.
SegmentedCloud settle(const SegmentedCloud& cloud, const ContactParams& params = {});

}  // namespace pcplan
