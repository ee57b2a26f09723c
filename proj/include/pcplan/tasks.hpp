#pragma once

#include <string>
#include <vector>

#include "pcplan/geom.hpp"
#include "pcplan/scene.hpp"

namespace pcplan {

struct TaskSpec {
  TaskKind kind = TaskKind::BlockStacking;

  /// Block stacking: target classes from top to bottom.
  std::vector<std::string> block_order{"block_red", "block_green", "block_blue"};
  double xy_tolerance = 0.015;      // center misalignment allowed between stacked blocks
  double height_tolerance = 0.01;   // band on contact height

  /// Table bussing: class of the candidate reference objects and the goal radius.
  std::string reference_class = "plate";
  double bussing_threshold = 0.10;

  ContactParams contact;
};

/// Defaults for a task; bussing threshold equals the plate footprint radius.
TaskSpec default_task_spec(TaskKind kind);
/// Throws InvalidParams on non-positive thresholds or an empty/duplicated order.
void validate(const TaskSpec& spec);

struct TaskEvaluation {
  double heuristic = 0.0;
  bool is_goal = false;
};

/// Heuristic and goal test from the cloud alone. Throws MissingObject when a
/// class named by the spec is absent (or, for blocks, not unique).
TaskEvaluation evaluate_task(const SegmentedCloud& cloud, const TaskSpec& spec);

/// Sum of XY center offsets between consecutive blocks of the target order.
double stack_misalignment(const SegmentedCloud& cloud, const TaskSpec& spec);

/// Object ids of the target order, top to bottom.
std::vector<ObjectId> ordered_blocks(const SegmentedCloud& cloud, const TaskSpec& spec);

/// Reference object chosen for bussing (lowest heuristic sum, then lowest id).
ObjectId bussing_reference(const SegmentedCloud& cloud, const TaskSpec& spec);

/// True when any two objects overlap in XY and their z ranges overlap by more
/// than the contact tolerance.
bool interpenetrates(const SegmentedCloud& cloud, ObjectId id, double tolerance);

}  // namespace pcplan
