#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcplan/errors.hpp"
#include "pcplan/geom.hpp"
#include "pcplan/mde.hpp"
#include "pcplan/suggest.hpp"
#include "pcplan/tasks.hpp"

namespace pcplan {

enum class GoalScore { LowestCollisionSum, BestAlignment };

std::string to_string(GoalScore s);
GoalScore parse_goal_score(const std::string& name);

struct SearchParams {
  std::size_t k = 10;
  double w_c = 1.0;
  double w_d = 1.0;
  double w_p = 0.1;
  double action_cost = 0.01;
  std::size_t goals = 1;  // m
  std::size_t budget = 200;
  std::size_t max_depth = 6;
  std::uint64_t seed = 0;
  GoalScore goal_score = GoalScore::LowestCollisionSum;
  double voxel_size = kDefaultVoxelSize;
  ContactParams contact;
};

/// Block stacking: k 10, m 1. Table bussing: k 3, m 10.
SearchParams default_search_params(TaskKind kind);
void validate(const SearchParams& params);

struct CostTerms {
  double action = 0.0;
  double collision = 0.0;
  double deviation = 0.0;
  double probability = 0.0;
  double total = 0.0;
};

inline constexpr std::int64_t kNoParent = -1;

struct SearchNode {
  SegmentedCloud cloud;
  std::optional<Action> action;
  std::int64_t id = 0;
  std::int64_t parent = kNoParent;
  std::size_t depth = 0;
  double g = 0.0, h = 0.0, f = 0.0;
  CostTerms costs;
  double p_object = 1.0, p_placement = 1.0;
  bool is_goal = false;
  bool expanded = false;
};

struct Planners {
  const ObjectSuggester* object = nullptr;
  const PlacementSuggester* placement = nullptr;
  const MdeModel* mde = nullptr;  // optional
};

struct SearchStats {
  double seconds = 0.0;
  std::size_t generated = 0;
  std::size_t expanded = 0;
};

struct SearchResult {
  std::vector<Action> plan;
  std::vector<std::int64_t> goal_nodes;
  std::int64_t chosen_goal = kNoParent;
  SearchStats stats;
  /// Every node created, indexed by id (root first).
  std::vector<SearchNode> nodes;
};

class NoPlanFound : public Error {
 public:
  explicit NoPlanFound(SearchResult partial)
      : Error("NoPlanFound: search ended without reaching a goal"), result_(std::move(partial)) {}
  const SearchResult& result() const { return result_; }

 private:
  SearchResult result_;
};

/// Cost of reaching `child_cloud` from `parent_cloud` via `action`.
CostTerms step_cost(const SegmentedCloud& parent_cloud, const Action& action, const SegmentedCloud& child_cloud,
                    double p_object, double p_placement, const MdeModel* mde, const SearchParams& params);

/// Fraction of the vertical sweep voxels (lift above the source pose, descent
/// above the target pose) occupied by other objects. Objects carried by the
/// moved one are ignored at the source.
double column_overlap(const SegmentedCloud& parent_cloud, const SegmentedCloud& child_cloud, ObjectId moved,
                      double voxel_size, const ContactParams& contact);

/// Children of `node`, ordered by (object id, sample index). Child ids are left
/// at -1 for the caller to assign.
std::vector<SearchNode> expand_node(const SearchNode& node, const TaskSpec& task, const Planners& planners,
                                    const SearchParams& params, std::uint64_t seed);

SearchResult astar_plan(const SegmentedCloud& root, const TaskSpec& task, const Planners& planners,
                        const SearchParams& params);
/// Greedy descent that keeps only the child with the lowest heuristic.
SearchResult beam_search_plan(const SegmentedCloud& root, const TaskSpec& task, const Planners& planners,
                              const SearchParams& params);
SearchResult random_rollout_plan(const SegmentedCloud& root, const TaskSpec& task, const Planners& planners,
                                 const SearchParams& params);

/// Actions from the root to `node`.
std::vector<Action> backtrack(const std::vector<SearchNode>& nodes, std::int64_t node);

}  // namespace pcplan
