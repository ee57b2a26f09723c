#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcplan/dataset.hpp"
#include "pcplan/mde.hpp"
#include "pcplan/rng.hpp"
#include "pcplan/scene.hpp"
#include "pcplan/search.hpp"
#include "pcplan/suggest.hpp"

namespace pcplan {

// ---------------------------------------------------------------------------
// Scripted demonstrations

/// Produces the full action sequence of one episode from the initial scene,
/// using simulator-side knowledge. Throws ScriptFailure when it cannot finish.
using ScriptPolicy = std::function<std::vector<Action>(const SegmentedCloud& initial, const SceneSpec& spec, Rng& rng)>;

/// Builds a single tower in a random order (blocks) or on a random reference
/// plate with larger footprints lower (bussing), unstacking to free table
/// spots when needed.
ScriptPolicy tower_script();

/// Rolls seeded episodes of `policy` from scenes drawn with `spec` (the seed of
/// each episode's scene is derived from `seed`) until `count` records exist.
TransitionDataset generate_demonstrations(const SceneSpec& spec, const ScriptPolicy& policy, std::size_t count,
                                          std::uint64_t seed);

// ---------------------------------------------------------------------------
// Persistence. Every file carries a schema tag; readers fail closed.

inline constexpr const char* kScenesSchema = "pcplan.scenes/1";
inline constexpr const char* kModelsSchema = "pcplan.models/1";
inline constexpr const char* kTraceSchema = "pcplan.trace/1";

/// Writes `text` to a sibling temp file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& text);
std::string read_file(const std::filesystem::path& path);

std::string dataset_to_ndjson(const TransitionDataset& dataset);
TransitionDataset dataset_from_ndjson(const std::string& text);
void save_dataset(const std::filesystem::path& path, const TransitionDataset& dataset);
TransitionDataset load_dataset(const std::filesystem::path& path);

struct SceneRecord {
  std::string name;
  std::string family;
  std::uint64_t seed = 0;
  int complexity = -1;  // optimal move count, -1 when unknown
  SegmentedCloud cloud;
  bool operator==(const SceneRecord&) const = default;
};

std::string scenes_to_ndjson(const std::vector<SceneRecord>& scenes);
std::vector<SceneRecord> scenes_from_ndjson(const std::string& text);
void save_scenes(const std::filesystem::path& path, const std::vector<SceneRecord>& scenes);
std::vector<SceneRecord> load_scenes(const std::filesystem::path& path);

struct ModelBundle {
  TaskKind task = TaskKind::BlockStacking;
  ObjectSuggesterModel object;
  PlacementSuggesterModel placement;
  MdeModel mde;
  bool operator==(const ModelBundle&) const = default;
};

std::string models_to_json(const ModelBundle& models);
ModelBundle models_from_json(const std::string& text);
void save_models(const std::filesystem::path& path, const ModelBundle& models);
ModelBundle load_models(const std::filesystem::path& path);

/// One node per line after a header; no timing so the bytes are reproducible.
struct TraceHeader {
  std::string scene;
  std::string method;
  std::uint64_t seed = 0;
  bool planned = false;
  bool executed = false;
  std::size_t generated = 0;
  std::size_t expanded = 0;
  std::int64_t chosen_goal = kNoParent;
  std::vector<std::int64_t> goal_nodes;
  std::vector<Action> plan;
  bool operator==(const TraceHeader&) const = default;
};

struct TraceNode {
  std::int64_t id = 0;
  std::int64_t parent = kNoParent;
  std::size_t depth = 0;
  std::optional<Action> action;
  CostTerms costs;
  double g = 0.0, h = 0.0, f = 0.0;
  bool is_goal = false;
  bool expanded = false;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceNode> nodes;
};

Trace make_trace(const TraceHeader& header, const std::vector<SearchNode>& nodes);
std::string trace_to_ndjson(const Trace& trace);
Trace trace_from_ndjson(const std::string& text);

}  // namespace pcplan
