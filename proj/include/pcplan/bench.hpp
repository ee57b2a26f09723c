#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcplan/data.hpp"
#include "pcplan/mde.hpp"
#include "pcplan/search.hpp"
#include "pcplan/tasks.hpp"

namespace pcplan {

enum class Method { Spot, Beam, RandomRollouts, NoObjectSuggester, NoMde };

std::string to_string(Method m);
/// Throws ConfigError for unknown names.
Method parse_method(const std::string& name);
/// no_mde is not one of the original ablations.
bool is_extension(Method m);

inline constexpr const char* kConfigSchema = "pcplan.config/1";
inline constexpr const char* kRunsSchema = "pcplan.runs/1";
inline constexpr const char* kReportSchema = "pcplan.report/1";
inline constexpr const char* kTimingsSchema = "pcplan.timings/1";

/// Scenes drawn from a bundled family and kept when they pass every filter.
struct SuiteSpec {
  std::string family;
  std::size_t scenes = 0;
  int min_complexity = 2;
  int max_complexity = 5;
  std::size_t min_stacked = 0;  // objects resting on another object at the start
  std::string loaded_class;     // when set, some object of this class must carry another
  std::uint64_t seed = 0;
  std::size_t max_draws = 20000;
};

/// A hand-written scene: classes plus explicit poses.
struct ExplicitScene {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ExplicitPose> poses;
  int complexity = -1;  // computed when negative
};

struct DemoSpec {
  std::string family;
  std::size_t object_transitions = 0;
  std::size_t placement_transitions = 0;
  std::size_t mde_scenes = 0;
  std::size_t mde_samples = 5;
};

struct BenchmarkConfig {
  TaskKind task = TaskKind::BlockStacking;
  TaskSpec task_spec;
  std::optional<SuiteSpec> suite;
  std::vector<ExplicitScene> scenes;
  DemoSpec demos;
  MdeConfig mde;
  SearchParams search;
  std::map<Method, SearchParams> method_params;  // search with per-method overrides applied
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds;
  std::uint64_t seed = 0;
  std::filesystem::path out = "out";

  const SearchParams& params_for(Method m) const;
};

/// Parses a JSON config. Throws ConfigError on unknown keys, bad values, an
/// empty seed list or an unknown method.
BenchmarkConfig parse_config(const std::string& text);
BenchmarkConfig load_config(const std::filesystem::path& path);

/// Fewest clear-object moves (onto the table or another clear object) to a
/// symbolic goal, from the support graph. -1 when unsupported objects exist or
/// no goal is found within `limit` moves.
int symbolic_complexity(const SegmentedCloud& cloud, const TaskSpec& task, int limit = 8);

std::vector<SceneRecord> generate_suite(const BenchmarkConfig& config);

struct DemoDatasets {
  TransitionDataset object;
  TransitionDataset placement;
};

DemoDatasets generate_demo_datasets(const BenchmarkConfig& config);

/// Fits both suggesters, then the deviation estimator on one-step rollouts of
/// the placement suggester executed in the settle simulator.
ModelBundle fit_models(const BenchmarkConfig& config, const DemoDatasets& demos);

struct RunRecord {
  std::string scene;
  std::string family;
  int complexity = -1;
  std::uint64_t seed = 0;
  Method method = Method::Spot;
  bool plan_found = false;
  bool planning_success = false;  // replayed plan satisfies the goal
  bool execution_success = false;
  std::size_t plan_length = 0;
  std::size_t generated = 0;
  std::size_t expanded = 0;
  std::string error;  // set when the run failed for a reason other than NoPlanFound
  bool operator==(const RunRecord&) const = default;
};

struct RunOutput {
  RunRecord record;
  Trace trace;
  double seconds = 0.0;
};

RunOutput run_one(const SceneRecord& scene, Method method, std::uint64_t seed, const BenchmarkConfig& config,
                  const ModelBundle& models);

/// Every (scene, seed, method) run, in that nesting order. Runs execute
/// concurrently; the output order does not depend on scheduling.
std::vector<RunOutput> run_suite(const std::vector<SceneRecord>& scenes, const BenchmarkConfig& config,
                                 const ModelBundle& models);

std::string runs_to_ndjson(const std::vector<RunRecord>& runs);
std::vector<RunRecord> runs_from_ndjson(const std::string& text);

struct Rate {
  double mean = 0.0;
  double ci95 = 0.0;  // half width, normal approximation over seeds
};

struct ComplexityRow {
  int complexity = 0;
  std::size_t runs = 0;
  double planning = 0.0;
  double execution = 0.0;
};

struct MethodSummary {
  Method method = Method::Spot;
  std::size_t runs = 0;
  std::size_t failures = 0;  // runs with an error
  Rate planning, execution;
  double mean_generated = 0.0;
  double mean_expanded = 0.0;
  double mean_plan_length = 0.0;  // over runs with a plan
  std::vector<ComplexityRow> by_complexity;
};

struct Report {
  TaskKind task = TaskKind::BlockStacking;
  std::size_t scenes = 0;
  std::size_t seeds = 0;
  std::vector<MethodSummary> methods;
};

/// Rates are per-seed means over scenes, then mean and 1.96 sd / sqrt(n) over seeds.
Report summarize(const std::vector<RunRecord>& runs, TaskKind task);
std::string report_to_json(const Report& report);
std::string report_to_markdown(const Report& report);

/// Problems found in a stored trace; empty when consistent. Checks counts,
/// node links, the rollout bound and that the stored plan replays to a goal.
std::vector<std::string> check_trace(const Trace& trace, const SegmentedCloud& root, const TaskSpec& task,
                                     const SearchParams& params, Method method);

/// Graphviz text of the search tree (`plan_only` keeps just the chosen path).
std::string trace_to_dot(const Trace& trace, bool plan_only);

std::string trace_file_name(const std::string& scene, Method method, std::uint64_t seed);

/// Full pipeline into config.out: scenes, demos, models, runs, traces, report.
Report run_benchmark(const BenchmarkConfig& config);

}  // namespace pcplan
