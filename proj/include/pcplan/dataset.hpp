#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcplan/geom.hpp"

namespace pcplan {

inline constexpr const char* kDatasetSchema = "pcplan.dataset/1";

struct Transition {
  SegmentedCloud before;
  Action action;
  SegmentedCloud after;
  bool operator==(const Transition&) const = default;
};

struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
  std::string schema = kDatasetSchema;
  std::size_t skipped = 0;  // scripted episodes that failed and were dropped
  bool operator==(const Provenance&) const = default;
};

struct TransitionDataset {
  std::vector<Transition> records;
  Provenance provenance;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  bool operator==(const TransitionDataset&) const = default;
};

/// Throws CorruptRecord when a record changes object ids, classes, or
/// per-object point counts, or moves an object that is not in the cloud.
void check_dataset(const TransitionDataset& dataset);

}  // namespace pcplan
