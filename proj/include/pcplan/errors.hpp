#pragma once

#include <stdexcept>
#include <string>

namespace pcplan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PCPLAN_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(std::string(#Name ": ") + what) {} \
  }

PCPLAN_DEFINE_ERROR(UnknownObject);
PCPLAN_DEFINE_ERROR(EmptyCloud);
PCPLAN_DEFINE_ERROR(InvalidVoxelSize);
PCPLAN_DEFINE_ERROR(InvalidTransform);
PCPLAN_DEFINE_ERROR(InvalidCloud);
PCPLAN_DEFINE_ERROR(DegenerateInput);
PCPLAN_DEFINE_ERROR(InvalidSpec);
PCPLAN_DEFINE_ERROR(MissingObject);
PCPLAN_DEFINE_ERROR(EmptyDataset);
PCPLAN_DEFINE_ERROR(UnfittedModel);
PCPLAN_DEFINE_ERROR(NoApplicableMode);
PCPLAN_DEFINE_ERROR(MismatchedObjects);
PCPLAN_DEFINE_ERROR(InvalidParams);
PCPLAN_DEFINE_ERROR(ScriptFailure);
PCPLAN_DEFINE_ERROR(SchemaMismatch);
PCPLAN_DEFINE_ERROR(CorruptRecord);
PCPLAN_DEFINE_ERROR(ConfigError);

#undef PCPLAN_DEFINE_ERROR

}  // namespace pcplan
