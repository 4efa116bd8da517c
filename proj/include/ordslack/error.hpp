#pragma once

#include <stdexcept>
#include <string>

namespace ordslack {

// Every throwing path in the library uses one of these. The CLI maps them
// onto its exit-code table; tests match on the concrete type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CycleError : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct LabelCollision : Error {
  using Error::Error;
};
struct NotMaximal : Error {
  using Error::Error;
};
struct NotMinimal : Error {
  using Error::Error;
};
struct NotACover : Error {
  using Error::Error;
};
struct NotExtremal : Error {
  using Error::Error;
};
struct NotAVertex : Error {
  using Error::Error;
};
struct NotAFacet : Error {
  using Error::Error;
};
struct FlagNotFound : Error {
  using Error::Error;
};
struct MissingSplitData : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InvalidOrientation : Error {
  using Error::Error;
};
struct UnknownBase : Error {
  using Error::Error;
};

// Enumeration produced more output than the configured cap allows.
struct CapExceeded : Error {
  std::size_t partial_count;
  CapExceeded(const std::string& msg, std::size_t partial)
      : Error(msg), partial_count(partial) {}
};

// A Groebner computation ran out of its S-pair or degree budget. Never a
// silent truncation: callers either report it or treat the result as unknown.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace ordslack
