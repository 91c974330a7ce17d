#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace udt {

enum class ErrorKind {
  InvalidArgument,
  NonRealInput,
  NotHermitian,
  DimensionCap,
  BranchFuelExhausted,
  WitnessSpaceTooLarge,
  GeneratorFuelExhausted,
  ReductionFuelExhausted,
  NotTotalDecider,
  NonPromisedQuery,
  FuelExhausted,
  FuelCap,
  NotTimeConstructible,
  NotGapAdmissible,
  NoContradictionFound,
  NoInstanceOfA,
  CapExceeded,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain error carrying a stable kind; the CLI prints error_name(kind()).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace udt
