#pragma once

#include <stdexcept>
#include <string>

namespace mfg {

enum class Errc {
  NonSquare,
  NonBinaryEntry,
  ZeroRowOrColumn,
  ShiftMismatch,
  DomainNotPartition,
  RangeNotPartition,
  SuffixMapNotIntoShift,
  EmptyWordEntry,
  ConditionIFailure,
  WordNotAdmissible,
  Inadmissible,
  NotAPermutation,
  NotDiagonal,
  NotUnimodular,
  ValueOutsidePhaseGroup,
  NotANormalizer,
  NonScalarObstruction,
  PatternStraddlesUnstably,
  DepthExhausted,
  ValidationMismatch,
  ParseError,
};

const char* errc_name(Errc c);

/// Error with a machine-readable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mfg
