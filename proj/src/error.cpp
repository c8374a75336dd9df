#include "mfg/error.hpp"

namespace mfg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonBinaryEntry: return "NonBinaryEntry";
    case Errc::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case Errc::ShiftMismatch: return "ShiftMismatch";
    case Errc::DomainNotPartition: return "DomainNotPartition";
    case Errc::RangeNotPartition: return "RangeNotPartition";
    case Errc::SuffixMapNotIntoShift: return "SuffixMapNotIntoShift";
    case Errc::EmptyWordEntry: return "EmptyWordEntry";
    case Errc::ConditionIFailure: return "ConditionIFailure";
    case Errc::WordNotAdmissible: return "WordNotAdmissible";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ValueOutsidePhaseGroup: return "ValueOutsidePhaseGroup";
    case Errc::NotANormalizer: return "NotANormalizer";
    case Errc::NonScalarObstruction: return "NonScalarObstruction";
    case Errc::PatternStraddlesUnstably: return "PatternStraddlesUnstably";
    case Errc::DepthExhausted: return "DepthExhausted";
    case Errc::ValidationMismatch: return "ValidationMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace mfg
