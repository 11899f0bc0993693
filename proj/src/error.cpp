#include "fsig/error.hpp"

namespace fsig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MapNotTotal: return "MapNotTotal";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotASigmaAlgebra: return "NotASigmaAlgebra";
    case ErrorCode::NotMeasurable: return "NotMeasurable";
    case ErrorCode::NotNonsingular: return "NotNonsingular";
    case ErrorCode::NotIMP: return "NotIMP";
    case ErrorCode::DegenerateMeasure: return "DegenerateMeasure";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotHom: return "NotHom";
    case ErrorCode::NonConstantOnAtom: return "NonConstantOnAtom";
    case ErrorCode::NotADirectSum: return "NotADirectSum";
    case ErrorCode::NotSquareIntegrable: return "NotSquareIntegrable";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::BadBreakpoints: return "BadBreakpoints";
    case ErrorCode::IntervalMismatch: return "IntervalMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::EmptySignal: return "EmptySignal";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CorruptContainer: return "CorruptContainer";
    case ErrorCode::PolicyMismatch: return "PolicyMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace fsig
