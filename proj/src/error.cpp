#include "patterncount/error.hpp"

namespace patcount {

const char* to_cstring(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::Incommensurable: return "Incommensurable";
    case ErrorCode::AmbiguousComparison: return "AmbiguousComparison";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotOrdered: return "NotOrdered";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
    }
    return "UnknownError";
}

}  // namespace patcount
