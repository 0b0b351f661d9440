#include "gpw/errors.hpp"

namespace gpw {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::LevelBeyondExhaustion: return "LevelBeyondExhaustion";
    case ErrorCode::InvalidPower: return "InvalidPower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotBandlimited: return "NotBandlimited";
    case ErrorCode::BandwidthTooLarge: return "BandwidthTooLarge";
    case ErrorCode::ClosureNotFull: return "ClosureNotFull";
    case ErrorCode::NotUniquenessSet: return "NotUniquenessSet";
    case ErrorCode::SampleSetMismatch: return "SampleSetMismatch";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace gpw
