#ifndef GPW_ERRORS_HPP
#define GPW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpw {

// Every failure the library can diagnose is reported as a gpw::Error carrying
// one of these codes.  Input/validation problems and unmet mathematical
// preconditions are deliberately kept apart from "the inequality you asked me
// to check is false": the latter is never an exception, it is a `holds` flag
// in the corresponding report struct.
enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    GraphMismatch,
    BasisMismatch,
    EmptySubset,
    InvalidVertex,
    LevelBeyondExhaustion,
    InvalidPower,
    TooLarge,
    NotBandlimited,
    BandwidthTooLarge,
    ClosureNotFull,
    NotUniquenessSet,
    SampleSetMismatch,
    OddOrder,
    OrderTooSmall,
    OrderMismatch,
    DimensionTooSmall,
    PatternMismatch,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace gpw

#endif // GPW_ERRORS_HPP
