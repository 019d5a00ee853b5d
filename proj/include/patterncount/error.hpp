#pragma once

#include <stdexcept>
#include <string>

namespace patcount {

enum class ErrorCode {
    BadArity = 1,
    Parse,
    DuplicatePoint,
    InfeasibleParameters,
    Incommensurable,
    AmbiguousComparison,
    NoSignChange,
    MethodMismatch,
    TooLarge,
    DegeneratePair,
    NotOrdered,
    ArityMismatch,
    InvalidArgument,
    Io,
};

const char* to_cstring(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, std::string(to_cstring(code)) + ": " + what);
}

}  // namespace patcount
