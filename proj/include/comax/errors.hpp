#pragma once

#include <stdexcept>
#include <string>

namespace comax {

enum class ErrorKind {
    // usage / input
    InvalidArgument,
    ParseError,
    DuplicateLabel,
    DanglingEndpoint,
    // mathematical preconditions
    CyclicWithoutBound,
    CyclicQuiver,
    AmbientMismatch,
    FieldMismatch,
    UnsupportedCharacteristic,
    NonSplit,
    SideMismatch,
    AlgebraMismatch,
    NotSurjective,
    NotNonSingular,
    TooLarge,
    // internal consistency guards
    BicommutantMismatch,
    CoalgebraMorphismFailure,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    /// Exit-code category: 1 usage/parse, 2 mathematical precondition,
    /// 3 internal consistency failure.
    int exit_category() const;

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace comax
