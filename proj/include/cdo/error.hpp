#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdo {

// Every failure the engine can report. CLI exit codes group these:
// verification failures (CorruptLog, CorruptSnapshot) exit 3, the rest exit 1.
enum class ErrorCode {
    DuplicateId,
    InvalidId,
    UnknownEntity,
    SameDomainPair,
    WrongDomain,
    CycleDetected,
    NoMatch,
    MissingAnchor,
    DuplicateMapping,
    NotMapped,
    ClockRegression,
    Unauthorized,
    UnknownActor,
    CorruptLog,
    DuplicateRole,
    UnknownRole,
    InvalidPermission,
    UnknownReceipt,
    AlreadyRevoked,
    EmptyScope,
    NeverExisted,
    DuplicateName,
    UnboundedQuery,
    ParseError,
    DomainConflict,
    IoError,
    CorruptSnapshot,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cdo
