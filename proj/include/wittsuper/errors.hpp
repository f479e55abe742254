#pragma once

#include <stdexcept>
#include <string>

namespace wittsuper {

// Error kinds mirror the failure modes of the public operations.  Every
// throwing path in the library uses Error so the CLI can map kinds onto
// exit codes (Undecided -> 2, everything else -> usage/internal).
enum class ErrorKind {
    OverlappingSets,
    SignatureMismatch,
    SizeMismatch,
    IndexOutOfRange,
    AlphabetError,
    SpanSolveFailure,
    WeightNotInSupport,
    UndecidedWithinWindow,
    InvalidTriangularSplit,
    InconsistentShadow,
    GradationError,
    NotAKacModule,
    WindowTooLarge,
    UnknownTag,
    NotClassifiable,
    DegreeCapExceeded,
    BadInput,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::OverlappingSets: return "OverlappingSets";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::AlphabetError: return "AlphabetError";
        case ErrorKind::SpanSolveFailure: return "SpanSolveFailure";
        case ErrorKind::WeightNotInSupport: return "WeightNotInSupport";
        case ErrorKind::UndecidedWithinWindow: return "UndecidedWithinWindow";
        case ErrorKind::InvalidTriangularSplit: return "InvalidTriangularSplit";
        case ErrorKind::InconsistentShadow: return "InconsistentShadow";
        case ErrorKind::GradationError: return "GradationError";
        case ErrorKind::NotAKacModule: return "NotAKacModule";
        case ErrorKind::WindowTooLarge: return "WindowTooLarge";
        case ErrorKind::UnknownTag: return "UnknownTag";
        case ErrorKind::NotClassifiable: return "NotClassifiable";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wittsuper
