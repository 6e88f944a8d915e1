#pragma once

#include <stdexcept>
#include <string>

namespace rayforge {

// Base class for all structured errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an approximate computation cannot decide a sign or a branch
// at the current working precision.  Callers retry at higher precision.
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& what = "insufficient precision")
        : Error(what) {}
};

struct NotConnected : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct NotPlanarEmbedding : Error { using Error::Error; };
struct BadOuterEdge : Error { using Error::Error; };
struct EdgeNotIncident : Error { using Error::Error; };

struct BadFrameSize : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct FrameTooShallow : Error { using Error::Error; };

struct NoEquidistantSubpath : Error { using Error::Error; };
struct AdmissibilityFailed : Error { using Error::Error; };

struct NoIntersection : Error { using Error::Error; };
struct PrecisionCapExceeded : Error { using Error::Error; };

struct TooLarge : Error { using Error::Error; };
struct OddCount : Error { using Error::Error; };

struct UnknownFamily : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace rayforge
