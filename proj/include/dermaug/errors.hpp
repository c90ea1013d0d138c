#pragma once

#include <stdexcept>
#include <string>

namespace dermaug {

/// Base class for all toolkit errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// file / decode errors
struct NotFound : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct CorruptHeader : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// geometry / mask errors
struct EmptyMask : Error { using Error::Error; };
struct DegenerateMask : Error { using Error::Error; };
struct OutOfBounds : Error { using Error::Error; };

// numerics
struct InsufficientPixels : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

// dataset errors
struct TooFewSamples : Error { using Error::Error; };
struct BadK : Error { using Error::Error; };
struct EmptyClass : Error { using Error::Error; };

// metrics errors
struct IdSetMismatch : Error { using Error::Error; };
struct EmptyCommittee : Error { using Error::Error; };
struct DegenerateLabels : Error { using Error::Error; };

} // namespace dermaug
