#pragma once

#include <stdexcept>
#include <string>

namespace contact {

// Domain errors; the CLI maps all of these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct ZeroObject : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct NotOneSided : Error { using Error::Error; };
struct MaurerCartanViolation : Error { using Error::Error; };
struct IllegalEntry : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct InvalidEquator : Error { using Error::Error; };
struct NotTransportable : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

}  // namespace contact
