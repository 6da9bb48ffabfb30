#pragma once

#include <stdexcept>
#include <string>

namespace toricsol {

enum class ErrorCode {
    MalformedDocument,
    UnboundedRegion,
    EmptyInterior,
    NonPrimitiveNormal,
    DegenerateVertex,
    RedundantFacet,
    NotDelzant,
    NotFano,
    UnboundedRootRegion,
    AmbiguousRoot,
    UnsupportedDimension,
    NonConvergence,
    BoundaryEvaluation,
    LossOfConvexity,
    NoSignChange,
    OutOfDomain,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that the C layer can map it onto a stable status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace toricsol
