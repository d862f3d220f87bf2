#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceMismatch : Error { using Error::Error; };
struct BadLegIndex : Error { using Error::Error; };
struct OverlappingRules : Error { using Error::Error; };
struct BadRewriteRule : Error { using Error::Error; };
struct BadScalar : Error { using Error::Error; };
struct AxiomFailure : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotSymmetricForm : Error { using Error::Error; };
struct HypothesisFailure : Error { using Error::Error; };
struct UnboundName : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct FreeVarMismatch : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct DimTooLarge : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

// Parse failure in the identity DSL or a scalar literal; position is a byte
// offset into the offending text.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// Malformed bundle file; where is a JSON-pointer-style location.
struct SchemaError : Error {
    SchemaError(const std::string& msg, std::string location)
        : Error(msg + " [" + location + "]"), where(std::move(location)) {}
    std::string where;
};

}  // namespace permlab
