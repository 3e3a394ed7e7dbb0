#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dodgson {

/// Base class of every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched, non-square, or out-of-range dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A factorial-cost or enumeration guard was exceeded.
struct SizeGuardError : Error {
    using Error::Error;
};

/// Division by zero. When raised by condensation, `row`/`col` locate the
/// vanishing divisor inside the previous layer (0-based); both are -1 when
/// there is no positional information.
struct ZeroDivisorError : Error {
    int row = -1;
    int col = -1;

    ZeroDivisorError() : Error("division by zero") {}
    ZeroDivisorError(int r, int c)
        : Error("zero divisor at (" + std::to_string(r) + ", " + std::to_string(c) + ")"),
          row(r),
          col(c) {}
};

/// An operation received a pairing of the wrong class.
struct ClassError : Error {
    using Error::Error;
};

/// The input lies outside the operation's domain (e.g. applying an inverse
/// off its image).
struct DomainError : Error {
    using Error::Error;
};

/// Inverse chain mapping applied to a member that is not in the image.
struct NotInImageError : DomainError {
    using DomainError::DomainError;
};

/// Raw pairing data violates its class constraints; `violations` holds one
/// message per broken constraint.
struct ValidationError : Error {
    std::vector<std::string> violations;

    explicit ValidationError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid pairing";
        for (const auto& msg : v) {
            out += "; ";
            out += msg;
        }
        return out;
    }
};

/// Malformed input text or JSON.
struct ParseError : Error {
    using Error::Error;
};

/// Internal consistency violation: an invariant the implementation promises
/// (exact divisibility, chain termination) failed. Always a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace dodgson
