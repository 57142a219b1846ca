#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence that is not weakly decreasing / contains nonpositive parts,
// or unparseable partition text.
struct InvalidPartition final : Error { using Error::Error; };

// pad(nu, n) with n < |nu| + nu_1.
struct PadTooSmall final : Error { using Error::Error; };

// Frobenius coordinates that are not strictly decreasing or have unequal
// arm/leg counts.
struct InvalidFrobenius final : Error { using Error::Error; };

// gamma(beta) on a non-strict partition.
struct NotStrict final : Error { using Error::Error; };

// A degree/size precondition failed (|lambda|+|mu| != n and the like).
struct SizeMismatch final : Error { using Error::Error; };

// phi() applied to the zero expansion.
struct ZeroElement final : Error { using Error::Error; };

// restrict_concrete with an odd 2n.
struct OddTotal final : Error { using Error::Error; };

// A power-sum expansion fed where a homogeneous one of matching degree
// was required.
struct DegreeMismatch final : Error { using Error::Error; };

// The oracle produced a non-integral (or negative) multiplicity; this
// signals a bug, never bad input.
struct NonIntegerResult final : Error { using Error::Error; };

// A multiplicity changed past its proven stability bound; this would
// falsify the implementation, not the mathematics.
struct BoundViolation final : Error { using Error::Error; };

// Generic precondition failure not covered by a more specific type.
struct InvalidArgument final : Error { using Error::Error; };

// An exact integer does not fit the requested machine type.
struct Overflow final : Error { using Error::Error; };

}  // namespace hyperoct
