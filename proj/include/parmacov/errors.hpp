#pragma once

#include <stdexcept>

namespace parmacov {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model validation.
struct DimensionMismatch : Error { using Error::Error; };
struct NonPositiveVariance : Error { using Error::Error; };
struct NonFiniteCoefficient : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

// Index and range checks.
struct ArOrderZero : Error { using Error::Error; };
struct SeasonOutOfRange : Error { using Error::Error; };
struct OffsetOutOfRange : Error { using Error::Error; };
struct LagOutOfRange : Error { using Error::Error; };

// Yule-Walker assembly and solve.
struct PsiTableTooShort : Error { using Error::Error; };
struct NotCausal : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InsufficientStartup : Error { using Error::Error; };

// Oracles.
struct TruncationDidNotConverge : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct TableTooShort : Error { using Error::Error; };

// Model file handling.
struct ParseError : Error { using Error::Error; };

} // namespace parmacov
