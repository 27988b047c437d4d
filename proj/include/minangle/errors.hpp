#pragma once

#include <stdexcept>
#include <string>

namespace minangle {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix factorization did not converge or produced invalid output.
class FactorizationError : public Error {
public:
    using Error::Error;
};

/// An input that must have full column rank does not; the message names the
/// offending singular value.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

/// Shapes or ambient dimensions of the operands do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix fails the invariants of the type it was offered as (not Hermitian,
/// not idempotent, non-finite entries, non-unit vector, ...).
class InvalidValueError : public Error {
public:
    using Error::Error;
};

/// A projection whose singular values are too far from {0,1} to decide rank.
class IllConditionedProjectionError : public Error {
public:
    using Error::Error;
};

/// Two supposedly equivalent decision routes disagreed at the configured
/// tolerances.
class ToleranceConflictError : public Error {
public:
    using Error::Error;
};

/// A relation was queried outside the ranks for which it is defined.
class UndefinedRelationError : public Error {
public:
    using Error::Error;
};

/// A table-backed map was applied to a subspace it has no entry for.
class TableMissError : public Error {
public:
    using Error::Error;
};

/// A subprojection selector violated its contract 0 != rho(P) <= P.
class SelectorContractError : public Error {
public:
    using Error::Error;
};

/// A map under test violated the preserving property it was assumed to have.
class PreserverViolationError : public Error {
public:
    using Error::Error;
};

/// A line map could not be realized by any linear or conjugate-linear isometry.
class NotWignerMapError : public Error {
public:
    using Error::Error;
};

/// A certificate failed to validate; the message carries the failing point.
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Arguments fall outside the dimension regime a construction requires.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace minangle
