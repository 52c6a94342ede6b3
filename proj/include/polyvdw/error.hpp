#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyvdw {

enum class ErrorKind {
    EmptyCoeffs,
    CapExceeded,
    NotCompatible,
    Overflow,
    VectorTooShort,
    MixedCaps,
    NotIrreducible,
    EmptyTerms,
    InvalidShape,
    ConstantTermNonzero,
    ConstantTermPresent,
    DegreeExceedsCap,
    ZeroPolynomial,
    NotInIr,
    UndefinedIndex,
    ArityMismatch,
    InvalidIndexSet,
    UnknownElement,
    PoolNotInIr,
    WindowTooSmall,
    BoundsTooLarge,
    InvalidRange,
    SyntaxError,
    MixedVariableStyles,
    BadColorCount,
    FileUnreadable,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type; the kind is
// stable and machine-checkable, the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

// Parse failures additionally carry the offending 0-based character offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message);

    std::size_t position() const noexcept { return m_position; }

private:
    std::size_t m_position;
};

}  // namespace polyvdw
