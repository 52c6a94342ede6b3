#include "polyvdw/error.hpp"

namespace polyvdw {

std::string_view error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::EmptyCoeffs: return "EmptyCoeffs";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::VectorTooShort: return "VectorTooShort";
    case ErrorKind::MixedCaps: return "MixedCaps";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::EmptyTerms: return "EmptyTerms";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::ConstantTermNonzero: return "ConstantTermNonzero";
    case ErrorKind::ConstantTermPresent: return "ConstantTermPresent";
    case ErrorKind::DegreeExceedsCap: return "DegreeExceedsCap";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotInIr: return "NotInIr";
    case ErrorKind::UndefinedIndex: return "UndefinedIndex";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidIndexSet: return "InvalidIndexSet";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::PoolNotInIr: return "PoolNotInIr";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MixedVariableStyles: return "MixedVariableStyles";
    case ErrorKind::BadColorCount: return "BadColorCount";
    case ErrorKind::FileUnreadable: return "FileUnreadable";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), m_kind(kind)
{
}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + message),
      m_position(position)
{
}

}  // namespace polyvdw
