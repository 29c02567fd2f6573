#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gendo {

enum class ErrorKind {
    InvalidInput,
    FieldMismatch,
    DimensionMismatch,
    AlgebraMismatch,
    // algebra validation
    NonAssociative,
    BadUnit,
    BadIdempotents,
    BasisNotHomogeneous,
    RadicalNotIdeal,
    RadicalNotNilpotent,
    QuotientNotSemisimple,
    // quiver rewriting
    InadmissibleRelation,
    RewritingDiverged,
    NotFiniteDimensional,
    // nakayama
    KupischViolation,
    NotApplicable,
    // modules
    InvalidModule,
    DecompositionInconclusive,
    NonSplitEndomorphismRing,
    // invariants
    NotSymmetric,
    NotGenerator,
    BudgetExceeded,
};

const char* to_string(ErrorKind k);

/// Every failure in the library is reported through this type. `witness`
/// carries the indices that certify the failure (basis triple, Kupisch index,
/// ...), so the claim can be re-checked by hand.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::vector<long long> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), witness_(std::move(witness))
    {
    }
    ErrorKind kind() const { return kind_; }
    const std::vector<long long>& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::vector<long long> witness_;
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::BadIdempotents: return "BadIdempotents";
    case ErrorKind::BasisNotHomogeneous: return "BasisNotHomogeneous";
    case ErrorKind::RadicalNotIdeal: return "RadicalNotIdeal";
    case ErrorKind::RadicalNotNilpotent: return "RadicalNotNilpotent";
    case ErrorKind::QuotientNotSemisimple: return "QuotientNotSemisimple";
    case ErrorKind::InadmissibleRelation: return "InadmissibleRelation";
    case ErrorKind::RewritingDiverged: return "RewritingDiverged";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::KupischViolation: return "KupischViolation";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::DecompositionInconclusive: return "DecompositionInconclusive";
    case ErrorKind::NonSplitEndomorphismRing: return "NonSplitEndomorphismRing";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotGenerator: return "NotGenerator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

}  // namespace gendo
