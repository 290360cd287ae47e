#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rih {

enum class ErrorKind {
    LengthMismatch,
    NotContained,
    EmptyInput,
    NotASimplex,
    ApexCollision,
    NotPure,
    MalformedFiltration,
    MismatchedComplex,
    InvalidPairing,
    InvalidMap,
    DegreeOutOfRange,
    InvalidPair,
    NotUnionOfStrata,
    NotClosed,
    ComplementNotClosed,
    NonConstantFiberDim,
    NotSmall,
    RepresentativeNotGeneric,
    InvalidResolution,
    LinkSingular,
    NotIsolated,
    ResolutionMismatch,
    NotTransverse,
    NotAllowable,
    ParseError,
    UnknownVertex,
    NonNestedSkeleton,
    UnknownName,
};

inline std::string_view kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotContained: return "NotContained";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NotASimplex: return "NotASimplex";
        case ErrorKind::ApexCollision: return "ApexCollision";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::MalformedFiltration: return "MalformedFiltration";
        case ErrorKind::MismatchedComplex: return "MismatchedComplex";
        case ErrorKind::InvalidPairing: return "InvalidPairing";
        case ErrorKind::InvalidMap: return "InvalidMap";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::InvalidPair: return "InvalidPair";
        case ErrorKind::NotUnionOfStrata: return "NotUnionOfStrata";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::ComplementNotClosed: return "ComplementNotClosed";
        case ErrorKind::NonConstantFiberDim: return "NonConstantFiberDim";
        case ErrorKind::NotSmall: return "NotSmall";
        case ErrorKind::RepresentativeNotGeneric: return "RepresentativeNotGeneric";
        case ErrorKind::InvalidResolution: return "InvalidResolution";
        case ErrorKind::LinkSingular: return "LinkSingular";
        case ErrorKind::NotIsolated: return "NotIsolated";
        case ErrorKind::ResolutionMismatch: return "ResolutionMismatch";
        case ErrorKind::NotTransverse: return "NotTransverse";
        case ErrorKind::NotAllowable: return "NotAllowable";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::NonNestedSkeleton: return "NonNestedSkeleton";
        case ErrorKind::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind), detail_(msg) {}
    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace rih
