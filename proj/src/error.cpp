#include "heisensym/error.hpp"

namespace heisensym {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::OrderMismatch: return "OrderMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotHeisenberg: return "NotHeisenberg";
        case ErrorKind::StructureViolation: return "StructureViolation";
        case ErrorKind::NotASymmetry: return "NotASymmetry";
        case ErrorKind::NotInNormalizer: return "NotInNormalizer";
        case ErrorKind::NotSL2: return "NotSL2";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::LiftNotFound: return "LiftNotFound";
    }
    return "Unknown";
}

}  // namespace heisensym
