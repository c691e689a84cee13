#include "rhoform/errors.hpp"

namespace rhoform {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::IncompatibleRootOrder: return "IncompatibleRootOrder";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::PresentationMismatch: return "PresentationMismatch";
        case ErrorKind::PhiMismatch: return "PhiMismatch";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::IllDefined: return "IllDefined";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DegreeUnderflow: return "DegreeUnderflow";
        case ErrorKind::InfiniteComponent: return "InfiniteComponent";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

} // namespace rhoform
