#include "comax/errors.hpp"

namespace comax {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorKind::CyclicWithoutBound: return "CyclicWithoutBound";
        case ErrorKind::CyclicQuiver: return "CyclicQuiver";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorKind::NonSplit: return "NonSplit";
        case ErrorKind::SideMismatch: return "SideMismatch";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::NotNonSingular: return "NotNonSingular";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BicommutantMismatch: return "BicommutantMismatch";
        case ErrorKind::CoalgebraMorphismFailure: return "CoalgebraMorphismFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

int Error::exit_category() const {
    switch (kind_) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::ParseError:
        case ErrorKind::DuplicateLabel:
        case ErrorKind::DanglingEndpoint:
            return 1;
        case ErrorKind::BicommutantMismatch:
        case ErrorKind::CoalgebraMorphismFailure:
        case ErrorKind::Internal:
            return 3;
        default:
            return 2;
    }
}

} // namespace comax
