#include "qarrow/errors.hpp"

namespace qarrow {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotTree: return "NotTree";
        case Errc::DegreeTwoVertex: return "DegreeTwoVertex";
        case Errc::LeafLabelMismatch: return "LeafLabelMismatch";
        case Errc::UnknownTaxon: return "UnknownTaxon";
        case Errc::TooManyLeaves: return "TooManyLeaves";
        case Errc::ParseError: return "ParseError";
        case Errc::SubsetTooSmall: return "SubsetTooSmall";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::SpaceTooLarge: return "SpaceTooLarge";
        case Errc::UnrealizableBranch: return "UnrealizableBranch";
        case Errc::TriggerMismatch: return "TriggerMismatch";
        case Errc::UnresolvedQuartetQuery: return "UnresolvedQuartetQuery";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace qarrow
