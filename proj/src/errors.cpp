#include "sccol/errors.hpp"

namespace sccol {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyFace: return "EmptyFace";
    case Errc::BadLabel: return "BadLabel";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::NameClash: return "NameClash";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EmptyBcp: return "EmptyBCP";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BadK: return "BadK";
    case Errc::PaletteMismatch: return "PaletteMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace sccol
