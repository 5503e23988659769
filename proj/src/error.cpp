#include "qmirror/error.hpp"

namespace qmirror {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DomainOverflow: return "domain overflow";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Ambiguity: return "ambiguity";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Admissibility: return "admissibility";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace qmirror
