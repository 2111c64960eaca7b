#include "gfadm/error.hpp"

namespace gfadm {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::parse: return "parse";
        case ErrorKind::singular_division: return "singular division";
        case ErrorKind::evaluation: return "evaluation";
        case ErrorKind::numeric: return "numeric";
        case ErrorKind::unsupported_backend: return "unsupported backend";
        case ErrorKind::bound_inapplicable: return "bound inapplicable";
        case ErrorKind::no_convergence: return "no convergence";
    }
    return "unknown";
}

}  // namespace gfadm
