#include <reversor/errors.hpp>

namespace reversor {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::no_reversion: return "NoReversion";
    case ErrorKind::no_last_triangle: return "NoLastTriangle";
    case ErrorKind::boundary_equality: return "BoundaryEquality";
    case ErrorKind::out_of_interval: return "OutOfInterval";
    case ErrorKind::degenerate_base: return "DegenerateBase";
    case ErrorKind::wrong_class: return "WrongClass";
    case ErrorKind::no_sign_change: return "NoSignChange";
    case ErrorKind::malformed_base: return "MalformedBase";
    case ErrorKind::config_mismatch: return "ConfigMismatch";
    }
    return "Unknown";
}

} // namespace reversor
