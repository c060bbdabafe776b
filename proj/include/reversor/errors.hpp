#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reversor {

/// Domain failures. Usage problems (malformed numbers, zero components) are
/// reported with std::invalid_argument instead.
enum class ErrorKind {
    no_reversion,
    no_last_triangle,
    boundary_equality,
    out_of_interval,
    degenerate_base,
    wrong_class,
    no_sign_change,
    malformed_base,
    config_mismatch,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace reversor
