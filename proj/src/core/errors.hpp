#pragma once

#include <stdexcept>
#include <string>

namespace fintrade {

enum class ErrKind {
    invalid_arg,
    io,
    parse,
    config,
    state,
    transport,
    internal,
};

/// Domain error with a coarse kind used to pick exit codes / C-API status.
class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace fintrade
