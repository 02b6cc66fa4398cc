#pragma once
#include <stdexcept>
#include <string>

namespace planq {

// Domain error with a stable machine-readable code ("NonPlanar", "TooSmall", ...).
// The CLI maps these to exit 1; malformed input files map to ParseError / exit 2.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace planq
