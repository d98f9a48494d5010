#pragma once

#include <stdexcept>
#include <string>

namespace omega {

enum class error_kind {
    precondition,  // guard or input-domain violation
    validation,    // a check ran and failed
    io,            // file or stream problems
    void_bound,    // an eigenvalue bound that carries no information
    internal       // an internal consistency check failed
};

inline const char* to_string(error_kind kind) noexcept {
    switch (kind) {
    case error_kind::precondition: return "precondition";
    case error_kind::validation: return "validation";
    case error_kind::io: return "io";
    case error_kind::void_bound: return "void_bound";
    case error_kind::internal: return "internal";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) {
    throw error(kind, what);
}

inline void require(bool condition, const std::string& what) {
    if (!condition)
        fail(error_kind::precondition, what);
}

} // namespace omega
