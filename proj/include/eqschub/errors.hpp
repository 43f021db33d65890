#pragma once

#include <stdexcept>
#include <string>

namespace eqschub {

// Exit codes used by the CLI: 0 success, 1 verification failure,
// 2 usage error, 3 internal consistency error.
enum class exit_code : int { ok = 0, verify_failed = 1, usage = 2, internal = 3 };

// Bad input from a caller or the command line.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken invariant inside the library: an identity that must hold by
// construction failed to hold.  Never caught and absorbed.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// An exact linear system with no solution.  Distinct so that callers probing
// a system can tell it apart; everywhere else it escalates like any other
// internal error.
struct inconsistent_system : internal_error {
    explicit inconsistent_system(const std::string& what) : internal_error(what) {}
};

// A checked mathematical statement that turned out false.
struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the optional Groebner backend when it exceeds its budget; callers
// fall back to the degreewise reducer.
struct resource_limit_exceeded : std::runtime_error {
    explicit resource_limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eqschub
