#pragma once

#include <stdexcept>
#include <string>

namespace pfm {

enum class ErrorCode {
    invalid_argument,
    precondition,
    no_solution,
    underdetermined,
    parse,
    schema,
    invariant,
};

// All library failures are reported through this type; the C layer maps the
// code onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what)
{
    if (!cond) fail(ErrorCode::precondition, what);
}

}  // namespace pfm
