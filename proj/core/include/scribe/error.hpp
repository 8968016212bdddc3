#pragma once

#include <stdexcept>
#include <string>

namespace scribe {

// Error categories surfaced by the library. The CLI maps these to exit codes:
// input-side problems (file contents, arguments) exit 1, everything else 2.
enum class errc {
    format,            // malformed container/header
    unsupported,       // recognized but unsupported encoding
    empty_input,
    degenerate_input,  // e.g. silent signal where power is required
    range,             // value outside the documented domain
    domain,            // id/token outside its block
    validation,        // bad argument combination
    protocol,          // transcript token stream violates the timestamp grammar
    shape,             // tensor shape mismatch
    numeric,           // non-finite value where finite is required
    context_overflow,  // decoder context exhausted
    load,              // weight/vocab file incomplete or inconsistent
    io,                // filesystem failure
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

    // true for errors caused by user-supplied inputs rather than internal state
    bool is_input_error() const {
        switch (code_) {
            case errc::format:
            case errc::unsupported:
            case errc::empty_input:
            case errc::degenerate_input:
            case errc::range:
            case errc::domain:
            case errc::validation:
            case errc::load:
            case errc::io:
                return true;
            default:
                return false;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace scribe
