#pragma once

#include <stdexcept>
#include <string>

namespace schultz {

// Every failure mode the library reports. CLI maps all of these to exit 2.
enum class errc {
    self_loop,
    out_of_range_vertex,
    disconnected,
    bad_params,
    malformed_input,
    integer_overflow,
    too_large,
    improper_colouring,
    wrong_family,
    non_integer_coefficient,
    length_mismatch,
};

inline const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::self_loop: return "self-loop";
        case errc::out_of_range_vertex: return "out-of-range vertex";
        case errc::disconnected: return "disconnected";
        case errc::bad_params: return "bad parameters";
        case errc::malformed_input: return "malformed input";
        case errc::integer_overflow: return "integer overflow";
        case errc::too_large: return "too large";
        case errc::improper_colouring: return "improper colouring";
        case errc::wrong_family: return "wrong family";
        case errc::non_integer_coefficient: return "non-integer coefficient";
        case errc::length_mismatch: return "length mismatch";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace schultz
