#pragma once

#include <stdexcept>
#include <string>

namespace rfkn {

enum class errc {
    not_prime,
    division_by_zero,
    undefined_gcd,
    incomplete_factorization,
    invalid_m,
    invalid_g,
    invalid_r,
    zero_element,
    field_too_large,
    not_monic,
    no_degree_k_divisor,
    not_normal,
    not_primitive,
    window_too_large,
    precondition_failed,
    divisor_cap_exceeded,
    bad_input,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace rfkn
