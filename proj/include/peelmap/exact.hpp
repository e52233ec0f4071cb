#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace peelmap {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative " + std::to_string(n));
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Extended so that (-1)!! = 0!! = 1; the planar polygon formula needs the
// boundary values n = p-2.
inline Int double_factorial(long n) {
    if (n < -1) throw domain_error("double factorial of " + std::to_string(n));
    if (n <= 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int catalan(long k) {
    if (k < 0) throw domain_error("catalan of negative index");
    return binomial(2 * k, k) / (k + 1);
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact rational -> integer, failing loudly if the value is not integral.
inline Int to_integer(const Rat& q, const char* what) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw domain_error(std::string(what) + ": value is not an integer");
    return c.get_num();
}

}  // namespace peelmap
