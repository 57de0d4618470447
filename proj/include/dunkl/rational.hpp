#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dunkl {

/// Exact arbitrary-precision rational, always kept canonical
/// (coprime numerator/denominator, positive denominator).
using rational = mpq_class;
using integer = mpz_class;

inline rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

/// Accepts "a" or "a/b" in base 10. Decimal notation is rejected.
inline rational parse_rational(const std::string& text) {
    rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw std::domain_error("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const rational& q) { return q.get_str(); }

inline bool is_integer(const rational& q) { return q.get_den() == 1; }

inline integer factorial(unsigned long n) {
    integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline integer binomial(unsigned long n, unsigned long k) {
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// 2^e for possibly negative e.
inline rational pow2(long e) {
    rational q(1);
    if (e >= 0)
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(),
                     static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(),
                     static_cast<unsigned long>(-e));
    return q;
}

/// Rising factorial (a)_n over the rationals.
inline rational pochhammer(const rational& a, unsigned n) {
    rational r(1);
    rational t = a;
    for (unsigned k = 0; k < n; ++k) {
        r *= t;
        t += 1;
    }
    return r;
}

} // namespace dunkl
