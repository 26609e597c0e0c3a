#ifndef LOGPRIM_RATIONAL_HPP
#define LOGPRIM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace logprim {

// Exact scalar for the whole library. mpq_class keeps values canonical:
// lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n);

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer int_pow(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace logprim

#endif
