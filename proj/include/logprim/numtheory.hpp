#ifndef LOGPRIM_NUMTHEORY_HPP
#define LOGPRIM_NUMTHEORY_HPP

#include <stdexcept>
#include <vector>

#include "logprim/rational.hpp"

namespace logprim {

struct PrimePower {
    long p;       // prime
    unsigned k;   // exponent >= 1
    Integer value;  // p^k
};

// All primes in [2, n], ascending.
std::vector<long> primes_up_to(long n);

bool is_prime(long n);

// lcm(1, 2, ..., n). Backed by a monotone cached table.
Integer lcm_range(long n);

// p if n is a prime power p^k, else 1 (exponential of the von Mangoldt
// function).
long mangoldt_exp(long n);

// The exponent of p in q = p^v * a/b with p dividing neither a nor b.
// Throws std::domain_error for q = 0.
long p_adic_valuation(const Rational& q, long p);
long p_adic_valuation(const Integer& n, long p);

// Borrows when subtracting k from n in base p; equals v_p(C(n,k)) by
// Kummer's theorem. Throws std::invalid_argument for k > n.
long kummer_borrows(long n, long k, long p);

// Prime powers p^k <= n, every admissible (p, k).
std::vector<PrimePower> prime_powers_up_to(long n);

}  // namespace logprim

#endif
