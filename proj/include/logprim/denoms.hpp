#ifndef LOGPRIM_DENOMS_HPP
#define LOGPRIM_DENOMS_HPP

#include <string>

#include "logprim/polynomial.hpp"

namespace logprim {

// Per-n record of the measured vs. predicted denominator of A_n and the
// quotient sequence beta_n.
struct DenominatorReport {
    int n = 0;
    Integer alpha_measured;  // lcm of reduced coefficient denominators
    Integer alpha_closed;    // n! * lcm(1..n)
    Integer beta;            // alpha_n / (n * alpha_{n-1}), 1 for n < 2
    long mangoldt = 1;
    bool match = false;

    std::string to_json() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

// lcm of the denominators of the reduced coefficients (1 for the zero
// polynomial).
Integer poly_denominator(const Polynomial& p);

// The predicted common denominator n! * lcm(1..n).
Integer alpha_closed(int n);

// alpha_n / (n * alpha_{n-1}) from MEASURED denominators. Throws
// std::logic_error if the quotient is not an integer (which would
// falsify the denominator theorem).
Integer beta(int n);

DenominatorReport denominator_report(int n);

// v_p(C(n,p^k) (H_n - H_{n-p^k})) == -k.
bool lemma32_check(int n, long p, int k);

// Every prime dividing the denominator of b_{n,k,j} is <= max(n,k).
bool cor58_check(int n, int k, int j);

}  // namespace logprim

#endif
