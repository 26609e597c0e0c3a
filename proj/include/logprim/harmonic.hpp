#ifndef LOGPRIM_HARMONIC_HPP
#define LOGPRIM_HARMONIC_HPP

#include "logprim/rational.hpp"

namespace logprim {

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(int n);

// Generalized harmonic number H_{n,m}: sum of 1/(a_1...a_m) over
// nondecreasing m-tuples from {1..n}. Computed by the recurrence
// H_{n,m} = H_{n,m-1}/n + H_{n-1,m}, memoized row by row.
Rational gen_harmonic(int n, int m);

// Alternating-sum route: sum_{k=1}^{n} (-1)^{k+1} C(n,k) k^{-m}.
// Kept as an independent cross-check; requires n >= 1.
Rational gen_harmonic_alt(int n, int m);

// Definitional oracle: brute-force enumeration of all nondecreasing
// m-tuples. Throws std::length_error when the tuple count C(n+m-1, m)
// exceeds the budget.
Rational gen_harmonic_enum(int n, int m, long budget = 1000000);

}  // namespace logprim

#endif
