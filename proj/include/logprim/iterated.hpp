#ifndef LOGPRIM_ITERATED_HPP
#define LOGPRIM_ITERATED_HPP

#include <utility>

#include "logprim/logpoly.hpp"

namespace logprim {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The assembled closed form of the n-fold antiderivative of ln^j(1+x):
//   expr = a_part + sum_{k=1}^{j} b_coeffs[k-1] * (1+x)^n * ln^k(1+x).
// For j = 1 the a_part equals -x * A_n(x).
struct IteratedResult {
    int n = 0;
    int j = 1;
    LogPolyExpr expr;
    Polynomial a_part;
    std::vector<Rational> b_coeffs;  // b_{n,k,j}, k = 1..j
};

// Brute-force ground truth: start from ln^j(1+x) and integrate n times.
// Throws BudgetExceeded beyond (max_n, max_j).
LogPolyExpr f_oracle(int n, int j, int max_n = 60, int max_j = 8);

// A_n(x) = (1/n!) sum_{k=1}^{n} C(n,k) (H_n - H_{n-k}) x^{k-1}.
Polynomial a_poly(int n);

// Same polynomial by the series route:
// (1/n!) sum_{k=0}^{n} C(n,k) x^k sum_{m=1}^{n-k} (-x)^{m-1}/m.
Polynomial a_poly_alt(int n);

// Third route: a_{n,1} = 1/n! and k a_{n,k} = a_{n-1,k-1} + C(n-1,k-1)/n!.
Polynomial a_rec(int n);

// B_n(x) = (1+x)^n / n!.
Polynomial b_poly(int n);

// b_{n,k,j} = (-1)^{j-k} j!/(n! k!) H_{n,j-k}.
Rational b_coeff(int n, int k, int j);

// Same coefficient from the four-equation recurrence.
Rational b_coeff_rec(int n, int k, int j);

// A_{n,j}(x) = ((-1)^j j!/n!) sum_{r=1}^{n} C(n,r)
//              [sum_{k=0}^{r-1} H_{n-k,j-1}/(n-k)] x^r.
Polynomial a_poly_general(int n, int j);

// A_{n,j} by the coefficient recurrence c_{n,r,j}.
Polynomial c_rec(int n, int j);

// The full closed form assembled from a_poly_general and b_coeff.
IteratedResult f_closed(int n, int j);

// Alternating-series partial sum of f_n(x0) for 0 < x0 < 1:
//   -x0^n sum_{i=1}^{terms} (-x0)^i / (i (i+1) ... (i+n)),
// together with the absolute value of the first omitted term.
std::pair<Rational, Rational> series_partial(int n, const Rational& x0,
                                             int terms);

// Polynomial identity obtained by comparing the two A_n routes.
bool identity_check(int n);

}  // namespace logprim

#endif
