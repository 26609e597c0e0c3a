#ifndef LOGPRIM_LOGCONCAVE_HPP
#define LOGPRIM_LOGCONCAVE_HPP

#include <string>
#include <vector>

#include "logprim/rational.hpp"

namespace logprim {

// Coefficient sequence a_0..a_n with implicit zeros outside the range.
using Seq = std::vector<Rational>;

enum class CertStatus { Certified, Refuted, Inconclusive };

// Machine-checkable verdict of the iterate-then-r0-test procedure:
// Certified means L^0..L^{iterations_used} are nonnegative and
// L^{iterations_used} is r0-factor logconcave, which implies infinite
// logconcavity. Refuted carries the level and index of a negative entry.
struct Certificate {
    std::string family;  // "An" | "binomial" | "dlm" | "custom"
    int n = 0;
    int iterations_used = 0;
    CertStatus status = CertStatus::Inconclusive;
    int refuted_level = -1;
    int witness_index = -1;
    int max_iter = 0;

    std::string to_json() const;
    std::string status_string() const;
};

// b_j = a_j^2 - a_{j-1} a_{j+1}, boundary entries treated as zero.
Seq l_operator(const Seq& a);

bool is_logconcave(const Seq& a);

// Exact test of a_j^2 >= r0 * a_{j+1} a_{j-1} with r0 = (3+sqrt(5))/2.
// With P = a_{j+1} a_{j-1} and S = 2 a_j^2 - 3P the condition is
// S >= 0 and S^2 >= 5 P^2; no floating point involved.
// Throws std::domain_error on a negative entry.
bool is_r0_factor(const Seq& a);

Certificate certify(const Seq& a, int max_iter = 12,
                    const std::string& family = "custom", int n = 0);

// Executable form of the quadratic-discriminant proof that A_n is
// logconcave: for each interior j checks the quadratic value and the
// negativity of the discriminant bound.
bool discriminant_check(int n);

// d_{l,m} = 2^{-2m} sum_{k=l}^{m} 2^k C(2m-2k,m-k) C(m+k,m) C(k,l).
Rational d_coeff(int l, int m);

// Row {d_{l,m} : 0 <= l <= m}.
Seq d_row(int m);

// Binomial row {C(n,k) : 0 <= k <= n}.
Seq binomial_row(int n);

}  // namespace logprim

#endif
