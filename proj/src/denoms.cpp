#include "logprim/denoms.hpp"

#include <sstream>

#include <json.hpp>

#include "logprim/harmonic.hpp"
#include "logprim/iterated.hpp"
#include "logprim/numtheory.hpp"

namespace logprim {

Integer poly_denominator(const Polynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Integer alpha_closed(int n) {
    if (n < 1) throw std::invalid_argument("alpha_closed: need n >= 1");
    return factorial(n) * lcm_range(n);
}

namespace {

Integer alpha_measured(int n) {
    // alpha_0 = 1 by convention (A_0 has no A-part).
    return n == 0 ? Integer(1) : poly_denominator(a_poly(n));
}

}  // namespace

Integer beta(int n) {
    if (n < 2) throw std::invalid_argument("beta: need n >= 2");
    Rational q(alpha_measured(n), n * alpha_measured(n - 1));
    q.canonicalize();
    if (q.get_den() != 1)
        throw std::logic_error(
            "beta: non-integral quotient at n=" + std::to_string(n) +
            " (this contradicts the denominator theorem)");
    return q.get_num();
}

DenominatorReport denominator_report(int n) {
    DenominatorReport r;
    r.n = n;
    r.alpha_measured = alpha_measured(n);
    r.alpha_closed = n == 0 ? Integer(1) : alpha_closed(n);
    r.beta = n >= 2 ? beta(n) : Integer(1);
    r.mangoldt = n >= 2 ? mangoldt_exp(n) : 1;
    r.match = r.alpha_measured == r.alpha_closed;
    return r;
}

std::string DenominatorReport::to_json() const {
    nlohmann::json j{{"n", n},
                     {"alpha_measured", alpha_measured.get_str()},
                     {"alpha_closed", alpha_closed.get_str()},
                     {"beta", beta.get_str()},
                     {"mangoldt", mangoldt},
                     {"match", match}};
    return j.dump();
}

std::string DenominatorReport::csv_header() {
    return "n,alpha_measured,alpha_closed,beta,mangoldt,match";
}

std::string DenominatorReport::to_csv_row() const {
    std::ostringstream os;
    os << n << ',' << alpha_measured.get_str() << ',' << alpha_closed.get_str()
       << ',' << beta.get_str() << ',' << mangoldt << ','
       << (match ? "true" : "false");
    return os.str();
}

bool lemma32_check(int n, long p, int k) {
    Integer pk = int_pow(Integer(p), (unsigned)k);
    if (pk > n) throw std::invalid_argument("lemma32_check: need p^k <= n");
    unsigned long m = pk.get_ui();
    Rational v = Rational(binomial(n, m)) * (harmonic(n) - harmonic(n - (int)m));
    return p_adic_valuation(v, p) == -k;
}

bool cor58_check(int n, int k, int j) {
    Rational b = b_coeff(n, k, j);
    if (b == 0) return true;
    Integer den = b.get_den();
    long bound = std::max(n, k);
    // strip all primes <= bound; anything left violates the claim
    for (long p : primes_up_to(bound)) {
        Integer tmp;
        mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
        den = tmp;
    }
    return den == 1;
}

}  // namespace logprim
