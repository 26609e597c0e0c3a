#include "logprim/numtheory.hpp"

#include <mutex>

namespace logprim {

Integer factorial(unsigned n) {
    static std::vector<Integer> table{1};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (table.size() <= n)
        table.push_back(table.back() * (unsigned long)table.size());
    return table[n];
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (long p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= n; q += p) composite[q] = true;
    }
    return primes;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer lcm_range(long n) {
    if (n < 1) throw std::invalid_argument("lcm_range: n must be >= 1");
    static std::vector<Integer> table{1, 1};  // table[i] = lcm(1..i)
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while ((long)table.size() <= n) {
        Integer next;
        mpz_lcm_ui(next.get_mpz_t(), table.back().get_mpz_t(),
                   (unsigned long)table.size());
        table.push_back(next);
    }
    return table[n];
}

long mangoldt_exp(long n) {
    if (n < 2) throw std::invalid_argument("mangoldt_exp: n must be >= 2");
    long p = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    if (p == 0) return n;  // n itself is prime
    long m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 1;
}

long p_adic_valuation(const Integer& n, long p) {
    if (n == 0) throw std::domain_error("p_adic_valuation: zero input");
    Integer reduced;
    return (long)mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(),
                            Integer(p).get_mpz_t());
}

long p_adic_valuation(const Rational& q, long p) {
    if (q == 0) throw std::domain_error("p_adic_valuation: zero input");
    return p_adic_valuation(Integer(q.get_num()), p) -
           p_adic_valuation(Integer(q.get_den()), p);
}

long kummer_borrows(long n, long k, long p) {
    if (k < 0 || k > n)
        throw std::invalid_argument("kummer_borrows: need 0 <= k <= n");
    long borrows = 0;
    long carry = 0;
    while (n > 0 || k > 0) {
        long dn = n % p, dk = k % p;
        if (dn - carry < dk) {
            ++borrows;
            carry = 1;
        } else {
            carry = 0;
        }
        n /= p;
        k /= p;
    }
    return borrows;
}

std::vector<PrimePower> prime_powers_up_to(long n) {
    std::vector<PrimePower> result;
    for (long p : primes_up_to(n)) {
        Integer v = p;
        unsigned k = 1;
        while (v <= n) {
            result.push_back({p, k, v});
            v *= p;
            ++k;
        }
    }
    return result;
}

}  // namespace logprim
