#include "logprim/iterated.hpp"

#include "logprim/harmonic.hpp"

namespace logprim {

LogPolyExpr f_oracle(int n, int j, int max_n, int max_j) {
    if (n < 0 || j < 1) throw std::invalid_argument("f_oracle: need n >= 0, j >= 1");
    if (n > max_n || j > max_j)
        throw BudgetExceeded("f_oracle: (n, j) outside budget");
    LogPolyExpr e = LogPolyExpr::log_power(j);
    for (int i = 0; i < n; ++i) e = antiderivative(e);
    return e;
}

Polynomial a_poly(int n) {
    if (n < 1) throw std::invalid_argument("a_poly: need n >= 1");
    std::vector<Rational> coeffs(n);
    Rational inv_fact(1, factorial(n));
    inv_fact.canonicalize();
    const Rational hn = harmonic(n);
    for (int k = 1; k <= n; ++k)
        coeffs[k - 1] = inv_fact * Rational(binomial(n, k)) * (hn - harmonic(n - k));
    return Polynomial(std::move(coeffs));
}

Polynomial a_poly_alt(int n) {
    if (n < 1) throw std::invalid_argument("a_poly_alt: need n >= 1");
    Polynomial sum;
    for (int k = 0; k <= n; ++k) {
        Polynomial inner;
        for (int m = 1; m <= n - k; ++m) {
            Rational c(1, m);
            if (m % 2 == 0) c = -c;
            inner = inner + Polynomial::monomial(m - 1, c);
        }
        sum = sum + inner.scaled(Rational(binomial(n, k))) * Polynomial::monomial(k, Rational(1));
    }
    Rational inv_fact(1, factorial(n));
    inv_fact.canonicalize();
    return sum.scaled(inv_fact);
}

Polynomial a_rec(int n) {
    if (n < 1) throw std::invalid_argument("a_rec: need n >= 1");
    // row[k-1] = a_{m,k}
    std::vector<Rational> prev;
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> row(m);
        Rational inv_fact(1, factorial(m));
        inv_fact.canonicalize();
        row[0] = inv_fact;
        for (int k = 2; k <= m; ++k) {
            Rational v = prev[k - 2] + inv_fact * Rational(binomial(m - 1, k - 1));
            row[k - 1] = v / k;
        }
        prev = std::move(row);
    }
    return Polynomial(std::move(prev));
}

Polynomial b_poly(int n) {
    if (n < 0) throw std::invalid_argument("b_poly: need n >= 0");
    Rational inv_fact(1, factorial(n));
    inv_fact.canonicalize();
    return Polynomial::one_plus_x_pow(n).scaled(inv_fact);
}

Rational b_coeff(int n, int k, int j) {
    if (k < 1 || k > j) throw std::invalid_argument("b_coeff: need 1 <= k <= j");
    Rational v(factorial(j), factorial(n) * factorial(k));
    v.canonicalize();
    v *= gen_harmonic(n, j - k);
    if ((j - k) % 2 == 1) v = -v;
    return v;
}

Rational b_coeff_rec(int n, int k, int j) {
    if (k < 1 || k > j) throw std::invalid_argument("b_coeff_rec: need 1 <= k <= j");
    // rows in n; row[k] = b_{n,k,j} for k = 0..j
    std::vector<Rational> row(j + 1, Rational(0));
    row[j] = 1;  // b_{0,j,j} = 1, b_{0,k,j} = 0 for k < j
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> next(j + 1, Rational(0));
        next[j] = row[j] / m;
        for (int kk = j - 1; kk >= 0; --kk)
            next[kk] = -(Rational(kk + 1) * next[kk + 1]) / m + row[kk] / m;
        row = std::move(next);
    }
    return row[k];
}

Polynomial a_poly_general(int n, int j) {
    if (n < 1 || j < 1)
        throw std::invalid_argument("a_poly_general: need n, j >= 1");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    Rational inner = 0;  // sum_{k=0}^{r-1} H_{n-k,j-1}/(n-k)
    for (int r = 1; r <= n; ++r) {
        inner += gen_harmonic(n - (r - 1), j - 1) / (n - (r - 1));
        coeffs[r] = Rational(binomial(n, r)) * inner;
    }
    Rational scale(factorial(j), factorial(n));
    scale.canonicalize();
    if (j % 2 == 1) scale = -scale;
    return Polynomial(std::move(coeffs)).scaled(scale);
}

Polynomial c_rec(int n, int j) {
    if (n < 0 || j < 1) throw std::invalid_argument("c_rec: need n >= 0, j >= 1");
    // prev[r] = c_{m-1,r,j}; A_{0,j} = 0
    std::vector<Rational> prev;
    for (int m = 1; m <= n; ++m) {
        Rational alpha(factorial(j), factorial(m));
        alpha.canonicalize();
        alpha *= gen_harmonic(m, j - 1);
        if (j % 2 == 1) alpha = -alpha;
        std::vector<Rational> row(m + 1, Rational(0));
        row[1] = alpha;
        for (int r = 2; r <= m; ++r) {
            Rational v = prev[r - 1] + Rational(binomial(m - 1, r - 1)) * alpha;
            row[r] = v / r;
        }
        prev = std::move(row);
    }
    return Polynomial(std::move(prev));
}

IteratedResult f_closed(int n, int j) {
    if (n < 0 || j < 1) throw std::invalid_argument("f_closed: need n >= 0, j >= 1");
    IteratedResult result;
    result.n = n;
    result.j = j;
    if (n == 0) {
        result.expr = LogPolyExpr::log_power(j);
        result.b_coeffs.assign(j, Rational(0));
        result.b_coeffs[j - 1] = 1;
        return result;
    }
    result.a_part = a_poly_general(n, j);
    LogPolyExpr e = LogPolyExpr::log_power(0, result.a_part);
    const Polynomial opx = Polynomial::one_plus_x_pow(n);
    for (int k = 1; k <= j; ++k) {
        Rational b = b_coeff(n, k, j);
        result.b_coeffs.push_back(b);
        e = e + LogPolyExpr::log_power(k, opx.scaled(b));
    }
    result.expr = e;
    return result;
}

std::pair<Rational, Rational> series_partial(int n, const Rational& x0,
                                             int terms) {
    if (n < 1) throw std::invalid_argument("series_partial: need n >= 1");
    if (!(x0 > 0 && x0 < 1))
        throw std::domain_error("series_partial: x0 must lie in (0,1)");
    auto term = [&](int i) {
        // x0^{n+i} / (i (i+1) ... (i+n)), unsigned
        Rational pow;
        mpz_pow_ui(pow.get_num_mpz_t(), x0.get_num_mpz_t(), n + i);
        mpz_pow_ui(pow.get_den_mpz_t(), x0.get_den_mpz_t(), n + i);
        Integer prod = 1;
        for (int d = i; d <= i + n; ++d) prod *= d;
        Rational t = pow / Rational(prod);
        t.canonicalize();
        return t;
    };
    Rational partial = 0;
    for (int i = 1; i <= terms; ++i) {
        // -x0^n * (-x0)^i / (...) alternates starting positive at i = 1
        Rational t = term(i);
        partial += (i % 2 == 1) ? t : -t;
    }
    return {partial, term(terms + 1)};
}

bool identity_check(int n) {
    if (n < 1) throw std::invalid_argument("identity_check: need n >= 1");
    Polynomial lhs, rhs;
    for (int k = 0; k <= n; ++k) {
        Polynomial inner;
        for (int m = 1; m <= n - k; ++m) {
            Rational c(1, m);
            if (m % 2 == 1) c = -c;  // (-x)^m sign
            inner = inner + Polynomial::monomial(m, c);
        }
        lhs = lhs + inner.scaled(Rational(binomial(n, k))) *
                        Polynomial::monomial(k, Rational(1));
    }
    lhs = -lhs;
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int m = 1; m <= k; ++m) s += Rational(1, m + n - k);
        rhs = rhs + Polynomial::monomial(k, Rational(binomial(n, k)) * s);
    }
    return lhs == rhs;
}

}  // namespace logprim
