#ifndef LOGPRIM_POLYNOMIAL_HPP
#define LOGPRIM_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "logprim/rational.hpp"

namespace logprim {

struct NonExactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial over Rational. Coefficients ascending by
// degree, trailing zeros stripped; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        normalize();
    }
    static Polynomial constant(const Rational& c) {
        return Polynomial({c});
    }
    static Polynomial monomial(int degree, const Rational& c) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < (int)coeffs_.size()) ? coeffs_[k] : Rational(0);
    }
    void set_coeff(int k, const Rational& c) {
        if (k >= (int)coeffs_.size()) coeffs_.resize(k + 1, Rational(0));
        coeffs_[k] = c;
        normalize();
    }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& other) const {
        return coeffs_ == other.coeffs_;
    }

    Polynomial derivative() const;
    Rational eval(const Rational& x0) const;

    // p(x + c); exact binomial basis change, used for x <-> 1+x.
    Polynomial shifted(const Rational& c) const;

    // Quotient q with *this = q * d; throws NonExactDivision on nonzero
    // remainder.
    Polynomial divide_exact(const Polynomial& d) const;

    // (1+x)^n / scale_den, a recurring building block.
    static Polynomial one_plus_x_pow(int n);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

}  // namespace logprim

#endif
