#include "logprim/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace logprim {

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()),
                              Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1,
                              Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * (long)i;
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x0 + *it;
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Synthetic Taylor shift: repeatedly divide by (x - (-c)).
    if (is_zero() || c == 0) return *this;
    std::vector<Rational> work(coeffs_);
    int n = (int)work.size();
    for (int i = 0; i < n - 1; ++i)
        for (int j = n - 2; j >= i; --j)
            work[j] += c * work[j + 1];
    return Polynomial(std::move(work));
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (is_zero()) return Polynomial();
    if (degree() < d.degree())
        throw NonExactDivision("divide_exact: degree of dividend too small");
    std::vector<Rational> rem(coeffs_);
    std::vector<Rational> quot(degree() - d.degree() + 1, Rational(0));
    const Rational& lead = d.coeffs().back();
    for (int i = (int)quot.size() - 1; i >= 0; --i) {
        Rational q = rem[i + d.degree()] / lead;
        quot[i] = q;
        for (int j = 0; j <= d.degree(); ++j)
            rem[i + j] -= q * d.coeff(j);
    }
    for (const auto& r : rem)
        if (r != 0) throw NonExactDivision("divide_exact: nonzero remainder");
    return Polynomial(std::move(quot));
}

Polynomial Polynomial::one_plus_x_pow(int n) {
    std::vector<Rational> out(n + 1);
    for (int k = 0; k <= n; ++k) out[k] = Rational(binomial(n, k));
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(coeffs_[k]);
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace logprim
