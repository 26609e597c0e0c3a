#ifndef LOGPRIM_LOGPOLY_HPP
#define LOGPRIM_LOGPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "logprim/polynomial.hpp"

namespace logprim {

struct NonRepresentableDerivative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite sum  sum_k P_k(x) * ln^k(1+x), the closed class of the iterated
// antiderivatives. k=0 is the pure-polynomial part; zero polynomials are
// never stored.
class LogPolyExpr {
public:
    LogPolyExpr() = default;
    explicit LogPolyExpr(std::map<int, Polynomial> terms)
        : terms_(std::move(terms)) {
        normalize();
    }
    static LogPolyExpr log_power(int k, const Polynomial& p = Polynomial::constant(1)) {
        return LogPolyExpr({{k, p}});
    }

    const std::map<int, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_log_power() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first;
    }
    Polynomial part(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Polynomial() : it->second;
    }
    void set_part(int k, const Polynomial& p) {
        if (p.is_zero())
            terms_.erase(k);
        else
            terms_[k] = p;
    }

    LogPolyExpr operator+(const LogPolyExpr& other) const;
    LogPolyExpr scaled(const Rational& c) const;
    bool operator==(const LogPolyExpr& other) const {
        return terms_ == other.terms_;
    }

    std::string to_string() const;

private:
    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero() || it->first < 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
    std::map<int, Polynomial> terms_;
};

// The antiderivative F with F' = e and F(0) = 0. Works per term through
// the substitution t = 1+x and the closed form
//   int t^r ln^k t dt = t^{r+1} sum_{i=0}^{k} (-1)^i k!/(k-i)! ln^{k-i}t / (r+1)^{i+1}.
LogPolyExpr antiderivative(const LogPolyExpr& e);

// Formal d/dx, which stays in the class only when every k*P_k is divisible
// by (1+x); otherwise throws NonRepresentableDerivative.
LogPolyExpr derivative_logpoly(const LogPolyExpr& e);

// (P_0(x0), ..., P_J(x0)): the value of e at x0 is sum_k c_k u^k with
// u = ln(1+x0), kept split so evaluation stays exact.
std::vector<Rational> eval_components(const LogPolyExpr& e, const Rational& x0);

// Canonical JSON: polynomial as array of "num/den" strings ascending by
// degree, expression as object {"k": polynomial}. Bit-exact round trip.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& json);
std::string logpoly_to_json(const LogPolyExpr& e);
LogPolyExpr logpoly_from_json(const std::string& json);

}  // namespace logprim

#endif
