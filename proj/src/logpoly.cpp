#include "logprim/logpoly.hpp"

#include <sstream>

#include <json.hpp>

namespace logprim {

LogPolyExpr LogPolyExpr::operator+(const LogPolyExpr& other) const {
    std::map<int, Polynomial> out = terms_;
    for (const auto& [k, p] : other.terms_) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, p);
        else
            it->second = it->second + p;
    }
    return LogPolyExpr(std::move(out));
}

LogPolyExpr LogPolyExpr::scaled(const Rational& c) const {
    std::map<int, Polynomial> out;
    if (c == 0) return LogPolyExpr();
    for (const auto& [k, p] : terms_) out.emplace(k, p.scaled(c));
    return LogPolyExpr(std::move(out));
}

std::string LogPolyExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : terms_) {
        if (!first) os << " + ";
        os << "(" << p.to_string() << ")";
        if (k == 1)
            os << "*ln(1+x)";
        else if (k >= 2)
            os << "*ln(1+x)^" << k;
        first = false;
    }
    return os.str();
}

LogPolyExpr antiderivative(const LogPolyExpr& e) {
    // Accumulate in the t = 1+x basis, per log power of t.
    std::map<int, Polynomial> acc_t;
    for (const auto& [k, p] : e.terms()) {
        Polynomial q = p.shifted(Rational(-1));  // q(t) = p(t-1)
        for (int r = 0; r <= q.degree(); ++r) {
            const Rational qr = q.coeff(r);
            if (qr == 0) continue;
            Rational falling = 1;       // k!/(k-i)!
            Rational invpow(1, r + 1);  // 1/(r+1)^{i+1}
            for (int i = 0; i <= k; ++i) {
                Rational c = qr * falling * invpow;
                if (i % 2 == 1) c = -c;
                Polynomial& dst = acc_t[k - i];
                dst = dst + Polynomial::monomial(r + 1, c);
                falling *= (k - i);
                invpow /= (r + 1);
            }
        }
    }
    std::map<int, Polynomial> acc_x;
    for (auto& [m, poly_t] : acc_t)
        acc_x[m] = poly_t.shifted(Rational(1));  // back to x
    LogPolyExpr result{std::move(acc_x)};
    // Fix the integration constant: F(0) = 0 (the ln^k parts vanish there).
    Polynomial p0 = result.part(0);
    result.set_part(0, p0 - Polynomial::constant(p0.eval(Rational(0))));
    return result;
}

LogPolyExpr derivative_logpoly(const LogPolyExpr& e) {
    static const Polynomial one_plus_x = Polynomial::one_plus_x_pow(1);
    std::map<int, Polynomial> out;
    for (const auto& [k, p] : e.terms()) {
        Polynomial dp = p.derivative();
        if (!dp.is_zero()) {
            auto it = out.find(k);
            if (it == out.end()) out.emplace(k, dp);
            else it->second = it->second + dp;
        }
        if (k >= 1) {
            Polynomial chain;
            try {
                chain = p.scaled(Rational(k)).divide_exact(one_plus_x);
            } catch (const NonExactDivision&) {
                throw NonRepresentableDerivative(
                    "derivative_logpoly: k*P_k not divisible by (1+x) at k=" +
                    std::to_string(k));
            }
            auto it = out.find(k - 1);
            if (it == out.end()) out.emplace(k - 1, chain);
            else it->second = it->second + chain;
        }
    }
    return LogPolyExpr(std::move(out));
}

std::vector<Rational> eval_components(const LogPolyExpr& e, const Rational& x0) {
    std::vector<Rational> comps(e.max_log_power() + 1, Rational(0));
    for (const auto& [k, p] : e.terms()) comps[k] = p.eval(x0);
    return comps;
}

namespace {

nlohmann::json poly_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Polynomial poly_from(const nlohmann::json& arr) {
    std::vector<Rational> coeffs;
    for (const auto& s : arr)
        coeffs.push_back(rational_from_string(s.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
    return poly_json(p).dump();
}

Polynomial polynomial_from_json(const std::string& json) {
    return poly_from(nlohmann::json::parse(json));
}

std::string logpoly_to_json(const LogPolyExpr& e) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, p] : e.terms()) obj[std::to_string(k)] = poly_json(p);
    return obj.dump();
}

LogPolyExpr logpoly_from_json(const std::string& json) {
    auto obj = nlohmann::json::parse(json);
    std::map<int, Polynomial> terms;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        terms.emplace(std::stoi(it.key()), poly_from(it.value()));
    return LogPolyExpr(std::move(terms));
}

}  // namespace logprim
