#include "logprim/logconcave.hpp"

#include <json.hpp>

#include "logprim/harmonic.hpp"

namespace logprim {

Seq l_operator(const Seq& a) {
    Seq out(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        Rational prev = j > 0 ? a[j - 1] : Rational(0);
        Rational next = j + 1 < a.size() ? a[j + 1] : Rational(0);
        out[j] = a[j] * a[j] - prev * next;
    }
    return out;
}

bool is_logconcave(const Seq& a) {
    for (const auto& v : l_operator(a))
        if (v < 0) return false;
    return true;
}

namespace {

// Shared r0 test; works for any exactly-comparable ring element.
template <typename T>
bool r0_factor_at(const T& prev, const T& cur, const T& next) {
    T p = prev * next;
    if (p == 0) return true;  // condition trivially holds
    T s = 2 * cur * cur - 3 * p;
    return s >= 0 && s * s >= 5 * p * p;
}

template <typename T>
bool r0_factor_all(const std::vector<T>& a) {
    for (size_t j = 0; j < a.size(); ++j) {
        T prev = j > 0 ? a[j - 1] : T(0);
        T next = j + 1 < a.size() ? a[j + 1] : T(0);
        if (!r0_factor_at(prev, a[j], next)) return false;
    }
    return true;
}

}  // namespace

bool is_r0_factor(const Seq& a) {
    for (const auto& v : a)
        if (v < 0) throw std::domain_error("is_r0_factor: negative entry");
    return r0_factor_all(a);
}

Certificate certify(const Seq& a, int max_iter, const std::string& family,
                    int n) {
    Certificate cert;
    cert.family = family;
    cert.n = n;
    cert.max_iter = max_iter;

    // Rescale to integers by the common denominator; both the L-sign
    // pattern and the r0 test are invariant under positive scaling.
    Integer den = 1;
    for (const auto& v : a)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> cur;
    cur.reserve(a.size());
    for (const auto& v : a) {
        Rational s = v * Rational(den);
        cur.push_back(Integer(s.get_num()));
    }

    for (int level = 0;; ++level) {
        for (size_t j = 0; j < cur.size(); ++j) {
            if (cur[j] < 0) {
                cert.status = CertStatus::Refuted;
                cert.refuted_level = level;
                cert.witness_index = (int)j;
                cert.iterations_used = level;
                return cert;
            }
        }
        if (r0_factor_all(cur)) {
            cert.status = CertStatus::Certified;
            cert.iterations_used = level;
            return cert;
        }
        if (level == max_iter) break;
        std::vector<Integer> next(cur.size());
        for (size_t j = 0; j < cur.size(); ++j) {
            Integer prev = j > 0 ? cur[j - 1] : Integer(0);
            Integer nxt = j + 1 < cur.size() ? cur[j + 1] : Integer(0);
            next[j] = cur[j] * cur[j] - prev * nxt;
        }
        cur = std::move(next);
    }
    cert.status = CertStatus::Inconclusive;
    cert.iterations_used = max_iter;
    return cert;
}

bool discriminant_check(int n) {
    if (n < 1) throw std::invalid_argument("discriminant_check: need n >= 1");
    const Rational hn = harmonic(n);
    for (int j = 1; j <= n - 1; ++j) {
        Rational f = hn - harmonic(n - j);
        Rational quad =
            Rational((long)(n + 1) * (n - j + 1), j) * f * f - f + 1;
        quad.canonicalize();
        if (quad < 0) return false;
        // discriminant numerator j(4n+5) - 4(1+n)^2 must be negative
        long disc = (long)j * (4L * n + 5) - 4L * (n + 1) * (n + 1);
        if (disc >= 0) return false;
    }
    return true;
}

Rational d_coeff(int l, int m) {
    if (l < 0 || l > m) throw std::invalid_argument("d_coeff: need 0 <= l <= m");
    Integer sum = 0;
    for (int k = l; k <= m; ++k)
        sum += int_pow(Integer(2), (unsigned)k) * binomial(2 * m - 2 * k, m - k) *
               binomial(m + k, m) * binomial(k, l);
    Rational r(sum, int_pow(Integer(2), (unsigned)(2 * m)));
    r.canonicalize();
    return r;
}

Seq d_row(int m) {
    Seq row(m + 1);
    for (int l = 0; l <= m; ++l) row[l] = d_coeff(l, m);
    return row;
}

Seq binomial_row(int n) {
    Seq row(n + 1);
    for (int k = 0; k <= n; ++k) row[k] = Rational(binomial(n, k));
    return row;
}

std::string Certificate::status_string() const {
    switch (status) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Refuted: return "Refuted";
        default: return "Inconclusive";
    }
}

std::string Certificate::to_json() const {
    nlohmann::json j{{"family", family},
                     {"n", n},
                     {"iterations_used", iterations_used},
                     {"status", status_string()}};
    if (status == CertStatus::Refuted) {
        j["refuted_level"] = refuted_level;
        j["witness_index"] = witness_index;
    }
    if (status == CertStatus::Inconclusive) j["max_iter"] = max_iter;
    return j.dump();
}

}  // namespace logprim
