#include "logprim/harmonic.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace logprim {

namespace {

// grid[n][m] = H_{n,m}; rows grown on demand under the lock.
std::vector<std::vector<Rational>>& harmonic_grid() {
    static std::vector<std::vector<Rational>> grid;
    return grid;
}
std::mutex grid_mtx;

void ensure_grid(int n, int m) {
    auto& grid = harmonic_grid();
    for (int i = (int)grid.size(); i <= n; ++i)
        grid.push_back({Rational(1)});  // H_{i,0} = 1
    for (int i = 0; i <= n; ++i) {
        auto& row = grid[i];
        while ((int)row.size() <= m) {
            int mm = (int)row.size();
            if (i == 0) {
                row.push_back(Rational(0));  // H_{0,m} = 0 for m >= 1
            } else {
                Rational v = row[mm - 1] / i + grid[i - 1][mm];
                row.push_back(v);
            }
        }
    }
}

}  // namespace

Rational gen_harmonic(int n, int m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("gen_harmonic: need n, m >= 0");
    std::lock_guard<std::mutex> lock(grid_mtx);
    ensure_grid(n, m);
    return harmonic_grid()[n][m];
}

Rational harmonic(int n) {
    if (n < 0) throw std::invalid_argument("harmonic: need n >= 0");
    return gen_harmonic(n, 1);
}

Rational gen_harmonic_alt(int n, int m) {
    if (n < 1) throw std::invalid_argument("gen_harmonic_alt: need n >= 1");
    Rational sum = 0;
    for (int k = 1; k <= n; ++k) {
        Rational term(binomial(n, k), int_pow(Integer(k), (unsigned)m));
        term.canonicalize();
        if (k % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

Rational gen_harmonic_enum(int n, int m, long budget) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("gen_harmonic_enum: need n, m >= 0");
    if (m == 0) return Rational(1);
    if (n == 0) return Rational(0);
    Integer count = binomial((unsigned)(n + m - 1), (unsigned)m);
    if (count > budget)
        throw std::length_error("gen_harmonic_enum: tuple count exceeds budget");

    Rational sum = 0;
    // tuple[i] in {1..n}, nondecreasing; product maintained incrementally
    std::vector<int> tuple(m, 1);
    auto rec = [&](auto&& self, int pos, const Integer& prod) -> void {
        if (pos == m) {
            Rational term(1, prod);
            term.canonicalize();
            sum += term;
            return;
        }
        int lo = pos == 0 ? 1 : tuple[pos - 1];
        for (int a = lo; a <= n; ++a) {
            tuple[pos] = a;
            self(self, pos + 1, prod * a);
        }
    };
    rec(rec, 0, Integer(1));
    return sum;
}

}  // namespace logprim
