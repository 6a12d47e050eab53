#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's convolution and enumeration code paths.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace uniqmax::oracle {

/// Calls fn(probability, y_scores) for every outcome via plain recursion over
/// games, multiplying rational probabilities as it goes.
inline void brute_force(const std::vector<mpq_class>& probs, int n,
                        const std::function<void(const mpq_class&, const std::vector<int>&)>& fn) {
    const int k = static_cast<int>(probs.size()) - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<int> scores(n, 0);
    std::function<void(std::size_t, mpq_class)> rec = [&](std::size_t g, mpq_class p) {
        if (g == pairs.size()) {
            fn(p, scores);
            return;
        }
        for (int a = 0; a <= k; ++a) {
            scores[pairs[g].first] += a;
            scores[pairs[g].second] += k - a;
            rec(g + 1, p * probs[a]);
            scores[pairs[g].first] -= a;
            scores[pairs[g].second] -= k - a;
        }
    };
    rec(0, mpq_class(1));
}

/// PMF of a sum of m i.i.d. payoffs by m sequential single-game convolutions.
inline std::vector<mpq_class> sequential_pmf(const std::vector<mpq_class>& probs, int m) {
    std::vector<mpq_class> pmf{mpq_class(1)};
    for (int step = 0; step < m; ++step) {
        std::vector<mpq_class> next(pmf.size() + probs.size() - 1);
        for (std::size_t y = 0; y < pmf.size(); ++y) {
            for (std::size_t a = 0; a < probs.size(); ++a) {
                next[y + a] += pmf[y] * probs[a];
            }
        }
        pmf = std::move(next);
    }
    return pmf;
}

inline mpz_class binomial(unsigned long n, unsigned long r) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, r);
    return c;
}

/// P(Binomial(m, 1/2) = y).
inline mpq_class binomial_half(unsigned long m, long y) {
    if (y < 0 || y > static_cast<long>(m)) {
        return 0;
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
    mpq_class r(binomial(m, static_cast<unsigned long>(y)), den);
    r.canonicalize();
    return r;
}

}  // namespace uniqmax::oracle
