#include "tg/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace tg {

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
    return r;
}

Integer double_factorial(long m) {
    if (m < -1) throw std::invalid_argument("double_factorial needs m >= -1");
    if (m <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), (unsigned long)m);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Rational bernoulli(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    // Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    for (long m = (long)cache.size(); m <= k; ++m) {
        Rational s(0);
        for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[(size_t)j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[(size_t)k];
}

Integer z_lambda(const Partition& lam) {
    Integer z = 1;
    int run = 0;
    int prev = -1;
    for (size_t i = 0; i <= lam.parts.size(); ++i) {
        int cur = i < lam.parts.size() ? lam.parts[i] : 0;
        if (cur == prev) {
            ++run;
        } else {
            if (prev > 0) {
                Integer p;
                mpz_ui_pow_ui(p.get_mpz_t(), (unsigned long)prev, (unsigned long)run);
                z *= p * factorial(run);
            }
            prev = cur;
            run = 1;
        }
    }
    return z;
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Frobenius to_frobenius(const Partition& lam) {
    Frobenius fr;
    const auto& p = lam.parts;
    for (int i = 0; i < (int)p.size(); ++i) {
        if (p[(size_t)i] < i + 1) break; // off the diagonal
        fr.arms.push_back(p[(size_t)i] - (i + 1));
        // leg = (number of parts >= i+1) - (i+1)
        int col = 0;
        for (int q : p) col += (q >= i + 1);
        fr.legs.push_back(col - (i + 1));
    }
    return fr;
}

Partition from_frobenius(const Frobenius& fr) {
    if (fr.arms.size() != fr.legs.size())
        throw std::invalid_argument("frobenius arms/legs length mismatch");
    int d = (int)fr.arms.size();
    // rows on/above the diagonal
    std::vector<int> rows;
    for (int i = 0; i < d; ++i) rows.push_back(fr.arms[(size_t)i] + i + 1);
    // column lengths determine the remaining rows
    int maxrow = 0;
    for (int i = 0; i < d; ++i) maxrow = std::max(maxrow, fr.legs[(size_t)i] + i + 1);
    for (int r = d; r < maxrow; ++r) {
        // row r (0-based below the diagonal): count columns i with leg reaching row r
        int len = 0;
        for (int i = 0; i < d; ++i) len += (fr.legs[(size_t)i] + i + 1 > r);
        rows.push_back(len);
    }
    return Partition{rows};
}

} // namespace tg
