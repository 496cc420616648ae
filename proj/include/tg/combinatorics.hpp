#pragma once

#include "tg/rational.hpp"

#include <utility>
#include <vector>

namespace tg {

// n!  (arbitrary precision)
Integer factorial(long n);

// m!! = m (m-2) (m-4) ...; conventions (-1)!! = 0!! = 1.
Integer double_factorial(long m);

// Binomial coefficient C(n, k), 0 for k < 0 or k > n.
Integer binomial(long n, long k);

// Bernoulli number B_k in the convention B_2 = 1/6, B_4 = -1/30
// (B_1 = -1/2, never used downstream).  k >= 0; odd k > 1 gives 0,
// but callers of the public even-index entry point must pass even k.
Rational bernoulli(long k);

// A partition: non-increasing list of positive parts.
struct Partition {
    std::vector<int> parts; // non-increasing

    long weight() const {
        long w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int length() const { return (int)parts.size(); }
    // multiplicity of part i
    int multiplicity(int i) const {
        int m = 0;
        for (int p : parts) m += (p == i);
        return m;
    }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// z_lambda = prod_i i^{m_i} m_i!
Integer z_lambda(const Partition& lam);

// All partitions of n, lexicographically descending (so (n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

// Frobenius notation: arm lengths a_i = lambda_i - i, leg lengths
// b_i = lambda'_i - i along the main diagonal; both strictly decreasing.
struct Frobenius {
    std::vector<int> arms;
    std::vector<int> legs;
};

Frobenius to_frobenius(const Partition& lam);
Partition from_frobenius(const Frobenius& fr);

} // namespace tg
