#pragma once

#include "tg/combinatorics.hpp"
#include "tg/rational.hpp"

#include <map>
#include <string>

namespace tg {

// Symmetric function expanded over the power-sum basis: sum c_lambda p_lambda,
// truncated at |lambda| <= cap.
struct SymFunc {
    int cap = 0;
    std::map<Partition, Rational> terms;

    SymFunc() = default;
    explicit SymFunc(int degree_cap) : cap(degree_cap) {}

    void add_term(const Partition& lam, const Rational& c);
    Rational coeff(const Partition& lam) const;
    bool operator==(const SymFunc& o) const { return cap == o.cap && terms == o.terms; }
};

SymFunc sf_add(const SymFunc& a, const SymFunc& b);
SymFunc sf_sub(const SymFunc& a, const SymFunc& b);
SymFunc sf_scale(const SymFunc& a, const Rational& c);
SymFunc sf_mul(const SymFunc& a, const SymFunc& b);

// h_n = sum_{|lambda|=n} p_lambda / z_lambda
SymFunc h_in_p(int n, int cap);
// e_n = omega(h_n), omega(p_lambda) = (-1)^{|lambda|-l(lambda)} p_lambda
SymFunc e_in_p(int n, int cap);
SymFunc omega(const SymFunc& f);
// hook Schur s_{(m|n)} = sum_{i=0..n} (-1)^i h_{m+1+i} e_{n-i}
SymFunc schur_hook(int m, int n, int cap);
// s_lambda via the Frobenius determinant of hook Schur functions
SymFunc schur(const Partition& lam, int cap);
// Jacobi-Trudi oracle det(h_{lambda_i - i + j})
SymFunc schur_jacobi_trudi(const Partition& lam, int cap);

// Sum over isomorphism classes of multigraphs (loops/multiedges allowed, not
// necessarily connected, <= 5 vertices) with the given valence profile of
// 1/|Aut|; brute force with explicit automorphism counting.
Rational graph_sum_oracle(const std::vector<int>& valences);

// Substitutes t_a = a! p_{a+1} into the gravity partition function at degree D
// and compares with 1 + sum (2k+1)!! h_{2k+2}.  Returns empty string when
// equal, else a description of the first discrepancy.
std::string verify_bosonic_Z(int D);

std::string sf_dump(const SymFunc& f);

} // namespace tg
