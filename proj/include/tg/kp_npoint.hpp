#pragma once

#include "tg/graded_poly.hpp"
#include "tg/multi_laurent.hpp"
#include "tg/npoint_series.hpp"
#include "tg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tg {

// Affine coordinates of the point of the big cell: the normalized basis is
// f_n = z^n + sum_m a_{n,m} z^{-m-1}.  Here a_{n,m} = m!! when n = 0 and m is
// odd, else 0.
Rational affine_coord(int n, int m);

// A(xi, eta) = xi^{-1} sum_k (2k+1)!! eta^{-2k-2};  \hat A(z_i, z_j) is
// A(z_i, z_j) plus the expansion of 1/(z_i - z_j) in the region where the
// higher-index variable dominates:
//   i < j:  sum_{k>=0} z_i^{-1-k} z_j^k
//   i > j:  -sum_{k>=0} z_j^{-1-k} z_i^k
//   i = j:  the diagonal A(z, z) = sum_k (2k+1)!! z^{-2k-3}.
// Both pieces are truncated at expansion order M (principal k <= M, A-part
// exponents >= -M).  Intended as a test oracle and for small direct products.
MultiLaurent a_hat(int i, int j, int nvars, int M);

// Connected n-point function G_(n): the coefficient of
// z_1^{-j_1-1} ... z_n^{-j_n-1} for every key with sum (j_i + 1) <= L, exact.
// n = 1 and n = 2 use the closed forms; n >= 3 sums over the (n-1)! cycles
// with sigma(1) = 1.  Around a cycle each variable's exponent is split
// between its two incident edge factors, which pins the admissible terms of
// every factor to a finite set per output key (the A-part orders are budgeted
// by sum j_i), so no expansion-order cutoff is needed.  max_exponent (default
// -2) widens the per-variable exponent window for property tests; keys whose
// coefficients cancel to zero are dropped.
NPointSeries connected_npoint(int n, int L, int max_exponent = -2);

// Same sum enumerating all n! cyclic orderings and dividing by n (cross-check
// of the sigma(1) = 1 representative choice); n >= 3.
NPointSeries connected_npoint_allcycles(int n, int L);

// F = sum_n Psi(G_(n)) with Psi: z_1^{-j_1-1}...z_n^{-j_n-1} ->
// t_{j_1-1}...t_{j_n-1} / (n! j_1! ... j_n!); equals free_energy(maxdeg).
GradedPoly assemble_F(long maxdeg);

// Exact Laurent series on the explicit window [lo, hi]; coefficients outside
// are unknown below lo and zero above hi.
struct LaurentVector {
    int lo = 0;
    int hi = -1;
    std::vector<Rational> c; // c[e - lo]

    LaurentVector() = default;
    LaurentVector(int lo_, int hi_) : lo(lo_), hi(hi_), c((size_t)(hi_ - lo_ + 1)) {}

    Rational coeff(int e) const {
        return (e < lo || e > hi) ? Rational(0) : c[(size_t)(e - lo)];
    }
    void add(int e, const Rational& v) {
        if (e < lo || e > hi) return;
        c[(size_t)(e - lo)] += v;
    }
};

// f_n on [lo, hi]: z^n + sum_m a_{n,m} z^{-m-1}
LaurentVector normalized_basis(int n, int lo, int hi);

// Symbolic differential operator sum c z^p d/dz^q with q <= 2.
struct KSOperator {
    std::map<std::pair<int, int>, Rational> terms; // (p, q) -> c

    void add(int p, int q, const Rational& v);
    bool operator==(const KSOperator& o) const { return terms == o.terms; }
};

KSOperator ks_Q();        // d/dz + z - z^{-1}
KSOperator ks_Qn(int n);  // -z^{n+1} d/dz - z^{n+2} + z^n
KSOperator ks_scale(const KSOperator& a, const Rational& c);
KSOperator ks_sub(const KSOperator& a, const KSOperator& b);
KSOperator ks_compose(const KSOperator& a, const KSOperator& b);
KSOperator ks_commutator(const KSOperator& a, const KSOperator& b);

// Applies the operator; the result window is shifted by max(p - q) over the
// operator's terms so that the unknown tail of f below lo cannot contaminate
// any reported coefficient.
LaurentVector ks_apply(const KSOperator& op, const LaurentVector& f);

// Verifies Q(f_0) = f_1 on >= window coefficients, Q(f_n) = f_{n+1} +
// (n-1) f_{n-1} for 1 <= n <= n_max, and [Q_m, Q_n] = (m-n) Q_{m+n} for
// m, n <= 4 by symbolic composition.  Empty string = pass.
std::string ks_verify(int n_max, int window);

} // namespace tg
