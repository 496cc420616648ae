#pragma once

#include "tg/graded_poly.hpp"

#include <string>

namespace tg {

// Z^{1D} at lambda = 1, truncated to degree D (deg t_a = a+1): the closed sum
// over tuples (m_1,...) with sum j*m_j = 2n, coefficient
// (2n-1)!! / prod (j!)^{m_j} m_j!.
GradedPoly partition_function(long D);

// F^{1D} = log Z^{1D}
GradedPoly free_energy(long D);

// Virasoro operators at lambda = 1.
//   Original family (L_m):
//     L_{-1} = t_0 + sum_{n>=1} (t_n - d_{n,1}) d/dt_{n-1}
//     L_0    = 1 + sum_{n>=0} (n+1)(t_n - d_{n,1}) d/dt_n
//     L_m    = (m+1)! d/dt_{m-1}
//              + sum_{n>=1} (t_{n-1} - d_{n,2}) (m+n)!/(n-1)! d/dt_{m+n-1}
//   Reformulated family (L_m^{1D}): same L_{-1}, L_0;
//     L_m    = (m+3)/2 m! d/dt_{m-1}
//              + 1/2 sum_{m1+m2=m, mi>=1} m1! m2! d^2/dt_{m1-1} dt_{m2-1}
//              + sum_{n>=0} (m+n+1)!/n! (t_n - d_{n,1}) d/dt_{m+n}
enum class VirasoroFamily { Original, Reformulated };

struct VirasoroOp {
    int m;
    VirasoroFamily family;
};

GradedPoly apply_virasoro(const VirasoroOp& op, const GradedPoly& P);

// The t-part of L_m shifts degree by -m and the delta-part by -(m+2); this
// helper returns the sub-window degree on which apply_virasoro(op, P) is
// exact given P exact to degree D.
long virasoro_exact_window(const VirasoroOp& op, long D);

// d Z/dt_n = 1/(n+1)! d^{n+1} Z/dt_0^{n+1}; empty string = pass, else report.
std::string flow_check(int n, long D);
// sum_n (t_n - d_{n,1})/n! d^n Z/dt_0^n = 0
std::string polymer_check(long D);

// Z via exp(M^{1D})(1) where M^{1D} is the degree +2 cut-and-join operator.
GradedPoly cut_and_join_Z(long D);

} // namespace tg
