#pragma once

#include "tg/npoint_series.hpp"

namespace tg {

// Thin quadratic recursion on the correlators W_{g,n}(z_1..z_n):
//   W_{g,n+1}(z_0, z_*) = sum_j D_{z_0,z_j} W_{g,n}
//                         + E_{z_0,u,v} W_{g-2,n+2}(u, v, z_*)
//                         + sum_{g_1+g_2=g-1, I+J=[n]} E_{z_0,u,v}
//                               W_{g_1,|I|+1}(u, z_I) W_{g_2,|J|+1}(v, z_J)
// with base case W_{0,1} = 1/z_1 and
//   D_{z_0,z_j} f = [f(z_0) - f(z_j)] / (z_0 (z_0-z_j)^2)
//                   - 1/(z_0 (z_0-z_j)) d/dz_j f(z_j)
//   E_{z_0,u,v} f = (1/z_0) (lim_{u->v} f)|_{v=z_0}.
// Each W_{g,n} is a finite homogeneous polynomial in the z_i^{-1}:
// sum (j_i + 1) = 2g - 2 + 3n on every monomial, so no truncation enters.
// Results are memoized.
NPointSeries thin_W(int g, int n);

// sum over g >= 0 of W_{g,n} restricted to total z-order <= L; equals the
// connected n-point function G_(n) on that window (n >= 1; the unstable
// W_{0,1} is excluded from the n = 1 total).
NPointSeries thin_total(int n, long L);

// Compares sum_g W_{g,n} against the connected n-point function G_(n) for
// every n, with thin cells limited to 2g + n <= gn_cap; for each n the
// comparison window is L capped below the first omitted cell's homogeneous
// order.  Empty string = pass.
std::string thin_total_check(long L, int gn_cap);

} // namespace tg
