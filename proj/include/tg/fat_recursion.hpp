#pragma once

#include "tg/npoint_series.hpp"
#include "tg/rationalfn.hpp"

#include <map>
#include <string>
#include <vector>

namespace tg {

// Fat Eynard-Orantin recursion on the curve z^2 - 4y^2 = 4, rationally
// parametrized by z = w + 1/w, y = (1/w - w)/2 (the sheet where w ~ z and
// y ~ -z/2 at infinity), branch points w = +-1, involution sigma: w -> 1/w.
//
//   omega_{g,n+1}(p_0..p_n) = (Res_{w->1} + Res_{w->-1})
//       K(p_0,p) [ omega_{g-1,n+2}(p, sigma(p), rest)
//                  + sum_{g1+g2=g, I+J=[n]}' omega_{g1,|I|+1}(p, p_I)
//                                            omega_{g2,|J|+1}(sigma(p), p_J) ]
// with K(p_0,p) = dz_0 / (4 y_0 (z_0 - z) dz) and the primed sum excluding
// omega_{0,1} factors.  Base cases: omega_{0,1} = y dz and
// omega_{0,2} = dw_1 dw_2 / (w_1 - w_2)^2.
//
// Correlators are stored divided by the dz's: a map from the sorted key of
// the spectator variables (each expanded in z_i^{-j_i-1}, coefficients per
// specific monomial) to a rational function of the active variable's w.  For
// stable (g,n) these have poles only at w = +-1 and vanish at infinity; this
// is asserted on every stored cell.
struct FatCorrelator {
    int g = 0, n = 0;
    std::map<std::vector<int>, RationalFn> comp;
};

// All spectator keys with sum (j_i + 1) <= L (n = 1 has the single empty
// key).  (0,1) yields the active-variable function 1/w (the closed form
// (z - sqrt(z^2-4))/2); (0,2) carries omega_{0,2}/dz_1 dz_2 including its
// double pole on the diagonal.
FatCorrelator fat_omega(int g, int n, long L);

// Debug dump: one "key: numerator / denominator" line per component.
std::string fat_dump(const FatCorrelator& c);

// W^fat_{g,n}: the genus-g piece of the fat genus expansion as an n-variable
// series, all keys j_i >= 1 with total z-order sum (j_i + 1) <= L.  For (0,1)
// this drops the z^{-1} term of the closed form (the generating-function
// definition sums j >= 1 only); for (0,2) the diagonal double pole of
// omega_{0,2} is removed.  Every key reachable from several active-variable
// choices is cross-checked for symmetry.
//
// weight_cap >= 0 additionally restricts to keys with
// sum_i weight(j_i) <= weight_cap, weight(j) = j for j <= 2 and j - 2 above
// (the Euler-characteristic finiteness budget; the weight is hereditary
// under the recursion's sub-multiset structure, so the restriction only
// skips work, never changes a kept coefficient).
NPointSeries fat_W(int g, int n, long L, long weight_cap = -1);

// Minimal total z-order of W^fat_{g,n}: a genus-g fat graph on n vertices has
// at least n + 2g - 1 edges, so sum (j_i + 1) >= 3n + 4g - 2.
long fat_min_order(int g, int n);

// sum of W^fat_{g,n} over 0 <= g <= gmax restricted to z-order <= L.
NPointSeries fat_total(int n, long L, int gmax);

// Compares sum_g W^fat_{g,n} against the connected n-point function G_(n)
// for every n, with fat cells limited to 2g + n <= gn_cap; for each n the
// comparison window is L capped below the first omitted cell's minimal
// order.  Empty string = pass.
std::string fat_total_check(long L, int gn_cap);

} // namespace tg
