#pragma once

#include "tg/biseries.hpp"
#include "tg/npoint_series.hpp"
#include "tg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tg {

// Truncation bounds for extracting chi(Mbar_{g,n}) over g <= G_max, n <= N_max.
// A product of tilde-V factors indexed by a key (j_1..j_N) has top z-degree
// 2N - sum j_i - 2 p_2 (p_2 = multiplicity of the index 2), so a nonzero
// contribution to y^n z^{2-2g} forces sum j_i <= 2n-2+2g, N <= 2n-2+2g and
// j_i <= 2n+2g; intermediate products feeding a target coefficient never dip
// below z^{2-2 G_max - N_max}.
struct SpecializationParams {
    int G_max = 0;
    int N_max = 0;

    int z_floor() const { return 2 - 2 * G_max - N_max; }
    int z_ceiling() const { return N_max > 2 ? N_max : 2; }
    int var_cap() const { return 2 * N_max - 2 + 2 * G_max; }
    int index_cap() const { return 2 * N_max + 2 * G_max; }
};

enum class ChiBackend { affine, thin, fat };
// "affine" | "thin" | "fat"
ChiBackend chi_backend_from_string(const std::string& s);

// Harer-Zagier orbifold Euler characteristic of the open moduli space:
// chi(M_{g,n}) = (-1)^n (2g-1) B_{2g} / (2g)! * (2g+n-3)!, with the g = 0
// reading (2g-1) B_0 = -1 (so n >= 3 there).  Requires stability 2g-2+n > 0.
Rational chi_open(int g, int n);

// tilde V_n(y,z) = -1/2 y^2 z^2 [n=0] + yz [n=1] + sum_g chi(M_{g,n}) z^{2-2g-n}
// with the genus sum over stable (g,n), truncated to the params window.
BiSeries tilde_V(int n, const SpecializationParams& p);

// The substitution functional: every specific monomial
// z_1^{-j_1-1} ... z_N^{-j_N-1} of the arity-N series maps to
// tilde V_{j_1} ... tilde V_{j_N} / (N! j_1! ... j_N!); canonical sorted keys
// pick up their orbit size.  include_y = false gives the y = 0 variant.
// npoints[k] must have arity k+1.
BiSeries specialize(const std::vector<NPointSeries>& npoints,
                    const SpecializationParams& p, bool include_y = true);

// chi(y,z) = sum over stable (g,n) of chi(Mbar_{g,n}) y^n z^{2-2g} / n!
// minus tilde V_0: the tilde-V substitution into the free energy, computed
// through the chosen n-point backend.  Coefficients [y^n z^{2-2g}] are exact
// for n <= N_max, g <= G_max; the three backends agree there.
BiSeries chi_series(const SpecializationParams& p, ChiBackend backend);

// chi(Mbar_{g,n}) = n! [y^n z^{2-2g}] chi(y,z) for every stable (g,n) with
// g <= G_max, n <= N_max; the n = 0 column adds back the y^0 part of
// tilde V_0, i.e. chi(M_{g,0}).
struct ChiTable {
    std::map<std::pair<int, int>, Rational> values; // (g,n) -> chi(Mbar_{g,n})
};
ChiTable chi_table(const SpecializationParams& p, ChiBackend backend);

// Renderings: CSV lines "g,n,p/q"; JSON array of {"g","n","chi"}; markdown
// grid with one row per genus and one column per marked-point count.
std::string chi_table_csv(const ChiTable& t);
std::string chi_table_json(const ChiTable& t);
std::string chi_table_markdown(const ChiTable& t);

// Thread fan-out width for independent backend cells: MODULI_EULER_THREADS
// when set (clamped to >= 1), else 1.
int worker_count();

} // namespace tg
