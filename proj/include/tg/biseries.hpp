#pragma once

#include "tg/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace tg {

// Truncated series in z (Laurent direction) with polynomial-in-y coefficients.
// The window [zmin, zmax] is the guaranteed-correct range: arithmetic silently
// truncates below zmin (and above the y cap), while a nonzero product term
// above zmax is an error.  Reads outside the window are errors; reads inside
// the window on absent keys return 0.
struct BiSeries {
    int zmin = 0, zmax = 0; // inclusive z-exponent window
    int ycap = 0;           // max y-degree kept
    // key: (y-degree, z-exponent)
    std::map<std::pair<int, int>, Rational> terms;

    BiSeries() = default;
    BiSeries(int zlo, int zhi, int ymax) : zmin(zlo), zmax(zhi), ycap(ymax) {}

    void add_term(int ypow, int zpow, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const BiSeries& o) const {
        return zmin == o.zmin && zmax == o.zmax && ycap == o.ycap && terms == o.terms;
    }
};

Rational bi_coeff(const BiSeries& s, int ypow, int zpow);
BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_sub(const BiSeries& a, const BiSeries& b);
BiSeries bi_scale(const BiSeries& a, const Rational& c);
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);

// Debug dump: "coeff<TAB>monomial", monomials like "y^2 z^-3" (or "1").
std::string bi_dump(const BiSeries& s);

} // namespace tg
