#pragma once

#include "tg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace tg {

// Sparse symmetric n-variable series: key (j_1..j_n) sorted ascending carries
// the coefficient of the monomial z_1^{-j_1-1} ... z_n^{-j_n-1} (one canonical
// representative per orbit; coefficients are per specific monomial, so a read
// with a permuted tuple returns the identical value).  Outputs always have
// j_i >= 1; j = 0 keys are tolerated internally (the unstable (0,1) base case
// of the thin recursion).
struct NPointSeries {
    int n = 0;
    std::map<std::vector<int>, Rational> terms; // keys sorted ascending

    NPointSeries() = default;
    explicit NPointSeries(int arity) : n(arity) {}

    // key may arrive in any order; it is canonicalized.
    void add_term(std::vector<int> key, const Rational& c);
    Rational coeff(std::vector<int> key) const;
    bool operator==(const NPointSeries& o) const { return n == o.n && terms == o.terms; }
};

NPointSeries np_add(const NPointSeries& a, const NPointSeries& b);
NPointSeries np_sub(const NPointSeries& a, const NPointSeries& b);

// Drop keys with total z-order sum(j_i + 1) > L (window restriction).
NPointSeries np_restrict(const NPointSeries& a, long L);

// JSON: {"n": n, "terms": [{"j": [j1..jn], "c": "p/q"}...]} sorted by key.
std::string np_to_json(const NPointSeries& s);
NPointSeries np_from_json(const std::string& text);

// Number of distinct permutations of a sorted key (orbit size).
Integer key_orbit_size(const std::vector<int>& sorted_key);

} // namespace tg
