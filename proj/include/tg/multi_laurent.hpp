#pragma once

#include "tg/rational.hpp"

#include <map>
#include <vector>

namespace tg {

// Finite exact Laurent polynomial in a small set of variables z_0..z_{n-1}.
// Intermediate carrier for the cycle products and the thin-recursion test
// oracle; exponents may be negative.
struct MultiLaurent {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms; // exponent vector -> coeff

    MultiLaurent() = default;
    explicit MultiLaurent(int n) : nvars(n) {}

    void add_term(const std::vector<int>& expo, const Rational& c);
    Rational coeff(const std::vector<int>& expo) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const MultiLaurent& o) const {
        return nvars == o.nvars && terms == o.terms;
    }
};

MultiLaurent ml_add(const MultiLaurent& a, const MultiLaurent& b);
MultiLaurent ml_sub(const MultiLaurent& a, const MultiLaurent& b);
MultiLaurent ml_scale(const MultiLaurent& a, const Rational& c);
MultiLaurent ml_mul(const MultiLaurent& a, const MultiLaurent& b);
// multiply by z_v^k
MultiLaurent ml_shift(const MultiLaurent& a, int v, int k);
// d/dz_v
MultiLaurent ml_deriv(const MultiLaurent& a, int v);
// substitute z_a := z_b (exponents merge into variable b)
MultiLaurent ml_set_equal(const MultiLaurent& f, int a, int b);
// permute variables: result variable i carries old variable perm[i]
MultiLaurent ml_permute(const MultiLaurent& f, const std::vector<int>& perm);
// exact division by (z_a - z_b); throws std::domain_error if the remainder
// (the diagonal value) is nonzero.
MultiLaurent ml_divide_diff(const MultiLaurent& f, int a, int b);

} // namespace tg
