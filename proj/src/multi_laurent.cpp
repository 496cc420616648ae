#include "tg/multi_laurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tg {

void MultiLaurent::add_term(const std::vector<int>& expo, const Rational& c) {
    if ((int)expo.size() != nvars) throw std::invalid_argument("MultiLaurent: arity mismatch");
    if (c == 0) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational MultiLaurent::coeff(const std::vector<int>& expo) const {
    auto it = terms.find(expo);
    return it == terms.end() ? Rational(0) : it->second;
}

MultiLaurent ml_add(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("ml_add: arity mismatch");
    MultiLaurent r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

MultiLaurent ml_sub(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("ml_sub: arity mismatch");
    MultiLaurent r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
}

MultiLaurent ml_scale(const MultiLaurent& a, const Rational& c) {
    MultiLaurent r(a.nvars);
    if (c == 0) return r;
    for (const auto& [e, v] : a.terms) r.terms.emplace(e, v * c);
    return r;
}

MultiLaurent ml_mul(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("ml_mul: arity mismatch");
    MultiLaurent r(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiLaurent ml_shift(const MultiLaurent& a, int v, int k) {
    MultiLaurent r(a.nvars);
    for (const auto& [e, c] : a.terms) {
        std::vector<int> ee = e;
        ee[(size_t)v] += k;
        r.terms.emplace(std::move(ee), c);
    }
    return r;
}

MultiLaurent ml_deriv(const MultiLaurent& a, int v) {
    MultiLaurent r(a.nvars);
    for (const auto& [e, c] : a.terms) {
        if (e[(size_t)v] == 0) continue;
        std::vector<int> ee = e;
        ee[(size_t)v] -= 1;
        r.add_term(ee, c * Rational(e[(size_t)v]));
    }
    return r;
}

MultiLaurent ml_set_equal(const MultiLaurent& f, int a, int b) {
    MultiLaurent r(f.nvars);
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ee = e;
        ee[(size_t)b] += ee[(size_t)a];
        ee[(size_t)a] = 0;
        r.add_term(ee, c);
    }
    return r;
}

MultiLaurent ml_permute(const MultiLaurent& f, const std::vector<int>& perm) {
    MultiLaurent r(f.nvars);
    for (const auto& [e, c] : f.terms) {
        std::vector<int> ee(e.size());
        for (size_t i = 0; i < e.size(); ++i) ee[i] = e[(size_t)perm[i]];
        r.add_term(ee, c);
    }
    return r;
}

MultiLaurent ml_divide_diff(const MultiLaurent& f, int a, int b) {
    if (f.is_zero()) return MultiLaurent(f.nvars);
    // Clear the z_a Laurent tail so f becomes polynomial in z_a, then use
    // synthetic division by (z_a - z_b) and shift back.
    int mina = 0;
    for (const auto& [e, c] : f.terms) mina = std::min(mina, e[(size_t)a]);
    MultiLaurent g = ml_shift(f, a, -mina); // z_a exponents now >= 0
    int maxa = 0;
    for (const auto& [e, c] : g.terms) maxa = std::max(maxa, e[(size_t)a]);
    // coefficients of z_a^e as Laurent polys in the other variables (kept in
    // full arity with z_a exponent zeroed)
    std::vector<MultiLaurent> fe((size_t)maxa + 1, MultiLaurent(f.nvars));
    for (const auto& [e, c] : g.terms) {
        std::vector<int> ee = e;
        int p = ee[(size_t)a];
        ee[(size_t)a] = 0;
        fe[(size_t)p].add_term(ee, c);
    }
    // q_{E-1} = f_E; q_{e-1} = f_e + z_b * q_e; remainder f_0 + z_b * q_0 == 0
    std::vector<MultiLaurent> q((size_t)std::max(maxa, 1), MultiLaurent(f.nvars));
    if (maxa >= 1) q[(size_t)maxa - 1] = fe[(size_t)maxa];
    for (int e = maxa - 1; e >= 1; --e)
        q[(size_t)e - 1] = ml_add(fe[(size_t)e], ml_shift(q[(size_t)e], b, 1));
    MultiLaurent rem =
        maxa >= 1 ? ml_add(fe[0], ml_shift(q[0], b, 1)) : fe[0];
    if (!rem.is_zero()) throw std::domain_error("ml_divide_diff: inexact division");
    MultiLaurent out(f.nvars);
    for (int e = 0; e < maxa; ++e)
        for (const auto& [ee, c] : q[(size_t)e].terms) {
            std::vector<int> key = ee;
            key[(size_t)a] = e + mina; // undo the tail-clearing shift
            out.add_term(key, c);
        }
    return out;
}

} // namespace tg
