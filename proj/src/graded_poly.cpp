#include "tg/graded_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tg {

void GradedPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0 || mono_degree(m) > D) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) {
    if (a.D != b.D) throw std::invalid_argument("poly_add: degree mismatch");
    GradedPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

GradedPoly poly_sub(const GradedPoly& a, const GradedPoly& b) {
    if (a.D != b.D) throw std::invalid_argument("poly_sub: degree mismatch");
    GradedPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

GradedPoly poly_scale(const GradedPoly& a, const Rational& c) {
    GradedPoly r(a.D);
    if (c == 0) return r;
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, v * c);
    return r;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) {
    if (a.D != b.D) throw std::invalid_argument("poly_mul: degree mismatch");
    GradedPoly r(a.D);
    for (const auto& [ma, ca] : a.terms) {
        long da = mono_degree(ma);
        for (const auto& [mb, cb] : b.terms) {
            if (da + mono_degree(mb) > a.D) continue;
            Mono m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

GradedPoly poly_log(const GradedPoly& a) {
    if (a.coeff({}) != 1) throw std::invalid_argument("poly_log: constant term must be 1");
    GradedPoly u = a;
    u.add_term({}, Rational(-1)); // u = a - 1, min degree >= 1
    GradedPoly acc(a.D);          // running power u^k
    acc.add_term({}, Rational(1));
    GradedPoly out(a.D);
    for (long k = 1; k <= a.D; ++k) {
        acc = poly_mul(acc, u);
        if (acc.is_zero()) break;
        Rational s = (k % 2 == 1) ? Rational(1, (unsigned long)k) : Rational(-1, (unsigned long)k);
        out = poly_add(out, poly_scale(acc, s));
    }
    return out;
}

GradedPoly poly_exp(const GradedPoly& a) {
    if (a.coeff({}) != 0) throw std::invalid_argument("poly_exp: constant term must be 0");
    GradedPoly acc = GradedPoly::constant(a.D, Rational(1));
    GradedPoly out = acc;
    Rational invfac(1);
    for (long k = 1; k <= a.D; ++k) {
        acc = poly_mul(acc, a);
        if (acc.is_zero()) break;
        invfac /= Rational((unsigned long)k);
        out = poly_add(out, poly_scale(acc, invfac));
    }
    return out;
}

GradedPoly poly_deriv(const GradedPoly& p, int a) {
    GradedPoly r(p.D);
    for (const auto& [m, c] : p.terms) {
        int mult = 0;
        for (int x : m) mult += (x == a);
        if (mult == 0) continue;
        Mono mm = m;
        mm.erase(std::find(mm.begin(), mm.end(), a));
        r.add_term(mm, c * Rational(mult));
    }
    return r;
}

GradedPoly poly_mul_t(const GradedPoly& p, int a) {
    GradedPoly r(p.D);
    for (const auto& [m, c] : p.terms) {
        if (mono_degree(m) + a + 1 > p.D) continue;
        Mono mm = m;
        mm.insert(std::upper_bound(mm.begin(), mm.end(), a), a);
        r.add_term(mm, c);
    }
    return r;
}

GradedPoly poly_truncate(const GradedPoly& p, long newD) {
    GradedPoly r(newD);
    for (const auto& [m, c] : p.terms)
        if (mono_degree(m) <= newD) r.terms.emplace(m, c);
    return r;
}

std::string poly_dump(const GradedPoly& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms) {
        os << to_string(c) << '\t';
        if (m.empty()) {
            os << '1';
        } else {
            for (size_t i = 0; i < m.size();) {
                size_t j = i;
                while (j < m.size() && m[j] == m[i]) ++j;
                if (i) os << ' ';
                os << 't' << m[i];
                if (j - i > 1) os << '^' << (j - i);
                i = j;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace tg
