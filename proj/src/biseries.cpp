#include "tg/biseries.hpp"

#include <sstream>
#include <stdexcept>

namespace tg {

void BiSeries::add_term(int ypow, int zpow, const Rational& c) {
    if (c == 0) return;
    if (ypow > ycap || zpow < zmin) return; // designed truncation
    if (zpow > zmax) throw std::overflow_error("BiSeries: term above z-ceiling");
    auto key = std::make_pair(ypow, zpow);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational bi_coeff(const BiSeries& s, int ypow, int zpow) {
    if (zpow < s.zmin || zpow > s.zmax || ypow < 0 || ypow > s.ycap)
        throw std::out_of_range("bi_coeff: outside guaranteed-correct window");
    auto it = s.terms.find({ypow, zpow});
    return it == s.terms.end() ? Rational(0) : it->second;
}

static void check_compat(const BiSeries& a, const BiSeries& b) {
    if (a.zmin != b.zmin || a.zmax != b.zmax || a.ycap != b.ycap)
        throw std::invalid_argument("BiSeries: window mismatch");
}

BiSeries bi_add(const BiSeries& a, const BiSeries& b) {
    check_compat(a, b);
    BiSeries r = a;
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
}

BiSeries bi_sub(const BiSeries& a, const BiSeries& b) {
    check_compat(a, b);
    BiSeries r = a;
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, -c);
    return r;
}

BiSeries bi_scale(const BiSeries& a, const Rational& c) {
    BiSeries r(a.zmin, a.zmax, a.ycap);
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms) r.terms.emplace(k, v * c);
    return r;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    check_compat(a, b);
    BiSeries r(a.zmin, a.zmax, a.ycap);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            int y = ka.first + kb.first;
            int z = ka.second + kb.second;
            if (y > r.ycap || z < r.zmin) continue;
            r.add_term(y, z, ca * cb); // throws if z > zmax
        }
    return r;
}

std::string bi_dump(const BiSeries& s) {
    std::ostringstream os;
    for (const auto& [k, c] : s.terms) {
        os << to_string(c) << '\t';
        bool any = false;
        if (k.first != 0) {
            os << 'y';
            if (k.first != 1) os << '^' << k.first;
            any = true;
        }
        if (k.second != 0) {
            if (any) os << ' ';
            os << 'z';
            if (k.second != 1) os << '^' << k.second;
            any = true;
        }
        if (!any) os << '1';
        os << '\n';
    }
    return os.str();
}

} // namespace tg
