#include "tg/fat_recursion.hpp"

#include "tg/combinatorics.hpp"
#include "tg/kp_npoint.hpp" // LaurentVector, connected_npoint

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tg {

namespace {

Rational catalan(int k) {
    return Rational(binomial(2L * k, k)) / (k + 1);
}

// ---- windowed Laurent series helpers (exact above hi, unknown below lo) ----

LaurentVector lv_mul(const LaurentVector& a, const LaurentVector& b) {
    LaurentVector r(std::max(a.lo + b.hi, b.lo + a.hi), a.hi + b.hi);
    for (int i = a.lo; i <= a.hi; ++i) {
        const Rational& av = a.c[(size_t)(i - a.lo)];
        if (av == 0) continue;
        for (int j = std::max(b.lo, r.lo - i); j <= b.hi; ++j)
            r.add(i + j, av * b.c[(size_t)(j - b.lo)]);
    }
    return r;
}

LaurentVector lv_div(const LaurentVector& a, const LaurentVector& b) {
    if (b.hi < b.lo || b.coeff(b.hi) == 0)
        throw std::invalid_argument("lv_div: divisor must have nonzero leading term");
    int qhi = a.hi - b.hi;
    int qlo = std::max(a.lo - b.hi, b.lo + qhi - b.hi);
    LaurentVector q(qlo, qhi);
    Rational lead = b.coeff(b.hi);
    for (int e = qhi; e >= qlo; --e) {
        Rational s = a.coeff(e + b.hi);
        for (int e2 = e + 1; e2 <= qhi; ++e2)
            s -= q.coeff(e2) * b.coeff(e + b.hi - e2);
        q.c[(size_t)(e - qlo)] = s / lead;
    }
    return q;
}

// ---- cached z-expansions of the uniformizer and of (w(z) -+ 1)^{-l} ----

struct SeriesCache {
    int depth = -1;                    // series known down to exponent -depth
    int lmax = 0;                      // largest pole-basis power computed
    LaurentVector wser;                // w(z) = z - sum C_k z^{-2k-1}
    std::vector<LaurentVector> powp;   // powp[l-1] = (w(z)-1)^{-l}
    std::vector<LaurentVector> powm;   // powm[l-1] = (w(z)+1)^{-l}
};

SeriesCache g_series;
std::mutex g_series_mu;

void ensure_series(int depth, int lmax) {
    std::lock_guard<std::mutex> lk(g_series_mu);
    g_series.lmax = lmax = std::max(lmax, g_series.lmax);
    if (g_series.depth < depth) {
        int wlo = -(depth + 4);
        LaurentVector w(wlo, 1);
        w.add(1, Rational(1));
        for (int k = 0; 2 * k + 1 <= -wlo; ++k) w.add(-2 * k - 1, -catalan(k));
        g_series.wser = w;
        g_series.depth = depth;
        g_series.powp.clear();
        g_series.powm.clear();
    }
    for (int sign = 0; sign < 2; ++sign) {
        auto& pow = sign ? g_series.powm : g_series.powp;
        Rational c = sign ? Rational(-1) : Rational(1);
        if (pow.empty()) {
            LaurentVector base = g_series.wser;
            base.add(0, -c);
            LaurentVector one(base.lo - 2, 0);
            one.add(0, Rational(1));
            pow.push_back(lv_div(one, base));
        }
        while ((int)pow.size() < lmax) pow.push_back(lv_mul(pow.back(), pow[0]));
    }
}

// z-expansion coefficient [z^{-j-1}] (w(z) - c)^{-l}, c = +-1
Rational basis_z_coeff(int c, int l, int j) {
    std::lock_guard<std::mutex> lk(g_series_mu);
    const auto& pow = (c == 1) ? g_series.powp : g_series.powm;
    if (l > (int)pow.size() || -j - 1 < pow[(size_t)(l - 1)].lo)
        throw std::logic_error("basis_z_coeff: series cache too shallow");
    return pow[(size_t)(l - 1)].coeff(-j - 1);
}

// substitute w = w(z) into f and expand; exact down to exponent -depth
LaurentVector rf_z_expand(const RationalFn& f, int depth) {
    int maxd = std::max(f.num.degree(), std::max(f.den.degree(), 1));
    ensure_series(depth + maxd + 6, 1);
    LaurentVector wser;
    {
        std::lock_guard<std::mutex> lk(g_series_mu);
        wser = g_series.wser;
    }
    auto subst = [&](const Poly& p) {
        LaurentVector acc(wser.lo, 0);
        acc.add(0, p.coeff(0));
        LaurentVector pw(wser.lo - 1, 0);
        pw.add(0, Rational(1));
        for (int i = 1; i <= p.degree(); ++i) {
            pw = lv_mul(pw, wser);
            const Rational& v = p.c[(size_t)i];
            if (v == 0) continue;
            LaurentVector nxt(std::max(acc.lo, pw.lo), std::max(acc.hi, pw.hi));
            for (int e = acc.lo; e <= acc.hi; ++e) nxt.add(e, acc.coeff(e));
            for (int e = pw.lo; e <= pw.hi; ++e) nxt.add(e, v * pw.coeff(e));
            acc = std::move(nxt);
        }
        return acc;
    };
    LaurentVector q = lv_div(subst(f.num), subst(f.den));
    if (q.lo > -depth)
        throw std::logic_error("rf_z_expand: window too shallow");
    return q;
}

// ---- the (0,2) cell: omega_{0,2}/dz1 dz2 = 1/((w1-w2)^2 z'(w1) z'(w2)) ----
//
// Expanding the spectator in z2: the component of z2^{-J-1} is
// (w^2/(w^2-1)) J S_{J-1}(w) where sum_j S_j(w) z^{-j} = 1/(1 - v),
// v = w z^{-1} + sum_k C_k z^{-2k-2}  (from w(z2) - w = z2 (1 - v)).

std::vector<Poly> g_spoly{Poly(Rational(1))};
std::mutex g_spoly_mu;

Poly spoly(int j) {
    std::lock_guard<std::mutex> lk(g_spoly_mu);
    while ((int)g_spoly.size() <= j) {
        int m = (int)g_spoly.size();
        Poly s = p_mul(poly_x(), g_spoly[(size_t)(m - 1)]);
        for (int k = 0; 2 * k + 2 <= m; ++k)
            s = p_add(s, p_scale(g_spoly[(size_t)(m - 2 * k - 2)], catalan(k)));
        g_spoly.push_back(std::move(s));
    }
    return g_spoly[(size_t)j];
}

Poly poly_w2m1() { // w^2 - 1
    Poly p;
    p.c = {Rational(-1), Rational(0), Rational(1)};
    return p;
}

RationalFn component_02(int J) {
    Poly num = p_scale(p_mul(p_mul(poly_x(), poly_x()), spoly(J - 1)), Rational(J));
    return RationalFn(std::move(num), poly_w2m1());
}

// ---- factored working form num / (w^a (w-1)^b (w+1)^c) ----
//
// Every correlator, sigma-image, and kernel factor lives over a denominator
// of this shape, so products and sums need no gcd; a single reduction happens
// when a finished component is converted back to RationalFn.

struct FForm {
    Poly num;
    int a = 0, b = 0, c = 0;
};

Poly poly_wm1() {
    Poly p;
    p.c = {Rational(-1), Rational(1)};
    return p;
}

Poly poly_wp1() {
    Poly p;
    p.c = {Rational(1), Rational(1)};
    return p;
}

Poly p_pow(const Poly& base, int e) {
    Poly r(Rational(1));
    for (int i = 0; i < e; ++i) r = p_mul(r, base);
    return r;
}

// divide by (w - r), requiring remainder zero
Poly p_root_divide(const Poly& p, const Rational& r) {
    Poly q;
    q.c.assign((size_t)p.degree(), Rational(0));
    Rational carry = 0;
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.c[(size_t)i] + carry * r;
        q.c[(size_t)(i - 1)] = carry;
    }
    if (p.c[0] + carry * r != 0)
        throw std::logic_error("p_root_divide: nonzero remainder");
    q.trim();
    return q;
}

FForm ff_from_rf(const RationalFn& f) {
    FForm r;
    r.num = f.num;
    Poly d = f.den;
    while (!d.c.empty() && d.c[0] == 0) {
        d.c.erase(d.c.begin());
        ++r.a;
    }
    while (d.degree() >= 1 && p_eval(d, Rational(1)) == 0) {
        d = p_root_divide(d, Rational(1));
        ++r.b;
    }
    while (d.degree() >= 1 && p_eval(d, Rational(-1)) == 0) {
        d = p_root_divide(d, Rational(-1));
        ++r.c;
    }
    if (d.degree() != 0 || d.c[0] != 1)
        throw std::logic_error("ff_from_rf: denominator outside w^a(w-1)^b(w+1)^c");
    return r;
}

FForm ff_mul(const FForm& x, const FForm& y) {
    return {p_mul(x.num, y.num), x.a + y.a, x.b + y.b, x.c + y.c};
}

FForm ff_scale(const FForm& x, const Rational& s) {
    return {p_scale(x.num, s), x.a, x.b, x.c};
}

FForm ff_add(const FForm& x, const FForm& y) {
    if (x.num.is_zero()) return y;
    if (y.num.is_zero()) return x;
    FForm r;
    r.a = std::max(x.a, y.a);
    r.b = std::max(x.b, y.b);
    r.c = std::max(x.c, y.c);
    auto lift = [&](const FForm& f) {
        Poly n = f.num;
        if (r.a > f.a) {
            Poly sh;
            sh.c.assign((size_t)(r.a - f.a + n.degree() + 1), Rational(0));
            for (int i = 0; i <= n.degree(); ++i)
                sh.c[(size_t)(i + r.a - f.a)] = n.c[(size_t)i];
            n = std::move(sh);
        }
        if (r.b > f.b) n = p_mul(n, p_pow(poly_wm1(), r.b - f.b));
        if (r.c > f.c) n = p_mul(n, p_pow(poly_wp1(), r.c - f.c));
        return n;
    };
    r.num = p_add(lift(x), lift(y));
    return r;
}

// f(1/w): (w-1), (w+1) factors map back onto themselves up to powers of w
FForm ff_subst_inv(const FForm& f) {
    FForm r;
    int dn = f.num.degree();
    r.num.c.assign((size_t)(dn + 1), Rational(0));
    for (int i = 0; i <= dn; ++i) r.num.c[(size_t)i] = f.num.c[(size_t)(dn - i)];
    r.num.trim();
    if (f.b % 2) r.num = p_scale(r.num, Rational(-1));
    int e = f.a + f.b + f.c - dn;
    r.b = f.b;
    r.c = f.c;
    if (e >= 0) {
        Poly sh;
        sh.c.assign((size_t)(e + r.num.degree() + 1), Rational(0));
        for (int i = 0; i <= r.num.degree(); ++i) sh.c[(size_t)(i + e)] = r.num.c[(size_t)i];
        r.num = std::move(sh);
        r.num.trim();
    } else {
        r.a = -e;
    }
    return r;
}

void ff_to_polys(const FForm& f, Poly& num, Poly& den) {
    num = f.num;
    den.c.assign((size_t)(f.a + 1), Rational(0));
    den.c[(size_t)f.a] = 1;
    den = p_mul(den, p_mul(p_pow(poly_wm1(), f.b), p_pow(poly_wp1(), f.c)));
}

// ---- memoized stable-cell components ----

std::vector<int> ms_insert(const std::vector<int>& m, int v) {
    std::vector<int> r = m;
    r.insert(std::upper_bound(r.begin(), r.end(), v), v);
    return r;
}

RationalFn compute_component(int g, int n, const std::vector<int>& key);

const RationalFn& fat_component(int g, int n, const std::vector<int>& key) {
    static std::map<std::tuple<int, int, std::vector<int>>, RationalFn> memo;
    static std::mutex mu;
    auto k = std::make_tuple(g, n, key);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
    }
    RationalFn v = compute_component(g, n, key); // recurses; compute unlocked
    std::lock_guard<std::mutex> lk(mu);
    return memo.emplace(std::move(k), std::move(v)).first->second;
}

// pole-order bound for the stored component of (g,n) in any one variable:
// omega_{g,n} has branch-point poles of order <= 6g - 4 + 2n, and dividing by
// dz (simple zero at w = +-1) raises it by one.
int pole_bound(int g, int n) { return 6 * g + 2 * n - 3; }

// Reconstructs omega_{g,n+1}/(dz^2 prod dz_spec) evaluated at (p, sigma(p)):
// the source component with spectator key (j, kappa) is, as a function of
// (w1, z2), bilinear in the pole bases (w1 -+ 1)^{-k}, (w2 -+ 1)^{-l}; the
// tensor is solved from the z2-expansions of the basis elements and then
// re-evaluated at w2 = 1/w1 via (1/w - c)^{-l} = (-c)^l w^l (w - c)^{-l}.
FForm reconstruct_antidiagonal(int gs, int ns, const std::vector<int>& kappa) {
    int lam = pole_bound(gs, ns);
    int jdepth = 2 * lam + 2; // 2*lam unknowns plus surplus rows for verification
    ensure_series(jdepth + 4, lam);

    // gamma[c][k-1][j-1], c: 0 = +1, 1 = -1
    std::vector<std::vector<std::vector<Rational>>> gamma(2);
    int kmax[2] = {0, 0};
    for (int j = 1; j <= jdepth; ++j) {
        PrincipalParts pp = rf_partial_fractions(fat_component(gs, ns, ms_insert(kappa, j)));
        const std::vector<Rational>* parts[2] = {&pp.plus, &pp.minus};
        for (int c = 0; c < 2; ++c) {
            if ((int)parts[c]->size() > lam)
                throw std::logic_error("fat reconstruction: pole order exceeds bound");
            kmax[c] = std::max(kmax[c], (int)parts[c]->size());
            gamma[(size_t)c].resize((size_t)lam);
            for (int k = 1; k <= lam; ++k) {
                auto& row = gamma[(size_t)c][(size_t)(k - 1)];
                row.resize((size_t)jdepth);
                row[(size_t)(j - 1)] =
                    (k <= (int)parts[c]->size()) ? (*parts[c])[(size_t)(k - 1)] : Rational(0);
            }
        }
    }

    // E[col][j-1] with columns (c'=+1, l=1..lam) then (c'=-1, l=1..lam)
    int ncols = 2 * lam;
    std::vector<std::vector<Rational>> E((size_t)ncols,
                                         std::vector<Rational>((size_t)jdepth));
    for (int cp = 0; cp < 2; ++cp)
        for (int l = 1; l <= lam; ++l)
            for (int j = 1; j <= jdepth; ++j)
                E[(size_t)(cp * lam + l - 1)][(size_t)(j - 1)] =
                    basis_z_coeff(cp == 0 ? 1 : -1, l, j);

    FForm ad;
    for (int c = 0; c < 2; ++c) {
        for (int k = 1; k <= kmax[c]; ++k) {
            const auto& rhs0 = gamma[(size_t)c][(size_t)(k - 1)];
            bool any = false;
            for (const auto& v : rhs0) any = any || (v != 0);
            if (!any) continue;
            // solve E^T x = rhs by Gaussian elimination on the augmented system
            std::vector<std::vector<Rational>> M((size_t)jdepth,
                                                 std::vector<Rational>((size_t)(ncols + 1)));
            for (int j = 0; j < jdepth; ++j) {
                for (int col = 0; col < ncols; ++col) M[(size_t)j][(size_t)col] = E[(size_t)col][(size_t)j];
                M[(size_t)j][(size_t)ncols] = rhs0[(size_t)j];
            }
            std::vector<int> pivot_col;
            int row = 0;
            for (int col = 0; col < ncols && row < jdepth; ++col) {
                int pr = -1;
                for (int r = row; r < jdepth; ++r)
                    if (M[(size_t)r][(size_t)col] != 0) { pr = r; break; }
                if (pr < 0) continue;
                std::swap(M[(size_t)row], M[(size_t)pr]);
                Rational inv = 1 / M[(size_t)row][(size_t)col];
                for (int cc = col; cc <= ncols; ++cc) M[(size_t)row][(size_t)cc] *= inv;
                for (int r = 0; r < jdepth; ++r) {
                    if (r == row) continue;
                    Rational f = M[(size_t)r][(size_t)col];
                    if (f == 0) continue;
                    for (int cc = col; cc <= ncols; ++cc)
                        M[(size_t)r][(size_t)cc] -= f * M[(size_t)row][(size_t)cc];
                }
                pivot_col.push_back(col);
                ++row;
            }
            for (int r = row; r < jdepth; ++r)
                if (M[(size_t)r][(size_t)ncols] != 0)
                    throw std::logic_error("fat reconstruction: inconsistent system");
            std::vector<Rational> x((size_t)ncols, Rational(0));
            for (int r = 0; r < (int)pivot_col.size(); ++r)
                x[(size_t)pivot_col[(size_t)r]] = M[(size_t)r][(size_t)ncols];
            // verify against every equation with exact arithmetic
            for (int j = 0; j < jdepth; ++j) {
                Rational s = 0;
                for (int col = 0; col < ncols; ++col)
                    s += E[(size_t)col][(size_t)j] * x[(size_t)col];
                if (s != rhs0[(size_t)j])
                    throw std::logic_error("fat reconstruction: verification failed");
            }
            // assemble sum_l x_{c',l} (w-c)^{-k} (-c')^l w^l (w-c')^{-l}
            for (int cp = 0; cp < 2; ++cp) {
                Rational csign = (cp == 0) ? Rational(-1) : Rational(1); // -c'
                Rational sgn = 1;
                for (int l = 1; l <= lam; ++l) {
                    sgn *= csign;
                    const Rational& xv = x[(size_t)(cp * lam + l - 1)];
                    if (xv == 0) continue;
                    FForm term;
                    term.num.c.assign((size_t)(l + 1), Rational(0));
                    term.num.c[(size_t)l] = xv * sgn;
                    term.b = (c == 0 ? k : 0) + (cp == 0 ? l : 0);
                    term.c = (c == 1 ? k : 0) + (cp == 1 ? l : 0);
                    ad = ff_add(ad, term);
                }
            }
        }
    }
    return ad;
}

RationalFn compute_component(int g, int n, const std::vector<int>& key) {
    if (g == 0 && n == 1) return RationalFn(Poly(Rational(1)), poly_x()); // 1/w
    if (g == 0 && n == 2) return component_02(key.at(0));
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("fat_component: unstable cell");

    // distinct spectator values with multiplicities
    std::vector<std::pair<int, int>> vals;
    for (int v : key) {
        if (!vals.empty() && vals.back().first == v) ++vals.back().second;
        else vals.emplace_back(v, 1);
    }

    FForm S;

    // quadratic terms: split genus and spectators; omega_{0,1} is excluded
    std::vector<int> cnt(vals.size(), 0);
    for (int g1 = 0; g1 <= g; ++g1) {
        int g2 = g - g1;
        std::fill(cnt.begin(), cnt.end(), 0);
        for (;;) {
            std::vector<int> k1, k2;
            Integer ways = 1;
            for (size_t i = 0; i < vals.size(); ++i) {
                for (int r = 0; r < cnt[i]; ++r) k1.push_back(vals[i].first);
                for (int r = cnt[i]; r < vals[i].second; ++r) k2.push_back(vals[i].first);
                ways *= binomial(vals[i].second, cnt[i]);
            }
            int n1 = (int)k1.size() + 1, n2 = (int)k2.size() + 1;
            if (!(g1 == 0 && n1 == 1) && !(g2 == 0 && n2 == 1)) {
                FForm f = ff_mul(ff_from_rf(fat_component(g1, n1, k1)),
                                 ff_subst_inv(ff_from_rf(fat_component(g2, n2, k2))));
                S = ff_add(S, ff_scale(f, Rational(ways)));
            }
            size_t i = 0;
            while (i < vals.size() && cnt[i] == vals[i].second) cnt[i++] = 0;
            if (i == vals.size()) break;
            ++cnt[i];
        }
    }

    // anti-diagonal term omega_{g-1,n+1}(p, sigma(p), spectators)
    if (g >= 1) {
        if (g == 1 && n == 1) {
            // omega_{0,2}(p, sigma(p)) / dz(p)^2 = -w^4/(w^2-1)^4
            FForm d;
            d.num.c = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(-1)};
            d.b = d.c = 4;
            S = ff_add(S, d);
        } else {
            S = ff_add(S, reconstruct_antidiagonal(g - 1, n + 1, key));
        }
    }

    // residues at w = +-1 of  A(w) / ((w-w0)(w-1/w0)),  A = -S (w^2-1)/w,
    // then the kernel prefactor 1/(4 y_0) = -w0/(2(w0^2-1)).
    FForm A = S;
    A.num = p_scale(A.num, Rational(-1));
    A.a += 1;
    if (A.b > 0) --A.b; else A.num = p_mul(A.num, poly_wm1());
    if (A.c > 0) --A.c; else A.num = p_mul(A.num, poly_wp1());
    Poly Aden;
    {
        FForm tmp = A;
        ff_to_polys(tmp, A.num, Aden);
    }
    FForm acc;
    for (int c : {1, -1}) {
        std::vector<Rational> lp = rf_laurent_principal(A.num, Aden, Rational(c));
        int m = (int)lp.size(); // a_{-m}..a_{-1}
        if (m == 0) continue;
        // (w-w0)(w-1/w0) = q + s u + u^2 at u = w - c, q = -c(w0-c)^2/w0,
        // s = c q; so 1/q = -c w/(w0-c)^2 and t_j = -(s t_{j-1} + t_{j-2})/q.
        FForm invq;
        invq.num.c = {Rational(0), Rational(-c)};
        (c == 1 ? invq.b : invq.c) = 2;
        FForm s;
        s.num = p_scale(p_pow(c == 1 ? poly_wm1() : poly_wp1(), 2), Rational(-1));
        s.a = 1;
        std::vector<FForm> t{invq}; // t_0 = 1/q
        for (int j = 1; j < m; ++j) {
            FForm v = ff_mul(s, t[(size_t)(j - 1)]);
            if (j >= 2) v = ff_add(v, t[(size_t)(j - 2)]);
            t.push_back(ff_scale(ff_mul(v, invq), Rational(-1)));
        }
        for (int i = 1; i <= m; ++i) // residue = sum_i a_{-i} t_{i-1}
            acc = ff_add(acc, ff_scale(t[(size_t)(i - 1)], lp[(size_t)(m - i)]));
    }
    FForm pref; // -w0/(2(w0^2-1))
    pref.num.c = {Rational(0), Rational(-1, 2)};
    pref.b = pref.c = 1;
    FForm res = ff_mul(acc, pref);
    Poly rnum, rden;
    ff_to_polys(res, rnum, rden);
    RationalFn result(std::move(rnum), std::move(rden));
    rf_partial_fractions(result); // asserts poles only at +-1, vanishing at infinity
    return result;
}

// sorted spectator keys: `slots` entries >= minval, total z-order <= budget
void gen_keys(int slots, long budget, int minval, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = minval; (long)(v + 1) * slots <= budget; ++v) {
        cur.push_back(v);
        gen_keys(slots - 1, budget - (v + 1), v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> spectator_keys(int slots, long budget) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_keys(slots, budget, 1, cur, out);
    return out;
}

std::string key_str(const std::vector<int>& k) {
    std::ostringstream os;
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os.str();
}

} // namespace

FatCorrelator fat_omega(int g, int n, long L) {
    FatCorrelator c;
    c.g = g;
    c.n = n;
    for (auto& key : spectator_keys(n - 1, L))
        c.comp.emplace(key, fat_component(g, n, key));
    return c;
}

std::string fat_dump(const FatCorrelator& c) {
    std::ostringstream os;
    auto poly_str = [](const Poly& p) {
        if (p.is_zero()) return std::string("0");
        std::ostringstream ps;
        bool first = true;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.c[(size_t)i] == 0) continue;
            if (!first) ps << " + ";
            first = false;
            ps << to_string(p.c[(size_t)i]);
            if (i > 0) ps << "*w^" << i;
        }
        return ps.str();
    };
    for (const auto& [key, f] : c.comp)
        os << "(" << key_str(key) << "): " << poly_str(f.num) << " / "
           << poly_str(f.den) << "\n";
    return os.str();
}

long fat_min_order(int g, int n) { return 3L * n + 4L * g - 2; }

NPointSeries fat_W(int g, int n, long L, long weight_cap) {
    auto wt = [](int j) { return (long)(j <= 2 ? j : j - 2); };
    NPointSeries w(n);
    if (g == 0 && n == 1) {
        for (int k = 1; 2 * k + 1 <= L; ++k) {
            if (weight_cap >= 0 && wt(2 * k) > weight_cap) break;
            w.add_term({2 * k}, catalan(k));
        }
        return w;
    }
    std::map<std::vector<int>, Rational> acc;
    auto put = [&](std::vector<int> key, const Rational& v) {
        std::sort(key.begin(), key.end());
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(std::move(key), v);
        else if (it->second != v)
            throw std::logic_error("fat_W: symmetry failure at W^fat_{" +
                                   std::to_string(g) + "," + std::to_string(n) + "}");
    };
    for (auto& kappa : spectator_keys(n - 1, L - 2)) {
        long korder = 0, kweight = 0;
        for (int j : kappa) {
            korder += j + 1;
            kweight += wt(j);
        }
        if (weight_cap >= 0 && kweight + 1 > weight_cap) continue;
        int depth = (int)(L - korder);
        if (weight_cap >= 0) {
            // active index j_0 has weight <= weight_cap - kweight, so
            // j_0 <= weight_cap - kweight + 2 and depth j_0 + 1 suffices
            long dmax = weight_cap - kweight + 3;
            if ((long)depth > dmax) depth = (int)dmax;
        }
        LaurentVector lv = rf_z_expand(fat_component(g, n, kappa), depth);
        if (g == 0 && n == 2) {
            // remove the diagonal double pole: [z2^{-J-1}] of the expansion of
            // 1/(z1-z2)^2 with |z2| > |z1| is J z1^{J-1}
            lv.add(kappa[0] - 1, Rational(-kappa[0]));
        }
        for (int e = std::min(lv.hi, -1); e >= -depth; --e) {
            int j0 = -e - 1;
            if (j0 < 1) {
                if (lv.coeff(e) != 0)
                    throw std::logic_error("fat_W: unexpected z^{-1} or higher term");
                continue;
            }
            if (weight_cap >= 0 && kweight + wt(j0) > weight_cap) continue;
            put(ms_insert(kappa, j0), lv.coeff(e));
        }
        for (int e = 0; e <= lv.hi; ++e)
            if (lv.coeff(e) != 0)
                throw std::logic_error("fat_W: non-decaying z-expansion");
    }
    for (auto& [key, v] : acc) {
        if (v == 0) continue;
        long tot = 0;
        for (int j : key) tot += j + 1;
        if (tot < fat_min_order(g, n))
            throw std::logic_error("fat_W: term below the fat-graph order bound");
        w.add_term(key, v);
    }
    return w;
}

NPointSeries fat_total(int n, long L, int gmax) {
    NPointSeries total(n);
    for (int g = 0; g <= gmax && fat_min_order(g, n) <= L; ++g)
        total = np_add(total, fat_W(g, n, L));
    return total;
}

std::string fat_total_check(long L, int gn_cap) {
    std::ostringstream report;
    for (int n = 1; n <= gn_cap && fat_min_order(0, n) <= L; ++n) {
        int gmax = (gn_cap - n) / 2;
        long Ln = std::min(L, fat_min_order(gmax + 1, n) - 1);
        if (Ln < fat_min_order(0, n)) continue;
        NPointSeries fat = fat_total(n, Ln, gmax);
        NPointSeries ref = np_restrict(connected_npoint(n, (int)Ln), Ln);
        if (!(fat == ref)) {
            NPointSeries diff = np_sub(fat, ref);
            report << "fat total mismatch at n=" << n << " L<=" << Ln << ":";
            int shown = 0;
            for (const auto& [key, v] : diff.terms) {
                if (v == 0) continue;
                report << " (" << key_str(key) << "): " << to_string(v);
                if (++shown == 5) break;
            }
            report << "\n";
        }
    }
    return report.str();
}

} // namespace tg
