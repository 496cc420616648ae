#include "tg/gravity1d.hpp"

#include "tg/combinatorics.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tg {

GradedPoly partition_function(long D) {
    static std::map<long, GradedPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(D);
        if (it != cache.end()) return it->second;
    }
    GradedPoly Z(D);
    Z.add_term({}, Rational(1));
    // sum over partitions lambda of 2n <= D with parts j and multiplicities
    // m_j: coefficient (2n-1)!! / prod (j!)^{m_j} m_j!, monomial prod t_{j-1}.
    for (long d = 2; d <= D; d += 2) {
        Integer num = double_factorial(d - 1);
        for (const auto& lam : partitions_of((int)d)) {
            Integer den = 1;
            Mono mono;
            for (size_t i = 0; i < lam.parts.size();) {
                size_t k = i;
                while (k < lam.parts.size() && lam.parts[k] == lam.parts[i]) ++k;
                Integer fj = factorial(lam.parts[i]);
                Integer pw;
                mpz_pow_ui(pw.get_mpz_t(), fj.get_mpz_t(), (unsigned long)(k - i));
                den *= pw * factorial((long)(k - i));
                i = k;
            }
            for (auto it = lam.parts.rbegin(); it != lam.parts.rend(); ++it)
                mono.push_back(*it - 1);
            Z.add_term(mono, Rational(num) / Rational(den));
        }
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(D, Z);
    return Z;
}

GradedPoly free_energy(long D) { return poly_log(partition_function(D)); }

GradedPoly apply_virasoro(const VirasoroOp& op, const GradedPoly& P) {
    if (op.m < -1) throw std::invalid_argument("apply_virasoro: m >= -1 required");
    long D = P.D;
    GradedPoly out(D);
    auto add_t_minus_delta = [&](const GradedPoly& q, int tindex, int delta_at,
                                 const Rational& c) {
        // c * (t_tindex - [tindex == delta_at]) * q
        out = poly_add(out, poly_scale(poly_mul_t(q, tindex), c));
        if (tindex == delta_at) out = poly_add(out, poly_scale(q, -c));
    };
    int m = op.m;
    if (m == -1) {
        // t_0 P + sum_{n>=1} (t_n - d_{n,1}) dP/dt_{n-1}
        out = poly_add(out, poly_mul_t(P, 0));
        for (int n = 1; n <= (int)D; ++n) {
            GradedPoly d = poly_deriv(P, n - 1);
            if (d.is_zero()) continue;
            add_t_minus_delta(d, n, 1, Rational(1));
        }
        return out;
    }
    if (m == 0) {
        out = poly_add(out, P);
        for (int n = 0; n <= (int)D; ++n) {
            GradedPoly d = poly_deriv(P, n);
            if (d.is_zero()) continue;
            add_t_minus_delta(d, n, 1, Rational(n + 1));
        }
        return out;
    }
    if (op.family == VirasoroFamily::Original) {
        // (m+1)! d/dt_{m-1} + sum_{n>=1}(t_{n-1}-d_{n,2}) (m+n)!/(n-1)! d/dt_{m+n-1}
        out = poly_add(out, poly_scale(poly_deriv(P, m - 1), Rational(factorial(m + 1))));
        for (int n = 1; m + n - 1 <= (int)D; ++n) {
            GradedPoly d = poly_deriv(P, m + n - 1);
            if (d.is_zero()) continue;
            Rational c = Rational(factorial(m + n)) / Rational(factorial(n - 1));
            // (t_{n-1} - delta_{n,2})
            out = poly_add(out, poly_scale(poly_mul_t(d, n - 1), c));
            if (n == 2) out = poly_add(out, poly_scale(d, -c));
        }
        return out;
    }
    // Reformulated family
    out = poly_add(out, poly_scale(poly_deriv(P, m - 1),
                                   Rational(m + 3, 2) * Rational(factorial(m))));
    for (int m1 = 1; m1 <= m - 1; ++m1) {
        int m2 = m - m1;
        GradedPoly d2 = poly_deriv(poly_deriv(P, m1 - 1), m2 - 1);
        if (d2.is_zero()) continue;
        out = poly_add(out, poly_scale(d2, Rational(factorial(m1) * factorial(m2), 2)));
    }
    for (int n = 0; m + n <= (int)D; ++n) {
        GradedPoly d = poly_deriv(P, m + n);
        if (d.is_zero()) continue;
        Rational c = Rational(factorial(m + n + 1)) / Rational(factorial(n));
        add_t_minus_delta(d, n, 1, c);
    }
    return out;
}

long virasoro_exact_window(const VirasoroOp& op, long D) {
    // the t-part of L_m lowers degree by m, the delta-part by m + 2; output
    // degrees <= D - m - 2 only read input degrees <= D
    return D - op.m - 2;
}

std::string flow_check(int n, long D) {
    GradedPoly Z = partition_function(D);
    GradedPoly lhs = poly_deriv(Z, n);
    GradedPoly rhs = Z;
    for (int k = 0; k <= n; ++k) rhs = poly_deriv(rhs, 0);
    rhs = poly_scale(rhs, Rational(1) / Rational(factorial(n + 1)));
    long W = D - (n + 1); // both sides exact to here
    GradedPoly diff = poly_truncate(poly_sub(lhs, rhs), W);
    if (diff.is_zero()) return "";
    std::ostringstream os;
    os << "flow_check(n=" << n << ", D=" << D << ") first failing term:\n"
       << poly_dump(diff).substr(0, 200);
    return os.str();
}

std::string polymer_check(long D) {
    GradedPoly Z = partition_function(D);
    GradedPoly acc(D);
    GradedPoly dZ = Z; // d^n Z / dt_0^n
    for (int n = 0; n <= (int)D; ++n) {
        if (!dZ.is_zero()) {
            Rational c = Rational(1) / Rational(factorial(n));
            acc = poly_add(acc, poly_scale(poly_mul_t(dZ, n), c));
            if (n == 1) acc = poly_add(acc, poly_scale(dZ, -c));
        }
        dZ = poly_deriv(dZ, 0);
    }
    // each term shifts degree by +1, so degrees <= D of acc are exact
    if (acc.is_zero()) return "";
    std::ostringstream os;
    os << "polymer_check(D=" << D << ") first failing term:\n"
       << poly_dump(acc).substr(0, 200);
    return os.str();
}

static GradedPoly apply_cut_and_join(const GradedPoly& P) {
    long D = P.D;
    GradedPoly out(D);
    // (1) 1/2 sum_{k,n>=0} (n+k)!/(n! k!) t_k t_n d/dt_{n+k-1}, d/dt_{-1} = 0
    for (int k = 0; k <= (int)D; ++k)
        for (int n = 0; n <= (int)D; ++n) {
            if (n + k == 0) continue; // d/dt_{-1} := 0
            if (k + 1 + n + 1 - (n + k) > (int)D) break;
            GradedPoly d = poly_deriv(P, n + k - 1);
            if (d.is_zero()) continue;
            Rational c = Rational(factorial(n + k), 2) /
                         Rational(factorial(n) * factorial(k));
            out = poly_add(out, poly_scale(poly_mul_t(poly_mul_t(d, k), n), c));
        }
    // (2) 1/2 sum_{n>=2} t_{n+1}/(n+1)! sum_{i+j=n, i,j>=1} i! j! d^2/dt_{i-1} dt_{j-1}
    for (int n = 2; n + 2 <= (int)D + (int)D; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            int j = n - i;
            GradedPoly d2 = poly_deriv(poly_deriv(P, i - 1), j - 1);
            if (d2.is_zero()) continue;
            Rational c = Rational(factorial(i) * factorial(j), 2) /
                         Rational(factorial(n + 1));
            out = poly_add(out, poly_scale(poly_mul_t(d2, n + 1), c));
        }
        if (n > (int)D + 2) break;
    }
    // (3) sum_{n>=0} t_{n+2}/(n+2) d/dt_n
    for (int n = 0; n + 3 <= (int)D + (int)D; ++n) {
        if (n + 3 > (int)D + (int)D) break;
        GradedPoly d = poly_deriv(P, n);
        if (d.is_zero()) continue;
        out = poly_add(out, poly_scale(poly_mul_t(d, n + 2), Rational(1, (unsigned long)(n + 2))));
        if (n > (int)D) break;
    }
    // (4) (1/2 t_0^2 + 1/2 t_1) P
    out = poly_add(out, poly_scale(poly_mul_t(poly_mul_t(P, 0), 0), Rational(1, 2)));
    out = poly_add(out, poly_scale(poly_mul_t(P, 1), Rational(1, 2)));
    return out;
}

GradedPoly cut_and_join_Z(long D) {
    // M^{1D} is homogeneous of degree +2, so exp truncates after floor(D/2)
    // applications.
    GradedPoly acc = GradedPoly::constant(D, Rational(1));
    GradedPoly out = acc;
    Rational invfac(1);
    for (long k = 1; k <= D / 2 + 1; ++k) {
        acc = apply_cut_and_join(acc);
        if (acc.is_zero()) break;
        invfac /= Rational((unsigned long)k);
        out = poly_add(out, poly_scale(acc, invfac));
    }
    return out;
}

} // namespace tg
