#include "tg/thin_recursion.hpp"

#include "tg/combinatorics.hpp"
#include "tg/kp_npoint.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tg {

namespace {

// multiset helpers on sorted ascending vectors
std::vector<int> ms_erase(const std::vector<int>& m, int v) {
    std::vector<int> r = m;
    auto it = std::find(r.begin(), r.end(), v);
    r.erase(it);
    return r;
}

std::vector<int> ms_insert(const std::vector<int>& m, int v) {
    std::vector<int> r = m;
    r.insert(std::upper_bound(r.begin(), r.end(), v), v);
    return r;
}

int ms_count(const std::vector<int>& m, int v) {
    auto [a, b] = std::equal_range(m.begin(), m.end(), v);
    return (int)(b - a);
}

std::vector<int> ms_merge(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool exists_W(int g, int n) { return g >= 0 && n >= 1; }

// The recursion produces the coefficient P(j_0, M) of z_0^{-j_0-1} times a
// specific monomial with sorted key M in the remaining variables; symmetry of
// the result is asserted when reading it back off.
using PMap = std::map<std::pair<int, std::vector<int>>, Rational>;

void p_add(PMap& P, int j0, const std::vector<int>& M, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(j0, M);
    auto it = P.find(key);
    if (it == P.end()) {
        P.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) P.erase(it);
    }
}

NPointSeries compute_W(int g, int np1); // forward

const NPointSeries& W_memo(int g, int n) {
    static std::map<std::pair<int, int>, NPointSeries> memo;
    static std::mutex mu;
    auto key = std::make_pair(g, n);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    // compute outside the lock: compute_W recurses back into W_memo (map
    // node references stay valid across concurrent inserts)
    NPointSeries w = compute_W(g, n);
    std::lock_guard<std::mutex> lk(mu);
    return memo.emplace(key, std::move(w)).first->second;
}

NPointSeries compute_W(int g, int np1) {
    if (g == 0 && np1 == 1) {
        NPointSeries w(1);
        w.add_term({0}, Rational(1)); // W_{0,1} = 1/z_1
        return w;
    }
    int n = np1 - 1; // spectator count
    PMap P;

    // D-term: D applied to z_j^{-v-1} gives, for a = 1..v+1 and w = v+2-a,
    // the monomial w z_0^{-a-1} z_j^{-w-1}.  Reading it per specific target
    // monomial: every spectator position carrying w could have been hit.
    if (exists_W(g, n)) {
        const NPointSeries& src = W_memo(g, n);
        for (const auto& [K, c] : src.terms) {
            int prev = -1;
            for (int v : K) {
                if (v == prev) continue;
                prev = v;
                std::vector<int> base = ms_erase(K, v);
                for (int a = 1; a <= v + 1; ++a) {
                    int w = v + 2 - a;
                    std::vector<int> M = ms_insert(base, w);
                    p_add(P, a, M, c * Rational(w * ms_count(M, w)));
                }
            }
        }
    }

    // E-term on W_{g-2,n+2}: the two collided variables contribute
    // z_0^{-alpha-beta-3}, i.e. j_0 = alpha + beta + 2.
    if (exists_W(g - 2, n + 2)) {
        const NPointSeries& src = W_memo(g - 2, n + 2);
        for (const auto& [K, c] : src.terms) {
            int preva = -1;
            for (size_t ia = 0; ia < K.size(); ++ia) {
                int alpha = K[ia];
                if (alpha == preva) continue;
                preva = alpha;
                std::vector<int> rest = ms_erase(K, alpha);
                int prevb = -1;
                for (size_t ib = 0; ib < rest.size(); ++ib) {
                    int beta = rest[ib];
                    if (beta == prevb) continue;
                    prevb = beta;
                    p_add(P, alpha + beta + 2, ms_erase(rest, beta), c);
                }
            }
        }
    }

    // quadratic term: split the spectators between the two factors; the
    // binomial product counts the subsets of target positions realizing the
    // first factor's spectator multiset.
    for (int g1 = 0; g1 <= g - 1; ++g1) {
        int g2 = g - 1 - g1;
        for (int n1 = 0; n1 <= n; ++n1) {
            int n2 = n - n1;
            if (!exists_W(g1, n1 + 1) || !exists_W(g2, n2 + 1)) continue;
            const NPointSeries& A = W_memo(g1, n1 + 1);
            const NPointSeries& B = W_memo(g2, n2 + 1);
            for (const auto& [K1, c1] : A.terms) {
                int preva = -1;
                for (int alpha : K1) {
                    if (alpha == preva) continue;
                    preva = alpha;
                    std::vector<int> R1 = ms_erase(K1, alpha);
                    for (const auto& [K2, c2] : B.terms) {
                        int prevb = -1;
                        for (int beta : K2) {
                            if (beta == prevb) continue;
                            prevb = beta;
                            std::vector<int> R2 = ms_erase(K2, beta);
                            std::vector<int> M = ms_merge(R1, R2);
                            Integer ways = 1;
                            int prevw = -1;
                            for (int w : R1) {
                                if (w == prevw) continue;
                                prevw = w;
                                ways *= binomial(ms_count(M, w), ms_count(R1, w));
                            }
                            p_add(P, alpha + beta + 2, M, c1 * c2 * Rational(ways));
                        }
                    }
                }
            }
        }
    }

    // read off: the coefficient of a sorted key S is P(v, S minus v) for any
    // distinct v in S; equality across choices is the symmetry check.
    NPointSeries w(np1);
    std::map<std::vector<int>, Rational> done;
    for (const auto& [key, c] : P) {
        std::vector<int> S = ms_insert(key.second, key.first);
        if (done.count(S)) continue;
        done.emplace(S, c);
        int prev = -1;
        for (int v : S) {
            if (v == prev) continue;
            prev = v;
            auto it = P.find(std::make_pair(v, ms_erase(S, v)));
            Rational other = (it == P.end()) ? Rational(0) : it->second;
            if (other != c) {
                std::ostringstream os;
                os << "thin recursion symmetry failure at W_{" << g << ","
                   << np1 << "}";
                throw std::logic_error(os.str());
            }
        }
        w.add_term(S, c);
    }
    // homogeneity: sum (j_i + 1) = 2g - 2 + 3n on every monomial
    for (const auto& [S, c] : w.terms) {
        long tot = 0;
        for (int j : S) tot += j + 1;
        if (tot != 2L * g - 2 + 3L * np1)
            throw std::logic_error("thin recursion homogeneity failure");
    }
    return w;
}

} // namespace

NPointSeries thin_W(int g, int n) {
    if (!exists_W(g, n)) throw std::invalid_argument("thin_W: unstable (g,n)");
    return W_memo(g, n);
}

NPointSeries thin_total(int n, long L) {
    if (n < 1) throw std::invalid_argument("thin_total: n >= 1 required");
    NPointSeries total(n);
    for (int g = 0; 2 * g - 2 + 3 * n <= L; ++g) {
        if (g == 0 && n == 1) continue; // the unstable base case is not part of W^{1D}
        total = np_add(total, thin_W(g, n));
    }
    return total;
}

std::string thin_total_check(long L, int gn_cap) {
    std::ostringstream report;
    for (int n = 1; n <= gn_cap && 3 * n - 2 <= L; ++n) {
        int gmax = (gn_cap - n) / 2;
        // cap below the homogeneous order of the first omitted cell
        long Ln = std::min(L, 2L * (gmax + 1) - 2 + 3L * n - 1);
        if (Ln < 3 * n - 2) continue;
        NPointSeries thin = np_restrict(thin_total(n, Ln), Ln);
        NPointSeries ref = np_restrict(connected_npoint(n, (int)Ln), Ln);
        if (!(thin == ref)) {
            NPointSeries diff = np_sub(thin, ref);
            report << "thin total mismatch at n=" << n << " L<=" << Ln << ":";
            int shown = 0;
            for (const auto& [key, v] : diff.terms) {
                if (v == 0) continue;
                report << " (";
                for (size_t i = 0; i < key.size(); ++i)
                    report << (i ? "," : "") << key[i];
                report << "): " << to_string(v);
                if (++shown == 5) break;
            }
            report << "\n";
        }
    }
    return report.str();
}

} // namespace tg
