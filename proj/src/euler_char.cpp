#include "tg/euler_char.hpp"

#include "tg/combinatorics.hpp"
#include "tg/fat_recursion.hpp"
#include "tg/thin_recursion.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tg {

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

// Run job(0..njobs-1) on worker_count() threads (order-independent jobs; the
// callers merge results deterministically afterwards).
template <class F>
void run_parallel(int njobs, F&& job) {
    int nw = worker_count();
    if (nw > njobs) nw = njobs;
    if (nw <= 1) {
        for (int i = 0; i < njobs; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve((size_t)nw);
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < njobs;) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

BiSeries bi_const(const SpecializationParams& p, int ycap, const Rational& c) {
    BiSeries r(p.z_floor(), p.z_ceiling(), ycap);
    r.add_term(0, 0, c);
    return r;
}

// chi(y,z) from the affine coordinates a_{0,2k+1} = (2k+1)!! through the
// bosonic representation of the partition function:
//   Zhat(y,z) = 1 + sum_k (2k-1)!! [u^{2k}] exp(sum_j tilde V_j(y,z) u^j / j!),
//   chi(y,z)  = log Zhat(y,z).
// The u-cap 2 var_cap - 2 + 2 G_max is exact: a contributing product has
// sum j_i <= 2N-2+2 G_max with N <= var_cap factors.
BiSeries chi_affine(const SpecializationParams& p) {
    int ucap = 2 * p.var_cap() - 2 + 2 * p.G_max;
    if (ucap < 0) ucap = 0;
    // A_j = tilde V_j / j!; empty once the top degree -(j-2) sinks below the
    // z-floor.
    int jmax = 2 - p.z_floor();
    if (jmax > ucap) jmax = ucap;
    std::vector<BiSeries> A((size_t)jmax + 1);
    for (int j = 1; j <= jmax; ++j)
        A[(size_t)j] = bi_scale(tilde_V(j, p), Rational(1) / Rational(factorial(j)));

    // E_s = [u^s] exp(sum_j A_j u^j): s E_s = sum_j j A_j E_{s-j}
    std::vector<BiSeries> E((size_t)ucap + 1);
    E[0] = bi_const(p, p.N_max, Rational(1));
    for (int s = 1; s <= ucap; ++s) {
        BiSeries acc(p.z_floor(), p.z_ceiling(), p.N_max);
        for (int j = 1; j <= jmax && j <= s; ++j) {
            if (A[(size_t)j].is_zero()) continue;
            acc = bi_add(acc, bi_scale(bi_mul(A[(size_t)j], E[(size_t)(s - j)]),
                                       Rational(j)));
        }
        E[(size_t)s] = bi_scale(acc, Rational(1) / Rational(s));
    }

    BiSeries X(p.z_floor(), p.z_ceiling(), p.N_max); // Zhat - 1
    for (int k = 1; 2 * k <= ucap; ++k)
        X = bi_add(X, bi_scale(E[(size_t)(2 * k)],
                               Rational(double_factorial(2 * k - 1))));

    // log(1 + X): X is truncation-nilpotent (every term has y-degree >= 1 or
    // z-degree <= -1, and z-degree <= y-degree), so powers die out.
    BiSeries chi(p.z_floor(), p.z_ceiling(), p.N_max);
    BiSeries pw = X;
    int mcap = 2 * p.N_max - p.z_floor() + 2;
    for (int m = 1; !pw.is_zero(); ++m) {
        if (m > mcap) throw std::logic_error("chi_affine: log did not terminate");
        chi = bi_add(chi, bi_scale(pw, Rational(m % 2 ? 1 : -1) / Rational(m)));
        pw = bi_mul(pw, X);
    }
    return chi;
}

// Keys that can contribute to the window: sum j_i <= 2N-2+2 G_max and every
// j_i <= index_cap (both from the finiteness bound).
bool key_in_window(const std::vector<int>& key, const SpecializationParams& p) {
    long s = 0;
    for (int j : key) {
        if (j > p.index_cap()) return false;
        s += j;
    }
    return s <= 2L * (long)key.size() - 2 + 2 * p.G_max;
}

NPointSeries np_filter(const NPointSeries& a, const SpecializationParams& p) {
    NPointSeries r(a.n);
    for (const auto& [k, c] : a.terms)
        if (key_in_window(k, p)) r.terms.emplace(k, c);
    return r;
}

// Per-arity totals of the thin recursion: homogeneity pins sum j_i =
// 2g'-2+2N, so the window bound is exactly g' <= G_max.
std::vector<NPointSeries> thin_inputs(const SpecializationParams& p) {
    std::vector<std::pair<int, int>> cells;
    for (int N = 1; N <= p.var_cap(); ++N)
        for (int gp = 0; gp <= p.G_max; ++gp)
            if (!(gp == 0 && N == 1)) cells.emplace_back(gp, N);
    // warm the memo in parallel, largest cells first
    run_parallel((int)cells.size(), [&](int i) {
        auto [gp, N] = cells[(size_t)(cells.size() - 1 - (size_t)i)];
        thin_W(gp, N);
    });
    std::vector<NPointSeries> tot;
    tot.reserve((size_t)p.var_cap());
    for (int N = 1; N <= p.var_cap(); ++N) {
        NPointSeries s(N);
        for (int gp = 0; gp <= p.G_max; ++gp)
            if (!(gp == 0 && N == 1)) s = np_add(s, thin_W(gp, N));
        tot.push_back(np_filter(s, p));
    }
    return tot;
}

// Per-arity totals of the fat recursion: the window bound sum j_i <=
// 2N-2+2 G_max is the order cap L_N = 3N + 2 G_max - 2, which admits fat
// genus g' <= G_max / 2 only (minimal order 3N + 4g' - 2).
std::vector<NPointSeries> fat_inputs(const SpecializationParams& p) {
    // weight budget: a contributing key has sum weight(j_i) <= 2n-2+2g <= B
    long B = p.var_cap();
    std::vector<std::pair<int, int>> cells;
    for (int N = 1; N <= p.var_cap(); ++N) {
        long LN = 3L * N + 2 * p.G_max - 2;
        // max order under the weight budget is 3N+B (all-j=3 keys, order 4
        // and weight 1 each, plus one extra order per spare weight unit)
        for (int gp = 0; 2 * gp <= p.G_max; ++gp)
            if (fat_min_order(gp, N) <= LN && fat_min_order(gp, N) <= 3L * N + B)
                cells.emplace_back(gp, N);
    }
    std::vector<NPointSeries> parts((size_t)cells.size());
    run_parallel((int)cells.size(), [&](int i) {
        size_t k = cells.size() - 1 - (size_t)i; // largest cells first
        auto [gp, N] = cells[k];
        parts[k] = fat_W(gp, N, 3L * N + 2 * p.G_max - 2, B);
    });
    std::vector<NPointSeries> tot;
    tot.reserve((size_t)p.var_cap());
    for (int N = 1; N <= p.var_cap(); ++N) {
        NPointSeries s(N);
        for (size_t k = 0; k < cells.size(); ++k)
            if (cells[k].second == N) s = np_add(s, parts[k]);
        tot.push_back(np_filter(s, p));
    }
    return tot;
}

} // namespace

ChiBackend chi_backend_from_string(const std::string& s) {
    if (s == "affine") return ChiBackend::affine;
    if (s == "thin") return ChiBackend::thin;
    if (s == "fat") return ChiBackend::fat;
    throw std::invalid_argument("unknown backend: " + s);
}

Rational chi_open(int g, int n) {
    if (!stable(g, n)) throw std::invalid_argument("chi_open: unstable (g,n)");
    Rational sign(n % 2 ? -1 : 1);
    Rational b = (g == 0) ? Rational(-1)
                          : Rational(2 * g - 1) * bernoulli(2 * g) /
                                Rational(factorial(2 * g));
    return sign * b * Rational(factorial(2 * g + n - 3));
}

BiSeries tilde_V(int n, const SpecializationParams& p) {
    if (n < 0) throw std::invalid_argument("tilde_V: n >= 0 required");
    BiSeries v(p.z_floor(), p.z_ceiling(), p.N_max);
    if (n == 0) v.add_term(2, 2, Rational(-1) / Rational(2));
    if (n == 1) v.add_term(1, 1, Rational(1));
    int gmin = n >= 3 ? 0 : (n >= 1 ? 1 : 2);
    for (int g = gmin; 2 - 2 * g - n >= p.z_floor(); ++g)
        v.add_term(0, 2 - 2 * g - n, chi_open(g, n));
    return v;
}

BiSeries specialize(const std::vector<NPointSeries>& npoints,
                    const SpecializationParams& p, bool include_y) {
    int ycap = include_y ? p.N_max : 0;
    BiSeries acc(p.z_floor(), p.z_ceiling(), ycap);
    int jmax = 0;
    for (size_t k = 0; k < npoints.size(); ++k) {
        if (npoints[k].n != (int)k + 1)
            throw std::invalid_argument("specialize: npoints[k] must have arity k+1");
        for (const auto& [key, c] : npoints[k].terms)
            if (!key.empty() && key.back() > jmax) jmax = key.back();
    }
    std::vector<BiSeries> V((size_t)jmax + 1);
    for (int j = 1; j <= jmax; ++j) {
        V[(size_t)j] = tilde_V(j, p);
        if (!include_y) {
            BiSeries cut(p.z_floor(), p.z_ceiling(), 0);
            for (const auto& [k, c] : V[(size_t)j].terms)
                cut.add_term(k.first, k.second, c);
            V[(size_t)j] = std::move(cut);
        }
    }
    for (const auto& s : npoints) {
        int N = s.n;
        // sorted keys in map order share prefixes; keep a product stack
        std::vector<int> prev;
        std::vector<BiSeries> stack; // stack[i] = product of first i+1 factors
        for (const auto& [key, c] : s.terms) {
            size_t common = 0;
            while (common < prev.size() && common < key.size() &&
                   prev[common] == key[common])
                ++common;
            stack.resize(common);
            for (size_t i = common; i < key.size(); ++i) {
                int j = key[i];
                if (j < 1) throw std::invalid_argument("specialize: key entry < 1");
                const BiSeries& f = V[(size_t)j];
                stack.push_back(i == 0 ? f : bi_mul(stack[i - 1], f));
            }
            prev = key;
            Rational w = c * Rational(key_orbit_size(key)) / Rational(factorial(N));
            for (int j : key) w /= Rational(factorial(j));
            acc = bi_add(acc, bi_scale(stack.back(), w));
        }
    }
    return acc;
}

BiSeries chi_series(const SpecializationParams& p, ChiBackend backend) {
    if (p.G_max < 0 || p.N_max < 0)
        throw std::invalid_argument("chi_series: negative bounds");
    switch (backend) {
    case ChiBackend::affine:
        return chi_affine(p);
    case ChiBackend::thin:
        return specialize(thin_inputs(p), p);
    case ChiBackend::fat:
        return specialize(fat_inputs(p), p);
    }
    throw std::logic_error("chi_series: bad backend");
}

ChiTable chi_table(const SpecializationParams& p, ChiBackend backend) {
    BiSeries chi = chi_series(p, backend);
    ChiTable t;
    for (int g = 0; g <= p.G_max; ++g)
        for (int n = 0; n <= p.N_max; ++n) {
            if (!stable(g, n)) continue;
            Rational v = Rational(factorial(n)) * bi_coeff(chi, n, 2 - 2 * g);
            if (n == 0) v += chi_open(g, 0); // add back the y^0 part of tilde V_0
            t.values.emplace(std::make_pair(g, n), v);
        }
    return t;
}

std::string chi_table_csv(const ChiTable& t) {
    std::ostringstream os;
    os << "g,n,chi\n";
    for (const auto& [gn, v] : t.values)
        os << gn.first << ',' << gn.second << ',' << to_string(v) << '\n';
    return os.str();
}

std::string chi_table_json(const ChiTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [gn, v] : t.values)
        arr.push_back({{"g", gn.first}, {"n", gn.second}, {"chi", to_string(v)}});
    return arr.dump(2) + "\n";
}

std::string chi_table_markdown(const ChiTable& t) {
    int gmax = 0, nmax = 0;
    for (const auto& [gn, v] : t.values) {
        if (gn.first > gmax) gmax = gn.first;
        if (gn.second > nmax) nmax = gn.second;
    }
    std::ostringstream os;
    os << "| g \\ n |";
    for (int n = 0; n <= nmax; ++n) os << ' ' << n << " |";
    os << "\n|---|";
    for (int n = 0; n <= nmax; ++n) os << "---|";
    os << '\n';
    for (int g = 0; g <= gmax; ++g) {
        os << "| " << g << " |";
        for (int n = 0; n <= nmax; ++n) {
            auto it = t.values.find({g, n});
            os << ' ' << (it == t.values.end() ? "" : to_string(it->second))
               << " |";
        }
        os << '\n';
    }
    return os.str();
}

int worker_count() {
    const char* env = std::getenv("MODULI_EULER_THREADS");
    if (!env || !*env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

} // namespace tg
