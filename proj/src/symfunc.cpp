#include "tg/symfunc.hpp"

#include "tg/gravity1d.hpp"
#include "tg/graded_poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tg {

void SymFunc::add_term(const Partition& lam, const Rational& c) {
    if (c == 0 || lam.weight() > cap) return;
    auto it = terms.find(lam);
    if (it == terms.end()) {
        terms.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational SymFunc::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Rational(0) : it->second;
}

SymFunc sf_add(const SymFunc& a, const SymFunc& b) {
    if (a.cap != b.cap) throw std::invalid_argument("sf_add: cap mismatch");
    SymFunc r = a;
    for (const auto& [l, c] : b.terms) r.add_term(l, c);
    return r;
}

SymFunc sf_sub(const SymFunc& a, const SymFunc& b) {
    if (a.cap != b.cap) throw std::invalid_argument("sf_sub: cap mismatch");
    SymFunc r = a;
    for (const auto& [l, c] : b.terms) r.add_term(l, -c);
    return r;
}

SymFunc sf_scale(const SymFunc& a, const Rational& c) {
    SymFunc r(a.cap);
    if (c == 0) return r;
    for (const auto& [l, v] : a.terms) r.terms.emplace(l, v * c);
    return r;
}

SymFunc sf_mul(const SymFunc& a, const SymFunc& b) {
    if (a.cap != b.cap) throw std::invalid_argument("sf_mul: cap mismatch");
    SymFunc r(a.cap);
    for (const auto& [la, ca] : a.terms)
        for (const auto& [lb, cb] : b.terms) {
            if (la.weight() + lb.weight() > a.cap) continue;
            Partition m;
            m.parts.reserve(la.parts.size() + lb.parts.size());
            std::merge(la.parts.begin(), la.parts.end(), lb.parts.begin(), lb.parts.end(),
                       std::back_inserter(m.parts), std::greater<int>());
            r.add_term(m, ca * cb);
        }
    return r;
}

SymFunc h_in_p(int n, int cap) {
    SymFunc r(cap);
    if (n > cap) return r;
    if (n == 0) {
        r.add_term(Partition{}, Rational(1));
        return r;
    }
    for (const auto& lam : partitions_of(n))
        r.add_term(lam, Rational(1) / Rational(z_lambda(lam)));
    return r;
}

SymFunc omega(const SymFunc& f) {
    SymFunc r(f.cap);
    for (const auto& [l, c] : f.terms) {
        long sign = l.weight() - l.length();
        r.add_term(l, (sign % 2 == 0) ? c : -c);
    }
    return r;
}

SymFunc e_in_p(int n, int cap) { return omega(h_in_p(n, cap)); }

SymFunc schur_hook(int m, int n, int cap) {
    if (m + n + 1 > cap) throw std::invalid_argument("schur_hook: cap exceeded");
    SymFunc r(cap);
    for (int i = 0; i <= n; ++i) {
        SymFunc t = sf_mul(h_in_p(m + 1 + i, cap), e_in_p(n - i, cap));
        r = (i % 2 == 0) ? sf_add(r, t) : sf_sub(r, t);
    }
    return r;
}

// generic determinant over the SymFunc ring by cofactor expansion
static SymFunc sf_det(const std::vector<std::vector<SymFunc>>& a, int cap) {
    size_t d = a.size();
    if (d == 0) {
        SymFunc one(cap);
        one.add_term(Partition{}, Rational(1));
        return one;
    }
    if (d == 1) return a[0][0];
    SymFunc r(cap);
    for (size_t k = 0; k < d; ++k) {
        std::vector<std::vector<SymFunc>> minor;
        for (size_t i = 1; i < d; ++i) {
            std::vector<SymFunc> row;
            for (size_t j = 0; j < d; ++j)
                if (j != k) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        SymFunc t = sf_mul(a[0][k], sf_det(minor, cap));
        r = (k % 2 == 0) ? sf_add(r, t) : sf_sub(r, t);
    }
    return r;
}

SymFunc schur(const Partition& lam, int cap) {
    if (lam.weight() > cap) throw std::invalid_argument("schur: cap exceeded");
    Frobenius fr = to_frobenius(lam);
    size_t d = fr.arms.size();
    std::vector<std::vector<SymFunc>> mat(d, std::vector<SymFunc>(d, SymFunc(cap)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            mat[i][j] = schur_hook(fr.arms[i], fr.legs[j], cap);
    return sf_det(mat, cap);
}

SymFunc schur_jacobi_trudi(const Partition& lam, int cap) {
    size_t d = lam.parts.size();
    if (d == 0) {
        SymFunc one(cap);
        one.add_term(Partition{}, Rational(1));
        return one;
    }
    std::vector<std::vector<SymFunc>> mat(d, std::vector<SymFunc>(d, SymFunc(cap)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            int idx = lam.parts[i] - (int)i + (int)j;
            mat[i][j] = (idx < 0) ? SymFunc(cap) : h_in_p(idx, cap);
        }
    return sf_det(mat, cap);
}

// ---------- multigraph enumeration ----------

namespace {

// adjacency stored as flattened upper triangle incl. diagonal (loop counts)
struct Adj {
    int k;
    std::vector<int> a; // a[idx(i,j)] with i<=j
    int idx(int i, int j) const { return i * k - i * (i - 1) / 2 + (j - i); }
    int at(int i, int j) const { return i <= j ? a[(size_t)idx(i, j)] : a[(size_t)idx(j, i)]; }
};

void enumerate_graphs(int k, const std::vector<int>& val, int i, int j, Adj& adj,
                      std::vector<int>& residual, const std::function<void(const Adj&)>& emit) {
    if (i == k) {
        emit(adj);
        return;
    }
    if (j == k) {
        if (residual[(size_t)i] != 0) return;
        enumerate_graphs(k, val, i + 1, i + 1, adj, residual, emit);
        return;
    }
    if (i == j) {
        // loops consume 2 units of valence each
        for (int l = 0; 2 * l <= residual[(size_t)i]; ++l) {
            adj.a[(size_t)adj.idx(i, i)] = l;
            residual[(size_t)i] -= 2 * l;
            enumerate_graphs(k, val, i, j + 1, adj, residual, emit);
            residual[(size_t)i] += 2 * l;
        }
        adj.a[(size_t)adj.idx(i, i)] = 0;
    } else {
        int cap = std::min(residual[(size_t)i], residual[(size_t)j]);
        for (int e = 0; e <= cap; ++e) {
            adj.a[(size_t)adj.idx(i, j)] = e;
            residual[(size_t)i] -= e;
            residual[(size_t)j] -= e;
            enumerate_graphs(k, val, i, j + 1, adj, residual, emit);
            residual[(size_t)i] += e;
            residual[(size_t)j] += e;
        }
        adj.a[(size_t)adj.idx(i, j)] = 0;
    }
}

} // namespace

Rational graph_sum_oracle(const std::vector<int>& valences) {
    int k = (int)valences.size();
    if (k > 5) throw std::invalid_argument("graph_sum_oracle: at most 5 vertices");
    long total = std::accumulate(valences.begin(), valences.end(), 0L);
    if (total % 2 != 0) return Rational(0);
    // valence-preserving vertex permutations
    std::vector<int> base(valences.size());
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> vperms;
    std::vector<int> p = base;
    std::sort(p.begin(), p.end());
    do {
        bool ok = true;
        for (int i = 0; i < k; ++i)
            if (valences[(size_t)p[(size_t)i]] != valences[(size_t)i]) ok = false;
        if (ok) vperms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, Rational> classes; // canonical adjacency -> 1/|Aut|
    Adj adj{k, std::vector<int>((size_t)(k * (k + 1) / 2), 0)};
    std::vector<int> residual = valences;
    enumerate_graphs(k, valences, 0, 0, adj, residual, [&](const Adj& g) {
        // canonical representative and stabilizer size under vperms
        std::vector<int> canon = g.a;
        long stab = 0;
        for (const auto& q : vperms) {
            std::vector<int> img((size_t)(k * (k + 1) / 2));
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j)
                    img[(size_t)g.idx(i, j)] = g.at(q[(size_t)i], q[(size_t)j]);
            if (img == g.a) ++stab;
            if (img < canon) canon = img;
        }
        if (classes.count(canon)) return;
        // |Aut| = vertex stabilizer * parallel-edge swaps * loop flips
        Integer aut(stab);
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) aut *= factorial(g.at(i, j));
            Integer two;
            mpz_ui_pow_ui(two.get_mpz_t(), 2, (unsigned long)g.at(i, i));
            aut *= two * factorial(g.at(i, i));
        }
        classes.emplace(std::move(canon), Rational(1) / Rational(aut));
    });
    Rational sum(0);
    for (const auto& [c, v] : classes) sum += v;
    return sum;
}

std::string verify_bosonic_Z(int D) {
    GradedPoly Z = partition_function(D);
    SymFunc lhs(D);
    for (const auto& [m, c] : Z.terms) {
        Rational coef = c;
        Partition lam;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            coef *= Rational(factorial(*it));
            lam.parts.push_back(*it + 1);
        }
        lhs.add_term(lam, coef);
    }
    SymFunc rhs(D);
    rhs.add_term(Partition{}, Rational(1));
    for (int k = 0; 2 * k + 2 <= D; ++k)
        rhs = sf_add(rhs, sf_scale(h_in_p(2 * k + 2, D), Rational(double_factorial(2 * k + 1))));
    SymFunc diff = sf_sub(lhs, rhs);
    if (diff.terms.empty()) return "";
    std::ostringstream os;
    const auto& [l, c] = *diff.terms.begin();
    os << "first discrepancy at p_(";
    for (size_t i = 0; i < l.parts.size(); ++i) os << (i ? "," : "") << l.parts[i];
    os << "): " << to_string(c);
    return os.str();
}

std::string sf_dump(const SymFunc& f) {
    std::ostringstream os;
    for (const auto& [l, c] : f.terms) {
        os << to_string(c) << " *";
        if (l.parts.empty()) {
            os << " 1";
        } else {
            for (size_t i = 0; i < l.parts.size();) {
                size_t j = i;
                while (j < l.parts.size() && l.parts[j] == l.parts[i]) ++j;
                os << " p" << l.parts[i];
                if (j - i > 1) os << '^' << (j - i);
                i = j;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace tg
