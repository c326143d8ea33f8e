#include "toricc/symprod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "toricc/errors.hpp"

namespace toricc {

std::vector<CycleType> cycle_types(int n) {
    if (n < 0) throw precondition_error("negative symmetric-product index");
    // Partitions of n, emitted as multiplicity vectors in the lexicographic
    // order of their non-increasing part lists.
    std::vector<CycleType> out;
    std::vector<int> parts;
    auto emit = [&]() {
        CycleType t;
        t.mult.assign(n == 0 ? 0 : n, 0);
        for (int p : parts) ++t.mult[p - 1];
        out.push_back(std::move(t));
    };
    // Recursive descent: parts non-increasing.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

Int permutation_count(const CycleType& t) {
    long long n = 0;
    for (size_t r = 0; r < t.mult.size(); ++r) n += static_cast<long long>(r + 1) * t.mult[r];
    Int numer = 1;
    for (long long i = 2; i <= n; ++i) numer *= i;
    Int denom = 1;
    for (size_t r = 0; r < t.mult.size(); ++r) {
        for (long long i = 0; i < t.mult[r]; ++i) denom *= static_cast<long long>(r + 1);
        for (long long i = 2; i <= t.mult[r]; ++i) denom *= i;
    }
    return numer / denom;
}

EPolynomial adams(const EPolynomial& e, int r) {
    if (r < 1) throw precondition_error("Adams substitution needs r >= 1");
    return e.scale_exponents(r);
}

std::vector<EPolynomial> symprod_e_series(const EPolynomial& e, int n_max) {
    if (n_max < 0) throw precondition_error("negative series order");
    // exp(S) with S = sum_{r>=1} adams(e,r) t^r / r, truncated at t^n_max.
    std::vector<EPolynomial> s(n_max + 1);
    for (int r = 1; r <= n_max; ++r) s[r] = adams(e, r).scale(Rat(1, r));

    std::vector<EPolynomial> result(n_max + 1);
    result[0] = EPolynomial(Rat(1));
    std::vector<EPolynomial> power(n_max + 1); // S^m / m!, accumulated
    power[0] = EPolynomial(Rat(1));
    for (int m = 1; m <= n_max; ++m) {
        std::vector<EPolynomial> next(n_max + 1);
        for (int i = m - 1; i <= n_max; ++i) {
            if (power[i].is_zero()) continue;
            for (int r = 1; i + r <= n_max; ++r)
                next[i + r] = next[i + r] + power[i] * s[r];
        }
        for (int i = 0; i <= n_max; ++i) power[i] = next[i].scale(Rat(1, m));
        for (int i = 0; i <= n_max; ++i) result[i] = result[i] + power[i];
    }
    return result;
}

// (1 - w t)^(-e) truncated: sum_m binom(e + m - 1, m) w^m t^m for e >= 0,
// and the finite binomial expansion for e < 0.
static std::vector<ZPolynomial> binomial_factor(const ZPolynomial& w, long long e, int n_max) {
    std::vector<ZPolynomial> f(n_max + 1);
    f[0] = ZPolynomial(Rat(1));
    ZPolynomial wm(Rat(1));
    Rat binom = 1;
    for (int m = 1; m <= n_max; ++m) {
        wm = wm * w;
        if (e >= 0) {
            // binom(e+m-1, m)
            binom = binom * Rat(e + m - 1, m);
        } else {
            // (1-wt)^|e|: coefficient (-1)^m binom(|e|, m), zero past |e|.
            long long a = -e;
            if (m > a) {
                binom = 0;
            } else {
                binom = binom * Rat(-(a - m + 1), m);
            }
        }
        if (binom != 0) f[m] = wm.scale(binom);
    }
    return f;
}

std::vector<ZPolynomial> symprod_product_form(const HodgeTable& t, int n_max) {
    if (n_max < 0) throw precondition_error("negative series order");
    std::vector<ZPolynomial> acc(n_max + 1);
    acc[0] = ZPolynomial(Rat(1));
    for (const auto& [key, mult] : t.entries()) {
        auto [p, q, k] = key;
        ZPolynomial w = ZPolynomial::monomial({p, q, k}, Rat(1));
        long long exponent = (k % 2 == 0) ? mult : -mult; // -(-1)^k h, negated
        std::vector<ZPolynomial> f = binomial_factor(w, exponent, n_max);
        std::vector<ZPolynomial> next(n_max + 1);
        for (int i = 0; i <= n_max; ++i) {
            if (acc[i].is_zero()) continue;
            for (int j = 0; i + j <= n_max; ++j) {
                if (f[j].is_zero()) continue;
                next[i + j] = next[i + j] + acc[i] * f[j];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

struct BasisElem {
    int p, q, k;
};

// Koszul sign of applying sigma to the tensor factors with degrees deg:
// product over inverted pairs (i < j, sigma(i) > sigma(j)) of (-1)^(k_i k_j).
int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& deg) {
    int parity = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) parity += deg[i] * deg[j];
    return (parity % 2 == 0) ? 1 : -1;
}

} // namespace

HodgeTable signed_sym_power_oracle(const HodgeTable& t, int n) {
    if (t.total_dimension() > 6 || n > 5 || n < 0)
        throw precondition_error("oracle guard exceeded (total dimension <= 6, n <= 5)");

    std::vector<BasisElem> basis;
    for (const auto& [key, mult] : t.entries()) {
        auto [p, q, k] = key;
        for (long long i = 0; i < mult; ++i) basis.push_back({p, q, k});
    }
    const int m = static_cast<int>(basis.size());

    HodgeTable out;
    if (n == 0) {
        out.add(0, 0, 0, 1);
        return out;
    }
    if (m == 0) return out;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Enumerate orbit representatives (non-decreasing tuples) and symmetrize
    // each; the symmetrized vector survives iff no stabilizing permutation
    // acts by -1, and distinct orbits have disjoint support.
    std::vector<int> tuple(n, 0);
    for (;;) {
        std::map<std::vector<int>, long long> symmetrized;
        std::vector<int> deg(n);
        for (int i = 0; i < n; ++i) deg[i] = basis[tuple[i]].k;
        for (const auto& sg : perms) {
            std::vector<int> image(n);
            for (int i = 0; i < n; ++i) image[sg[i]] = tuple[i];
            symmetrized[image] += koszul_sign(sg, deg);
        }
        bool nonzero = false;
        for (const auto& [img, c] : symmetrized) nonzero = nonzero || c != 0;
        if (nonzero) {
            int P = 0, Q = 0, K = 0;
            for (int i = 0; i < n; ++i) {
                P += basis[tuple[i]].p;
                Q += basis[tuple[i]].q;
                K += basis[tuple[i]].k;
            }
            out.add(P, Q, K, 1);
        }
        // Next non-decreasing tuple.
        int i = n - 1;
        while (i >= 0 && tuple[i] == m - 1) --i;
        if (i < 0) break;
        int v = tuple[i] + 1;
        for (int j = i; j < n; ++j) tuple[j] = v;
    }
    return out;
}

EPolynomial average_over_cycle_types(const EPolynomial& e, int n) {
    if (n < 0) throw precondition_error("negative symmetric-product index");
    EPolynomial total;
    Int n_factorial = 1;
    for (int i = 2; i <= n; ++i) n_factorial *= i;
    for (const CycleType& t : cycle_types(n)) {
        EPolynomial trace(Rat(1));
        for (size_t r = 0; r < t.mult.size(); ++r) {
            if (t.mult[r] == 0) continue;
            trace = trace * adams(e, static_cast<int>(r + 1)).pow(static_cast<int>(t.mult[r]));
        }
        total = total + trace.scale(Rat(permutation_count(t)));
    }
    return total.scale(Rat(Int(1), n_factorial));
}

} // namespace toricc
