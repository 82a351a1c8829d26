#include "qdiv/qarith.hpp"

#include <map>

#include "qdiv/errors.hpp"

namespace qdiv {

CycScalar q_int(long n, const RootSpec& spec) {
    if (n < 0) return -q_int(-n, spec);
    CycScalar acc = spec.zero();
    for (long k = 0; k < n; ++k) acc += spec.q_power(n - 1 - 2 * k);
    return acc;
}

int char_of_q(const RootSpec& spec) {
    for (int l = 1; l <= spec.order(); ++l)
        if (q_int(l, spec).is_zero()) return l;
    throw InvariantViolation("no q-integer vanishes up to the order of q");
}

std::vector<mpz_class> gaussian_poly(long m, long r) {
    if (r < 0 || r > m) return {0};
    // numerator prod (1 - t^(m-i+1)), then divide by each (1 - t^i) exactly
    std::vector<mpz_class> p{1};
    for (long i = 1; i <= r; ++i) {
        long e = m - i + 1;
        std::vector<mpz_class> next(p.size() + e, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k] += p[k];
            next[k + e] -= p[k];
        }
        p = std::move(next);
    }
    for (long i = 1; i <= r; ++i) {
        // p = (1 - t^i) * q  =>  q_k = p_k + q_{k-i}
        std::size_t qlen = p.size() - i;
        std::vector<mpz_class> quo(qlen, 0);
        for (std::size_t k = 0; k < qlen; ++k) {
            quo[k] = p[k];
            if (k >= static_cast<std::size_t>(i)) quo[k] += quo[k - i];
        }
        std::vector<mpz_class> back(p.size(), 0);
        for (std::size_t k = 0; k < qlen; ++k) {
            back[k] += quo[k];
            back[k + i] -= quo[k];
        }
        require(back == p, "Gaussian polynomial division is not exact");
        p = std::move(quo);
    }
    return p;
}

CycScalar q_binomial(long m, long r, const RootSpec& spec) {
    if (r < 0) return spec.zero();
    if (m < 0) {
        CycScalar v = q_binomial(-m + r - 1, r, spec);
        return (r % 2) ? -v : v;
    }
    if (r > m) return spec.zero();
    auto g = gaussian_poly(m, r);
    CycScalar acc = spec.zero();
    const long shift = -r * (m - r);
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        acc.add_product(spec.field().from_rational(mpq_class(g[k])), spec.q_power(shift + 2 * static_cast<long>(k)));
    }
    return acc;
}

namespace {

CycScalar rec(long n, long r, const RootSpec& spec, std::map<std::pair<long, long>, CycScalar>& memo) {
    if (r < 0 || r > n) return spec.zero();
    if (r == 0 || r == n) return spec.one();
    auto key = std::make_pair(n, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    CycScalar v = spec.q_power(r - n) * rec(n - 1, r - 1, spec, memo) + spec.q_power(r) * rec(n - 1, r, spec, memo);
    memo.emplace(key, v);
    return v;
}

}  // namespace

CycScalar q_binomial_recursive(long m, long r, const RootSpec& spec) {
    if (r < 0) return spec.zero();
    if (m < 0) {
        CycScalar v = q_binomial_recursive(-m + r - 1, r, spec);
        return (r % 2) ? -v : v;
    }
    std::map<std::pair<long, long>, CycScalar> memo;
    return rec(m, r, spec, memo);
}

mpz_class binomial(long a, long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

CycScalar lusztig_factor(long m, long r, const RootSpec& spec) {
    if (r < 0 || r > m) throw InvalidArgument("lusztig_factor requires 0 <= r <= m");
    const long l = spec.ell();
    const long m0 = m % l, m1 = m / l, r0 = r % l, r1 = r / l;
    CycScalar v = q_binomial(m0, r0, spec) * spec.field().from_rational(mpq_class(binomial(m1, r1)));
    if (spec.root_order() == RootOrder::Even) {
        long e = (m1 + 1) * r1 * l + m0 * r1 - r0 * m1;
        if (e % 2 != 0) v = -v;
    }
    return v;
}

std::vector<long> gaussian_coefficients(int n, int b) {
    if (n < 1 || b < 1) throw InvalidArgument("gaussian_coefficients requires n, b >= 1");
    std::vector<long> p{1};
    for (int f = 0; f < n; ++f) {
        std::vector<long> next(p.size() + b - 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k)
            for (int j = 0; j < b; ++j) next[k + j] += p[k];
        p = std::move(next);
    }
    return p;
}

long dim_by_polynomial(int n, int b, long s) {
    auto p = gaussian_coefficients(n, b);
    if (s < 0 || s >= static_cast<long>(p.size())) return 0;
    return p[s];
}

long dim_by_alternating_sum(int n, int b, long s) {
    if (n < 1 || b < 1) throw InvalidArgument("dim_by_alternating_sum requires n, b >= 1");
    if (s < 0) return 0;
    mpz_class acc = 0;
    for (long i = 0; i <= n && i * b <= s; ++i) {
        mpz_class term = binomial(n, i) * binomial(n + s - i * b - 1, n - 1);
        if (i % 2) acc -= term;
        else acc += term;
    }
    return acc.get_si();
}

long dim_by_gaussian(int n, int b, long s) {
    long a = dim_by_polynomial(n, b, s);
    long c = dim_by_alternating_sum(n, b, s);
    require(a == c, "Gaussian dimension strategies disagree");
    return a;
}

}  // namespace qdiv
