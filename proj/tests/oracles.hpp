#pragma once

// Independent reference computations for the tests: floating point evaluation
// at exp(2 pi i / N) and plain combinatorial counting.  Nothing here calls the
// library's arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx root(int N, long k) {
    const double pi = std::acos(-1.0);
    return std::polar(1.0, 2 * pi * static_cast<double>(k) / N);
}

// [n] = (q^n - q^-n) / (q - q^-1)
inline cplx qint(int N, long n) { return (root(N, n) - root(N, -n)) / (root(N, 1) - root(N, -1)); }

// number of partitions of k into at most r parts, each at most c
inline std::vector<std::int64_t> box_partitions(int r, int c) {
    // dp over the Gaussian recursion G(a,b) = G(a-1,b-1) + t^b G(a-1,b) on a = r+c, b = r
    const int top = r * c;
    std::vector<std::vector<std::vector<std::int64_t>>> G(r + c + 1);
    for (int a = 0; a <= r + c; ++a) {
        G[a].resize(a + 1);
        for (int b = 0; b <= a; ++b) {
            G[a][b].assign(top + 1 + a * a, 0);
            if (b == 0 || b == a) {
                G[a][b][0] = 1;
                continue;
            }
            for (std::size_t k = 0; k < G[a - 1][b - 1].size() && k < G[a][b].size(); ++k) G[a][b][k] += G[a - 1][b - 1][k];
            for (std::size_t k = 0; k + b < G[a][b].size() && k < G[a - 1][b].size(); ++k) G[a][b][k + b] += G[a - 1][b][k];
        }
    }
    std::vector<std::int64_t> out(top + 1);
    for (int k = 0; k <= top; ++k) out[k] = G[r + c][r][k];
    return out;
}

// Gaussian binomial at q = exp(2 pi i / N): q^{-r(m-r)} sum_k p_k q^{2k}
inline cplx qbinom(int N, long m, long r) {
    if (r < 0 || r > m) return 0.0;
    auto p = box_partitions(static_cast<int>(r), static_cast<int>(m - r));
    cplx s = 0;
    for (std::size_t k = 0; k < p.size(); ++k) s += static_cast<double>(p[k]) * root(N, 2 * static_cast<long>(k));
    return s * root(N, -r * (m - r));
}

inline bool close(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) < tol * (1 + std::abs(b)); }

// number of tuples in [0, cap]^n with sum s, by odometer
inline long count_tuples(int n, long s, int cap) {
    std::vector<int> a(n, 0);
    long count = 0;
    while (true) {
        long sum = 0;
        for (int x : a) sum += x;
        if (sum == s) ++count;
        int k = 0;
        while (k < n && a[k] == cap) a[k++] = 0;
        if (k == n) break;
        ++a[k];
    }
    return count;
}

inline long choose(long a, long b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace oracle
