#pragma once

// q-integers and Gaussian binomials specialized at a root of unity, plus the
// Gaussian-polynomial dimension counts.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qdiv/cyclotomic.hpp"

namespace qdiv {

/// [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0 and [-n] = -[n].
CycScalar q_int(long n, const RootSpec& spec);

/// Least l >= 1 with [l] = 0.
int char_of_q(const RootSpec& spec);

/// Product formula over Z[v, v^-1], specialized at v = q.
CycScalar q_binomial(long m, long r, const RootSpec& spec);

/// Same value through the two-term recursion (memoized per call).
CycScalar q_binomial_recursive(long m, long r, const RootSpec& spec);

/// Coefficients of G(m, r; t) = prod_{i=1..r} (1 - t^(m-i+1)) / (1 - t^i), for 0 <= r <= m.
/// The Gaussian binomial is v^(-r(m-r)) G(m, r; v^2).
std::vector<mpz_class> gaussian_poly(long m, long r);

/// [m0 r0] * C(m1, r1), times the sign (-1)^((m1+1) r1 l + m0 r1 - r0 m1) for even roots,
/// where m = m1 l + m0 and r = r1 l + r0 with 0 <= m0, r0 < l.
CycScalar lusztig_factor(long m, long r, const RootSpec& spec);

/// Ordinary binomial; zero unless 0 <= b <= a.
mpz_class binomial(long a, long b);

/// Coefficients of (1 + t + ... + t^(b-1))^n, degrees 0..n(b-1).
std::vector<long> gaussian_coefficients(int n, int b);

long dim_by_polynomial(int n, int b, long s);
long dim_by_alternating_sum(int n, int b, long s);
/// Common value of the two strategies; throws InvariantViolation if they differ.
long dim_by_gaussian(int n, int b, long s);

}  // namespace qdiv
