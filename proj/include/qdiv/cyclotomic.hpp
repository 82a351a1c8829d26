#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z a primitive N-th root of unity.
//
// Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) with GMP
// rationals, always reduced modulo the N-th cyclotomic polynomial, so
// equality is coefficient equality.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdiv {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_poly(int N);

int euler_phi(int N);

class CycScalar;

/// Per-order reduction data. Instances are interned and live for the whole
/// process, so raw pointers to them are stable.
class CyclotomicField {
public:
    static const CyclotomicField& get(int N);

    int order() const { return order_; }
    int degree() const { return degree_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_int(long v) const;
    CycScalar from_rational(const mpq_class& v) const;
    /// z^k for any integer k.
    CycScalar zeta_power(long k) const;

    // Reduced coefficients of z^k for 0 <= k < N.
    const std::vector<std::vector<mpz_class>>& reduction_table() const { return reduce_; }

private:
    explicit CyclotomicField(int N);

    int order_;
    int degree_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::vector<mpz_class>> reduce_;
};

class CycScalar {
public:
    /// The zero of no particular field; adopts the field of whatever it meets.
    CycScalar() = default;
    CycScalar(const CyclotomicField& f, std::vector<mpq_class> coeffs);

    const CyclotomicField* field() const { return field_; }
    /// Power-basis coefficients, length phi(N) (empty for the field-less zero).
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    CycScalar operator-() const;

    /// Multiplicative inverse; throws DivisionByZero on zero.
    CycScalar inverse() const;
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    /// this += a*b without a temporary when possible.
    void add_product(const CycScalar& a, const CycScalar& b);

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Canonical rendering, ascending powers: "1/2 - 1/2*z", "3 - z^2", "0".
    std::string to_string() const;
    /// Numerical value at z = exp(2 pi i / N).
    std::complex<double> to_complex() const;

    /// Total order on canonical forms, for use as a map key.
    friend bool canonical_less(const CycScalar& a, const CycScalar& b);

private:
    void adopt(const CycScalar& o);

    const CyclotomicField* field_ = nullptr;
    std::vector<mpq_class> c_;
};

enum class RootOrder { Odd, Even };

/// q as a primitive N-th root of unity with char(q) = ell:
/// Odd means N = ell (ell odd), Even means N = 2*ell.
class RootSpec {
public:
    RootSpec(int ell, RootOrder order);

    int ell() const { return ell_; }
    RootOrder root_order() const { return order_; }
    /// Multiplicative order N of q.
    int order() const { return order_ == RootOrder::Odd ? ell_ : 2 * ell_; }
    const CyclotomicField& field() const { return *field_; }

    CycScalar q_power(long k) const { return field_->zeta_power(k); }
    CycScalar zero() const { return field_->zero(); }
    CycScalar one() const { return field_->one(); }
    CycScalar integer(long v) const { return field_->from_int(v); }

    std::string describe() const;

    friend bool operator==(const RootSpec& a, const RootSpec& b) {
        return a.ell_ == b.ell_ && a.order_ == b.order_;
    }

private:
    int ell_;
    RootOrder order_;
    const CyclotomicField* field_;
};

}  // namespace qdiv
