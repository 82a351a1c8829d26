#include "qdiv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division by a monic integer polynomial; the remainder must vanish.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    if (nn < dn) return {0};
    IntPoly quo(nn - dn + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
        std::int64_t c = num[k + dn];
        quo[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
    }
    for (int j = 0; j < dn; ++j) require(num[j] == 0, "cyclotomic division left a remainder");
    return quo;
}

std::mutex& poly_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, IntPoly>& poly_cache() {
    static std::map<int, IntPoly> c;
    return c;
}

IntPoly cyclotomic_poly_locked(int N) {
    auto& cache = poly_cache();
    if (auto it = cache.find(N); it != cache.end()) return it->second;
    IntPoly p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = divide_monic(p, cyclotomic_poly_locked(d));
    cache.emplace(N, p);
    return p;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(int N) {
    if (N < 1) throw InvalidArgument("cyclotomic_poly: N must be positive");
    std::lock_guard<std::mutex> lock(poly_mutex());
    return cyclotomic_poly_locked(N);
}

int euler_phi(int N) {
    int result = N;
    int n = N;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(int N) : order_(N), degree_(euler_phi(N)), modulus_(cyclotomic_poly(N)) {
    // reduce_[k] = coefficients of z^k, 0 <= k < N.
    reduce_.assign(N, std::vector<mpz_class>(degree_, 0));
    reduce_[0][0] = 1;
    for (int k = 1; k < N; ++k) {
        std::vector<mpz_class> shifted(degree_ + 1, 0);
        for (int j = 0; j < degree_; ++j) shifted[j + 1] = reduce_[k - 1][j];
        mpz_class top = shifted[degree_];
        for (int j = 0; j < degree_; ++j) shifted[j] -= top * modulus_[j];
        for (int j = 0; j < degree_; ++j) reduce_[k][j] = shifted[j];
    }
}

const CyclotomicField& CyclotomicField::get(int N) {
    if (N < 1) throw InvalidArgument("cyclotomic field order must be positive");
    static std::mutex m;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(N);
    if (it == registry.end())
        it = registry.emplace(N, std::unique_ptr<CyclotomicField>(new CyclotomicField(N))).first;
    return *it->second;
}

CycScalar CyclotomicField::zero() const { return CycScalar(*this, std::vector<mpq_class>(degree_, 0)); }

CycScalar CyclotomicField::one() const { return from_int(1); }

CycScalar CyclotomicField::from_int(long v) const { return from_rational(mpq_class(v)); }

CycScalar CyclotomicField::from_rational(const mpq_class& v) const {
    std::vector<mpq_class> c(degree_, 0);
    c[0] = v;
    return CycScalar(*this, std::move(c));
}

CycScalar CyclotomicField::zeta_power(long k) const {
    long r = k % order_;
    if (r < 0) r += order_;
    std::vector<mpq_class> c(degree_);
    for (int j = 0; j < degree_; ++j) c[j] = reduce_[r][j];
    return CycScalar(*this, std::move(c));
}

// ---------------------------------------------------------------------------

CycScalar::CycScalar(const CyclotomicField& f, std::vector<mpq_class> coeffs) : field_(&f), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != f.degree())
        throw LengthMismatch("cyclotomic scalar needs exactly phi(N) coefficients");
    for (auto& x : c_) x.canonicalize();  // mpq_class(a, b) does not reduce
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (!field_) return false;
    if (c_[0] != 1) return false;
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

void CycScalar::adopt(const CycScalar& o) {
    if (!o.field_) return;
    if (!field_) {
        field_ = o.field_;
        c_.assign(field_->degree(), 0);
    } else if (field_ != o.field_) {
        throw InvalidArgument("mixing scalars from different cyclotomic fields");
    }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    adopt(o);
    if (!o.field_) return *this;
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    adopt(o);
    if (!o.field_) return *this;
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    adopt(o);
    if (!field_) return *this;
    if (!o.field_) {
        for (auto& x : c_) x = 0;
        return *this;
    }
    const int d = field_->degree();
    const int N = field_->order();
    const auto& red = field_->reduction_table();
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    std::vector<mpq_class> out(d, 0);
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        if (k < d) {
            out[k] += prod[k];
            continue;
        }
        const auto& row = red[k % N];
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) out[j] += prod[k] * row[j];
    }
    c_ = std::move(out);
    return *this;
}

void CycScalar::add_product(const CycScalar& a, const CycScalar& b) {
    if (a.is_zero() || b.is_zero()) {
        adopt(a);
        adopt(b);
        return;
    }
    *this += a * b;
}

CycScalar CycScalar::inverse() const {
    if (!field_ || is_zero()) throw DivisionByZero();
    const int d = field_->degree();
    // Column j of the multiplication matrix is this * z^j; solve M x = e_0.
    std::vector<std::vector<mpq_class>> aug(d, std::vector<mpq_class>(d + 1, 0));
    for (int j = 0; j < d; ++j) {
        CycScalar col = *this * field_->zeta_power(j);
        for (int i = 0; i < d; ++i) aug[i][j] = col.c_[i];
    }
    aug[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        while (piv < d && aug[piv][col] == 0) ++piv;
        require(piv < d, "multiplication by a nonzero cyclotomic scalar is singular");
        std::swap(aug[piv], aug[col]);
        mpq_class inv = 1 / aug[col][col];
        for (int k = col; k <= d; ++k) aug[col][k] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col];
            for (int k = col; k <= d; ++k) aug[r][k] -= f * aug[col][k];
        }
    }
    std::vector<mpq_class> x(d);
    for (int i = 0; i < d; ++i) x[i] = aug[i][d];
    return CycScalar(*field_, std::move(x));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_) return false;
    if (!a.field_) return b.is_zero();
    if (!b.field_) return a.is_zero();
    return a.c_ == b.c_;
}

bool canonical_less(const CycScalar& a, const CycScalar& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class x = j < a.c_.size() ? a.c_[j] : mpq_class(0);
        mpq_class y = j < b.c_.size() ? b.c_[j] : mpq_class(0);
        if (x != y) return x < y;
    }
    return false;
}

std::string CycScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const mpq_class& x = c_[j];
        if (x == 0) continue;
        mpq_class mag = abs(x);
        if (first) {
            if (x < 0) os << '-';
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'z';
        if (j > 1) os << '^' << j;
    }
    if (first) return "0";
    return os.str();
}

std::complex<double> CycScalar::to_complex() const {
    if (!field_) return {0.0, 0.0};
    const double theta = 2.0 * std::numbers::pi / field_->order();
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        acc += c_[j].get_d() * std::polar(1.0, theta * static_cast<double>(j));
    return acc;
}

// ---------------------------------------------------------------------------

RootSpec::RootSpec(int ell, RootOrder order) : ell_(ell), order_(order), field_(nullptr) {
    if (ell < 3) throw InvalidArgument("ell must be at least 3");
    if (order == RootOrder::Odd && ell % 2 == 0)
        throw InvalidArgument("odd root order requires odd ell");
    field_ = &CyclotomicField::get(this->order());
}

std::string RootSpec::describe() const {
    std::ostringstream os;
    os << "ell=" << ell_ << " root=" << (order_ == RootOrder::Odd ? "odd" : "even") << " N=" << order();
    return os.str();
}

}  // namespace qdiv
