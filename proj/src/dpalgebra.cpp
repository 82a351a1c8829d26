#include "qdiv/dpalgebra.hpp"

#include <functional>
#include <sstream>

#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"

namespace qdiv {

int weight(const MultiIndex& a) {
    int w = 0;
    for (int x : a) w += x;
    return w;
}

MultiIndex unit_index(int n, int i) {
    if (i < 1 || i > n) throw AxisOutOfRange("axis " + std::to_string(i) + " outside 1.." + std::to_string(n));
    MultiIndex e(n, 0);
    e[i - 1] = 1;
    return e;
}

std::string to_string(const MultiIndex& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

bool Truncation::admits(const MultiIndex& a, int ell) const {
    for (int x : a) {
        if (x < 0) return false;
        if (truncated() && x > cap(ell)) return false;
    }
    return true;
}

ModVector monomial(const MultiIndex& a, const RootSpec& spec) {
    ModVector v;
    v.add(a, spec.one());
    return v;
}

long star(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw LengthMismatch("star: multi-indices of different length");
    long acc = 0;
    long prefix = 0;  // sum of b_j for j < i
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * prefix;
        prefix += b[i];
    }
    return acc;
}

CycScalar theta(const MultiIndex& a, const MultiIndex& b, const RootSpec& spec) {
    return spec.q_power(star(a, b) - star(b, a));
}

ModVector multiply(const MultiIndex& a, const MultiIndex& b, const RootSpec& spec, const Truncation& trunc) {
    if (a.size() != b.size()) throw LengthMismatch("multiply: multi-indices of different length");
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    ModVector out;
    if (!trunc.admits(c, spec.ell())) return out;
    CycScalar coeff = spec.q_power(star(a, b));
    for (std::size_t i = 0; i < a.size(); ++i) {
        coeff *= q_binomial(c[i], a[i], spec);
        if (coeff.is_zero()) return out;
    }
    out.add(c, coeff);
    return out;
}

ModVector multiply(const ModVector& u, const ModVector& v, const RootSpec& spec, const Truncation& trunc) {
    ModVector out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) out.add(multiply(a, b, spec, trunc), ca * cb);
    return out;
}

ModVector sigma_apply(int i, const ModVector& v, const RootSpec& spec, int n) {
    unit_index(n, i);
    ModVector out;
    for (const auto& [b, c] : v.terms()) out.add(b, c * spec.q_power(b.at(i - 1)));
    return out;
}

ModVector partial_apply(int i, const ModVector& v, const RootSpec& spec, int n) {
    MultiIndex e = unit_index(n, i);
    ModVector out;
    for (const auto& [b, c] : v.terms()) {
        if (b.at(i - 1) == 0) continue;
        MultiIndex t = b;
        t[i - 1] -= 1;
        out.add(t, c * spec.q_power(-star(e, b)));
    }
    return out;
}

std::vector<MultiIndex> bounded_compositions(int n, long s, int cap) {
    std::vector<MultiIndex> out;
    if (n < 1 || s < 0) return out;
    MultiIndex cur(n, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == n - 1) {
            if (left <= cap) {
                cur[pos] = static_cast<int>(left);
                out.push_back(cur);
            }
            return;
        }
        // room left for the remaining axes after this one
        long room = static_cast<long>(n - pos - 1) * cap;
        for (long x = std::max(0L, left - room); x <= std::min<long>(cap, left); ++x) {
            cur[pos] = static_cast<int>(x);
            rec(pos + 1, left - x);
        }
    };
    rec(0, s);
    return out;
}

std::vector<MultiIndex> component_basis(long s, const Truncation& trunc, const RootSpec& spec) {
    if (trunc.n < 1) throw InvalidArgument("rank must be positive");
    if (s < 0) throw DegreeOutOfRange("degree must be nonnegative");
    if (!trunc.truncated()) return bounded_compositions(trunc.n, s, static_cast<int>(s));
    if (s > trunc.top_degree(spec.ell()))
        throw DegreeOutOfRange("degree " + std::to_string(s) + " exceeds top degree " +
                               std::to_string(trunc.top_degree(spec.ell())));
    return bounded_compositions(trunc.n, s, trunc.cap(spec.ell()));
}

}  // namespace qdiv
