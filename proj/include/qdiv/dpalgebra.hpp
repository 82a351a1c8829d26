#pragma once

// The quantum divided power algebra: monomials x^(a) indexed by multi-indices,
// the twisted multiplication, the automorphisms sigma_i and q-derivatives.
// Axes are 1-based in the public interface.

#include <map>
#include <string>
#include <vector>

#include "qdiv/cyclotomic.hpp"

namespace qdiv {

using MultiIndex = std::vector<int>;

int weight(const MultiIndex& a);
MultiIndex unit_index(int n, int i);  // eps_i, 1-based
std::string to_string(const MultiIndex& a);

/// m = 0: the whole algebra; m >= 1: every exponent at most m*l - 1.
struct Truncation {
    int n = 2;
    int m = 1;

    bool truncated() const { return m > 0; }
    int cap(int ell) const { return m * ell - 1; }
    long top_degree(int ell) const { return static_cast<long>(n) * cap(ell); }
    bool admits(const MultiIndex& a, int ell) const;
};

/// Finite linear combination over a key type, zero coefficients never stored.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, CycScalar>;

    void add(const Key& k, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add(const LinComb& o, const CycScalar& c) {
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }
    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, v] : o.terms_) add(k, v);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, v] : o.terms_) add(k, -v);
        return *this;
    }
    LinComb scaled(const CycScalar& c) const {
        LinComb r;
        r.add(*this, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    CycScalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? CycScalar() : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end(); ++i, ++j)
            if (i->first != j->first || i->second != j->second) return false;
        return true;
    }

private:
    Map terms_;
};

using ModVector = LinComb<MultiIndex>;

ModVector monomial(const MultiIndex& a, const RootSpec& spec);

/// sum over j < i of a_i b_j.
long star(const MultiIndex& a, const MultiIndex& b);
CycScalar theta(const MultiIndex& a, const MultiIndex& b, const RootSpec& spec);

/// x^(a) x^(b) = q^(a*b) [a+b, a] x^(a+b); zero past the truncation cap.
ModVector multiply(const MultiIndex& a, const MultiIndex& b, const RootSpec& spec, const Truncation& trunc);
ModVector multiply(const ModVector& u, const ModVector& v, const RootSpec& spec, const Truncation& trunc);

ModVector sigma_apply(int i, const ModVector& v, const RootSpec& spec, int n);
ModVector partial_apply(int i, const ModVector& v, const RootSpec& spec, int n);

/// All a with |a| = s inside the truncation, in ascending lexicographic order.
std::vector<MultiIndex> component_basis(long s, const Truncation& trunc, const RootSpec& spec);

/// Every n-tuple with entries in [0, cap] summing to s, ascending lexicographic.
std::vector<MultiIndex> bounded_compositions(int n, long s, int cap);

}  // namespace qdiv
