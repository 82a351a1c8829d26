#pragma once

// The u_q(sl_n) action on homogeneous components of the divided power algebra.

#include <string>
#include <vector>

#include "qdiv/dpalgebra.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/module.hpp"

namespace qdiv {

struct Generator {
    enum class Kind { E, F, K, Kinv };
    Kind kind;
    int index;  // 1 <= index <= n-1

    std::string name() const;
    friend bool operator==(const Generator& a, const Generator& b) { return a.kind == b.kind && a.index == b.index; }
};

/// E_1, F_1, K_1, K_1^-1, E_2, ... in that order.  This order is also the
/// generator order of every module built from a component.
std::vector<Generator> all_generators(int n);
Grade generator_shift(const Generator& g, int n);

/// Per-term action on monomials.  In truncated mode a nonzero coefficient on a
/// monomial past the cap raises InvariantViolation.
ModVector apply_generator(const Generator& g, const ModVector& v, const RootSpec& spec, const Truncation& trunc);

class ComponentSpace {
public:
    ComponentSpace(const Truncation& trunc, long s, const RootSpec& spec);

    const Truncation& trunc() const { return trunc_; }
    long degree() const { return s_; }
    const RootSpec& spec() const { return spec_; }
    int n() const { return trunc_.n; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MultiIndex>& basis() const { return basis_; }
    /// Position of a in the basis, or -1.
    int index_of(const MultiIndex& a) const;

    const Matrix& matrix(const Generator& g) const;
    /// Graded by the multi-index itself; coordinates coincide with basis order.
    const GradedModule& module() const { return module_; }

    Vec coordinates(const ModVector& v) const;
    ModVector vector(const Vec& coords) const;
    /// Span of the given basis monomials as a graded subspace.
    GradedSubspace monomial_span(const std::vector<MultiIndex>& as) const;
    /// Basis monomials occurring in a graded subspace of monomials.
    std::vector<MultiIndex> monomials_of(const GradedSubspace& s) const;

private:
    Truncation trunc_;
    long s_;
    RootSpec spec_;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, int> index_;
    std::vector<Matrix> mats_;
    GradedModule module_;
};

Matrix generator_matrix(const Generator& g, const ComponentSpace& comp);

/// Smallest generator-closed subspace containing the seeds, canonical rows in
/// basis coordinates.
RowEchelon submodule_closure(const std::vector<ModVector>& seeds, const ComponentSpace& comp);
/// Same for monomial seeds, kept graded.
GradedSubspace monomial_closure(const std::vector<MultiIndex>& seeds, const ComponentSpace& comp);

GradedSubspace socle_oracle(const ComponentSpace& comp, ExecPolicy policy = ExecPolicy::Parallel);
GradedSubspace radical_oracle(const ComponentSpace& comp, ExecPolicy policy = ExecPolicy::Parallel);

struct RelationReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
/// Defining relations of the restricted quantum group as matrices on comp.
RelationReport check_relations(const ComponentSpace& comp);

}  // namespace qdiv
