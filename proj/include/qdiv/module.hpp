#pragma once

// Finite-dimensional modules given by generator matrices, graded by a lattice
// of weights so that each generator shifts weights by a fixed amount.  All
// structure that is canonically attached to such a module (image algebra,
// Jacobson radical, commutant, socle, radical) is graded too, so everything is
// computed weight by weight.  A module with one weight is the ungraded case.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdiv/linalg.hpp"
#include "qdiv/parallel.hpp"

namespace qdiv {

using Grade = std::vector<int>;

Grade grade_add(const Grade& a, const Grade& b);
Grade grade_sub(const Grade& a, const Grade& b);
Grade grade_neg(const Grade& a);

class GradedModule {
public:
    GradedModule() = default;

    /// coord_grade[i] is the weight of coordinate i; gens are dense matrices in
    /// those coordinates, shifts[g] the weight shift of generator g.  Throws
    /// InvariantViolation if some matrix is not homogeneous of its shift.
    static GradedModule build(const CyclotomicField& field, const std::vector<Grade>& coord_grade,
                              const std::vector<Grade>& shifts, const std::vector<Matrix>& gens);
    /// One weight, every shift zero.
    static GradedModule ungraded(const CyclotomicField& field, int dim, const std::vector<Matrix>& gens);

    const CyclotomicField& field() const { return *field_; }
    int dim() const { return total_; }
    int num_weights() const { return static_cast<int>(weights_.size()); }
    int num_generators() const { return static_cast<int>(shifts_.size()); }
    const Grade& weight(int w) const { return weights_[w]; }
    int weight_dim(int w) const { return dims_[w]; }
    int offset(int w) const { return offsets_[w]; }
    const Grade& shift(int g) const { return shifts_[g]; }
    /// Index of a weight, or -1.
    int find(const Grade& w) const;
    /// Weight index reached from w by generator g, or -1 if that weight is absent.
    int target(int g, int w) const { return target_[g][w]; }
    /// Block of generator g from weight w to target(g, w).
    const Matrix& block(int g, int w) const { return blocks_[g][w]; }
    /// Module coordinate -> coordinate in the order given to build().
    const std::vector<int>& original_index() const { return orig_; }

    Matrix dense_generator(int g) const;

private:
    const CyclotomicField* field_ = nullptr;
    std::vector<Grade> weights_;
    std::map<Grade, int> index_;
    std::vector<int> dims_, offsets_;
    int total_ = 0;
    std::vector<Grade> shifts_;
    std::vector<std::vector<int>> target_;
    std::vector<std::vector<Matrix>> blocks_;
    std::vector<int> orig_;

    friend GradedModule make_module(const CyclotomicField&, std::vector<Grade>, std::vector<int>, std::vector<Grade>,
                                    std::vector<std::vector<Matrix>>);
};

/// A subspace that is the sum of its weight pieces; parts[w] lives in weight w.
struct GradedSubspace {
    std::vector<RowEchelon> parts;

    static GradedSubspace zero(const GradedModule& m);
    static GradedSubspace whole(const GradedModule& m);

    int dim() const;
    bool contains(const GradedSubspace& o) const;
    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b);
    friend bool operator!=(const GradedSubspace& a, const GradedSubspace& b) { return !(a == b); }
    /// Canonical rows in module coordinates.
    std::vector<Vec> dense_rows(const GradedModule& m) const;
};

GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b);

/// Homogeneous linear map M -> M of degree deg: blocks[w] maps weight w to
/// weight w + deg (0x0 when that weight is absent).
struct GradedElement {
    Grade deg;
    std::vector<Matrix> blocks;
};

Matrix dense(const GradedModule& m, const GradedElement& x);
GradedElement compose(const GradedModule& m, const GradedElement& x, const GradedElement& y);  // x after y
Vec flatten(const GradedElement& x);

/// A graded space of homogeneous maps, basis listed per degree.
struct GradedAlgebra {
    std::map<Grade, std::vector<GradedElement>> basis;
    int dim() const;
};

// --- submodules and subquotients -------------------------------------------

bool is_closed(const GradedModule& m, const GradedSubspace& s);
/// Smallest generator-closed subspace containing the seeds (each seed is a
/// vector in one weight space).
GradedSubspace closure(const GradedModule& m, const std::vector<std::pair<int, Vec>>& seeds);
GradedSubspace closure(const GradedModule& m, const GradedSubspace& seed);
/// Closure of arbitrary (possibly inhomogeneous) vectors in module coordinates.
RowEchelon dense_closure(const GradedModule& m, const std::vector<Vec>& seeds);

/// M / S with coordinates the non-pivot columns of each S piece.
struct Quotient {
    GradedModule module;
    GradedSubspace kernel;                      // S itself
    std::vector<int> parent_weight;             // quotient weight -> weight of M
    std::vector<std::vector<int>> complement;   // per quotient weight, coordinates in M
    /// Preimage in M of a subspace of M / S.
    GradedSubspace lift(const GradedModule& parent, const GradedSubspace& sub) const;
};
Quotient quotient(const GradedModule& m, const GradedSubspace& s);

/// S as a module in its own right, coordinates = echelon rows of S.
struct Restriction {
    GradedModule module;
    std::vector<int> parent_weight;
    std::vector<std::vector<Vec>> rows;  // per sub weight, the basis used
    GradedSubspace lift(const GradedModule& parent, const GradedSubspace& sub) const;
    /// A subspace of S given in M's coordinates, rewritten in S's coordinates.
    GradedSubspace pull(const GradedSubspace& parent_sub) const;
};
/// Throws NotClosed if S is not generator-closed.
Restriction restrict_to(const GradedModule& m, const GradedSubspace& s);

// --- algebras attached to a module -------------------------------------------

/// The unital algebra generated by the generator matrices.
GradedAlgebra image_algebra(const GradedModule& m);
/// Kernel of the trace form of an algebra of homogeneous maps.
GradedAlgebra trace_radical(const GradedModule& m, const GradedAlgebra& a, ExecPolicy policy = ExecPolicy::Parallel);
/// Gram matrix tr(x_a y_b) between the degree d and degree -d basis.
Matrix trace_gram(const GradedModule& m, const std::vector<GradedElement>& xs, const std::vector<GradedElement>& ys);
/// All homogeneous maps commuting with every generator.
GradedAlgebra commutant(const GradedModule& m, ExecPolicy policy = ExecPolicy::Parallel);

GradedSubspace socle(const GradedModule& m, const GradedAlgebra& jac);
GradedSubspace radical(const GradedModule& m, const GradedAlgebra& jac);
GradedSubspace socle(const GradedModule& m, ExecPolicy policy = ExecPolicy::Parallel);
GradedSubspace radical(const GradedModule& m, ExecPolicy policy = ExecPolicy::Parallel);

/// 0 = Soc^0 < Soc^1 < ... = M through quotients.
std::vector<GradedSubspace> socle_series(const GradedModule& m, ExecPolicy policy = ExecPolicy::Parallel);
/// M = Rad^0 > Rad^1 > ... = 0 through restrictions.
std::vector<GradedSubspace> radical_series(const GradedModule& m, ExecPolicy policy = ExecPolicy::Parallel);

// --- certificates -------------------------------------------------------------

enum class SimplicityVerdict { Simple, NotSimple, Inconclusive };
enum class IndecomposabilityVerdict { Indecomposable, Decomposable, Inconclusive };
std::string to_string(SimplicityVerdict v);
std::string to_string(IndecomposabilityVerdict v);

struct SimplicityCertificate {
    SimplicityVerdict verdict = SimplicityVerdict::Inconclusive;
    int radical_dim = -1;
    int commutant_dim = -1;
    std::optional<GradedSubspace> witness;  // proper nonzero submodule, for NotSimple
    std::string reason;
};
/// Throws NotClosed if s is not generator-closed.
SimplicityCertificate simplicity_certificate(const GradedModule& m, const GradedSubspace& s,
                                             ExecPolicy policy = ExecPolicy::Parallel);

struct IndecomposabilityCertificate {
    IndecomposabilityVerdict verdict = IndecomposabilityVerdict::Inconclusive;
    int commutant_dim = 0;
    int commutant_radical_dim = 0;
    std::optional<Matrix> idempotent;  // for Decomposable, in module coordinates
};
IndecomposabilityCertificate indecomposability_certificate(const GradedModule& m,
                                                           ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace qdiv
