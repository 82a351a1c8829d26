#pragma once

// Energy degree, its extremal values on a component, the socle, the Loewy
// filtration by energy, and rigidity/reachability checks against the oracles.

#include <string>
#include <vector>

#include "qdiv/uqaction.hpp"

namespace qdiv {

struct EnergyProfile {
    std::vector<int> per_axis;  // floor(a_i / l)
    int total = 0;
    MultiIndex residue;         // a - l * per_axis
};

EnergyProfile edeg(const MultiIndex& a, const RootSpec& spec);
/// Largest energy degree among the terms; throws ZeroVector on 0.
int edeg_vector(const ModVector& v, const RootSpec& spec);

struct EBounds {
    long e0 = 0;
    long etop = 0;
    friend bool operator==(const EBounds& a, const EBounds& b) { return a.e0 == b.e0 && a.etop == b.etop; }
};

/// Min and max energy degree over the degree-s monomials, by feasibility of
/// the split s = l*E + r with 0 <= E <= n(m-1), 0 <= r <= n(l-1).  Needs m >= 2.
EBounds e_bounds(long s, const Truncation& trunc, const RootSpec& spec);
/// Same, by scanning the basis.
EBounds e_bounds_bruteforce(long s, const Truncation& trunc, const RootSpec& spec);

struct EnergyCaseCheck {
    int case_no = 0;  // 1..4
    bool ok = true;
    std::vector<std::string> notes;
};
/// The closed-form statements about E(s)_0 and E(s) for the range containing s,
/// checked against e_bounds.  Needs n >= 3, m >= 2.
EnergyCaseCheck check_energy_cases(long s, const Truncation& trunc, const RootSpec& spec);

/// Monomials of minimal energy degree.
std::vector<MultiIndex> socle_basis(long s, const Truncation& trunc, const RootSpec& spec);

/// (l-1, ..., l-1, h, 0, ..., 0) of weight si.
MultiIndex greedy_residue(int n, long si, int ell);
/// All kappa in [0, m-1]^n with |kappa| = e.
std::vector<MultiIndex> kappa_tuples(int n, long e, int m);

struct LayerInfo {
    int i = 0;
    long s_i = 0;
    long multiplicity = 0;        // #K_i from the polynomial coefficient
    long multiplicity_enum = 0;   // by listing kappa tuples
    long simple_dim = 0;          // dim of the degree s_i restricted component
    long layer_dim = 0;           // rank V_i - rank V_{i-1}
    bool closed = false;          // V_i generator-closed
    bool semisimple = false;      // radical of V_i / V_{i-1} is zero
    bool primitive_ok = false;    // e_j x^eta lies in V_{i-1}
    bool generators_ok = false;   // each x^eta generates a copy of dimension simple_dim mod V_{i-1}
    std::vector<MultiIndex> primitive;  // eta(kappa, i)
};

struct Link {
    int from_layer, to_layer;
    MultiIndex from, to;  // primitive vectors; to lies in the submodule generated by from
};

struct FiltrationReport {
    long s = 0;
    EBounds bounds;
    int total_dim = 0;
    std::vector<LayerInfo> layers;
    std::vector<MultiIndex> socle_generators;
    std::vector<Link> links;
    bool ok = false;
};

FiltrationReport loewy_filtration(long s, const Truncation& trunc, const RootSpec& spec,
                                  ExecPolicy policy = ExecPolicy::Parallel);
/// The energy subspaces V_0 < V_1 < ... as graded monomial spans.
std::vector<GradedSubspace> energy_filtration(const ComponentSpace& comp);

struct IdentityReport {
    long s = 0;
    long lhs_gaussian = 0;  // dim by polynomial/alternating sum with b = m l
    long lhs_literal = 0;   // alternating sum, inner limit floor((s - i) / l)
    long rhs = 0;           // sum of #K_i * dim A^(s_i)(n,1)
    long rhs_literal = 0;   // both factors as alternating sums
    bool kappa_counts_ok = false;
    bool ok = false;
};
IdentityReport identity_check(long s, const Truncation& trunc, const RootSpec& spec);

struct RigidityReport {
    long s = 0;
    int loewy_length = 0;        // expected etop - e0 + 1
    std::vector<int> socle_dims;    // Soc^0 .. Soc^r
    std::vector<int> radical_dims;  // Rad^0 .. Rad^r
    std::vector<int> energy_dims;   // V_0 .. V_{r-1}
    bool socle_matches = false;
    bool radical_matches = false;
    bool ok = false;
};
RigidityReport rigidity_check(long s, const Truncation& trunc, const RootSpec& spec,
                              ExecPolicy policy = ExecPolicy::Parallel);

struct ReachabilityReport {
    int equal_profile_pairs = 0;
    int dominated_pairs = 0;
    int incomparable_pairs = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
ReachabilityReport reachability_tests(const ComponentSpace& comp);

}  // namespace qdiv
