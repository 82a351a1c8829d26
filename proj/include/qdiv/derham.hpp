#pragma once

// Quantum exterior algebra, forms A_q (x) wedge_(s), the q-differentials and
// their cohomology, computed one weight block at a time.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdiv/dpalgebra.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/parallel.hpp"
#include "qdiv/uqaction.hpp"

namespace qdiv {

using WedgeWord = std::vector<int>;  // strictly increasing, 1-based
using FormKey = std::pair<MultiIndex, WedgeWord>;
using FormVector = LinComb<FormKey>;
using WedgeVector = LinComb<WedgeWord>;

std::string wedge_string(const WedgeWord& w);  // "dx1^dx3", "1" when empty
std::string form_string(const FormKey& k);

/// Sorted word and the factor (-q^-1)^inversions, or nullopt on a repeated index.
std::optional<std::pair<WedgeWord, CycScalar>> wedge_canonicalize(const std::vector<int>& raw, const RootSpec& spec);

/// Generator on a wedge monomial, extended from dx_j by the coproduct.
WedgeVector exterior_action(const Generator& g, const WedgeWord& w, const RootSpec& spec, int n);
/// Generator on forms: e -> e(x)K + 1(x)e, f -> f(x)1 + K^-1(x)f, K -> K(x)K.
FormVector tensor_action(const Generator& g, const FormVector& v, const RootSpec& spec, const Truncation& trunc);

/// d^s on forms of degree s; throws DegreeMismatch on a term of another degree.
FormVector differential(int s, const FormVector& v, const RootSpec& spec);

struct WeightBlock {
    MultiIndex gamma;
    int s = 0;
    std::vector<FormKey> basis;  // ordered by word
    int k_gamma = 0;             // coordinates equal to m*l
    int h_gamma = 0;             // coordinates equal to 0
    long predicted_dim() const;  // C(n - k - h, s - k), 0 if k > s
    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const FormKey& k) const;
};
/// Untruncated when trunc.m == 0 (then k_gamma = 0).
WeightBlock weight_block(const MultiIndex& gamma, int s, const Truncation& trunc, const RootSpec& spec);

/// d^s restricted to a block: rows = block (gamma, s+1), cols = block (gamma, s).
Matrix differential_matrix(const WeightBlock& from, const WeightBlock& to, const RootSpec& spec);

/// Every gamma in [0, m l]^n (m >= 1).
std::vector<MultiIndex> truncated_weights(const Truncation& trunc, const RootSpec& spec);

struct CheckReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
/// d^{s+1} d^s = 0 on every block; block dimensions match C(n-k-h, s-k).
CheckReport d_square_check(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy = ExecPolicy::Parallel);
/// d(g v) = g d(v) on every basis form and every generator.
CheckReport homomorphism_check(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy = ExecPolicy::Parallel);

struct BlockCohomology {
    MultiIndex gamma;
    int s = 0;
    int dim = 0, kernel = 0, image = 0;
    int h() const { return kernel - image; }
};

struct Representative {
    WedgeWord word;
    FormKey term;       // x^((ml-1) eps_I) (x) dx_I
    bool cocycle = false;
    bool nonzero_class = false;
};

struct CohomologyReport {
    int n = 0;
    std::vector<long> form_dims;   // dim Omega^(s)
    std::vector<long> kernel_dims, image_dims;
    std::vector<long> h_dims;
    std::vector<long> predicted;   // C(n, s)
    std::vector<BlockCohomology> nonzero_blocks;  // blocks with h != 0
    std::vector<Representative> representatives;
    long euler_forms = 0, euler_h = 0;
    bool ok = false;
};
CohomologyReport cohomology(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy = ExecPolicy::Parallel);
/// One block: ranks of the incoming and outgoing differentials.
BlockCohomology block_cohomology(const MultiIndex& gamma, int s, const Truncation& trunc, const RootSpec& spec);

struct ClassAction {
    WedgeWord word;
    std::vector<int> k_signs;  // eigenvalue of K_i on the class, +1 or -1 (0 if neither)
    bool raising_zero = false; // e_i images are coboundaries
    bool lowering_zero = false;
};
struct CohomologyActionReport {
    std::vector<ClassAction> classes;
    bool expect_trivial = false;  // odd root or even m
    bool some_negative = false;
    bool ok = false;
};
CohomologyActionReport action_on_cohomology(const Truncation& trunc, const RootSpec& spec);

struct ExactnessReport {
    int n = 0;
    int budget = 0;
    int weights_checked = 0;
    int blocks_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
/// Untruncated complex, every weight 0 <= |gamma| <= budget.
ExactnessReport untruncated_exactness(int n, const RootSpec& spec, int budget,
                                      ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace qdiv
