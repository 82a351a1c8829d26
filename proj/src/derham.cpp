#include "qdiv/derham.hpp"

#include <algorithm>

#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"

namespace qdiv {

std::string wedge_string(const WedgeWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "^dx" : "dx") + std::to_string(w[k]);
    return out;
}

std::string form_string(const FormKey& k) { return "x" + to_string(k.first) + "*" + wedge_string(k.second); }

std::optional<std::pair<WedgeWord, CycScalar>> wedge_canonicalize(const std::vector<int>& raw, const RootSpec& spec) {
    WedgeWord w = raw;
    long inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return std::nullopt;
            if (w[i] > w[j]) ++inv;
        }
    std::sort(w.begin(), w.end());
    CycScalar c = spec.q_power(-inv);
    if (inv % 2) c = -c;
    return std::make_pair(std::move(w), c);
}

namespace {

// exponent of q in K_i dx_j
int k_exp(int i, int j) { return (j == i ? 1 : 0) - (j == i + 1 ? 1 : 0); }

void add_raw(WedgeVector& out, const std::vector<int>& raw, const CycScalar& c, const RootSpec& spec) {
    if (c.is_zero()) return;
    auto w = wedge_canonicalize(raw, spec);
    if (w) out.add(w->first, w->second * c);
}

void check_axis(const Generator& g, int n) {
    if (g.index < 1 || g.index >= n) throw AxisOutOfRange("generator index out of range");
}

}  // namespace

WedgeVector exterior_action(const Generator& g, const WedgeWord& w, const RootSpec& spec, int n) {
    check_axis(g, n);
    for (int j : w)
        if (j < 1 || j > n) throw AxisOutOfRange("wedge index out of range");
    const int i = g.index;
    WedgeVector out;
    const int len = static_cast<int>(w.size());
    switch (g.kind) {
        case Generator::Kind::K:
        case Generator::Kind::Kinv: {
            long e = 0;
            for (int j : w) e += k_exp(i, j);
            if (g.kind == Generator::Kind::Kinv) e = -e;
            add_raw(out, w, spec.q_power(e), spec);
            break;
        }
        case Generator::Kind::E:
            // e acts on factor k, K on the factors after it
            for (int k = 0; k < len; ++k) {
                if (w[k] != i + 1) continue;
                std::vector<int> raw = w;
                raw[k] = i;
                long e = 0;
                for (int t = k + 1; t < len; ++t) e += k_exp(i, w[t]);
                add_raw(out, raw, spec.q_power(e), spec);
            }
            break;
        case Generator::Kind::F:
            // K^-1 on the factors before, f on factor k
            for (int k = 0; k < len; ++k) {
                if (w[k] != i) continue;
                std::vector<int> raw = w;
                raw[k] = i + 1;
                long e = 0;
                for (int t = 0; t < k; ++t) e -= k_exp(i, w[t]);
                add_raw(out, raw, spec.q_power(e), spec);
            }
            break;
    }
    return out;
}

FormVector tensor_action(const Generator& g, const FormVector& v, const RootSpec& spec, const Truncation& trunc) {
    FormVector out;
    using K = Generator::Kind;
    for (const auto& [key, c] : v.terms()) {
        const auto& [a, w] = key;
        const int n = static_cast<int>(a.size());
        check_axis(g, n);
        const ModVector x = monomial(a, spec);
        auto tensor = [&](const ModVector& xs, const WedgeVector& ws) {
            for (const auto& [b, cb] : xs.terms())
                for (const auto& [u, cu] : ws.terms()) out.add({b, u}, c * cb * cu);
        };
        WedgeVector wid;
        wid.add(w, spec.one());
        const Generator k{K::K, g.index}, kinv{K::Kinv, g.index};
        switch (g.kind) {
            case K::E:
                tensor(apply_generator(g, x, spec, trunc), exterior_action(k, w, spec, n));
                tensor(x, exterior_action(g, w, spec, n));
                break;
            case K::F:
                tensor(apply_generator(g, x, spec, trunc), wid);
                tensor(apply_generator(kinv, x, spec, trunc), exterior_action(g, w, spec, n));
                break;
            case K::K:
            case K::Kinv:
                tensor(apply_generator(g, x, spec, trunc), exterior_action(g, w, spec, n));
                break;
        }
    }
    return out;
}

FormVector differential(int s, const FormVector& v, const RootSpec& spec) {
    FormVector out;
    for (const auto& [key, c] : v.terms()) {
        const auto& [a, w] = key;
        if (static_cast<int>(w.size()) != s)
            throw DegreeMismatch("form of degree " + std::to_string(w.size()) + " given to d^" + std::to_string(s));
        const int n = static_cast<int>(a.size());
        long prefix = 0;  // eps_j * a = a_1 + ... + a_{j-1}
        for (int j = 1; j <= n; ++j) {
            if (a[j - 1] > 0) {
                std::vector<int> raw{j};
                raw.insert(raw.end(), w.begin(), w.end());
                auto cw = wedge_canonicalize(raw, spec);
                if (cw) {
                    MultiIndex b = a;
                    b[j - 1] -= 1;
                    out.add({b, cw->first}, c * spec.q_power(-prefix) * cw->second);
                }
            }
            prefix += a[j - 1];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

long WeightBlock::predicted_dim() const {
    const long n = static_cast<long>(gamma.size());
    if (k_gamma > s) return 0;
    return binomial(n - k_gamma - h_gamma, s - k_gamma).get_si();
}

int WeightBlock::index_of(const FormKey& k) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), k, [](const FormKey& x, const FormKey& y) {
        return x.second < y.second;
    });
    return (it != basis.end() && *it == k) ? static_cast<int>(it - basis.begin()) : -1;
}

WeightBlock weight_block(const MultiIndex& gamma, int s, const Truncation& trunc, const RootSpec& spec) {
    const int n = static_cast<int>(gamma.size());
    if (n != trunc.n) throw LengthMismatch("weight has the wrong length");
    if (s < 0 || s > n) throw DegreeOutOfRange("form degree outside 0..n");
    WeightBlock b;
    b.gamma = gamma;
    b.s = s;
    const int top = trunc.truncated() ? trunc.m * spec.ell() : -1;
    for (int x : gamma) {
        if (x < 0) throw InvalidArgument("negative weight coordinate");
        if (x == 0) ++b.h_gamma;
        if (x == top) ++b.k_gamma;
    }
    // words = s-subsets in lex order
    std::vector<int> word(s);
    for (int k = 0; k < s; ++k) word[k] = k + 1;
    while (true) {
        MultiIndex a = gamma;
        for (int j : word) a[j - 1] -= 1;
        bool ok = true;
        for (int x : a) ok = ok && x >= 0 && (!trunc.truncated() || x <= trunc.cap(spec.ell()));
        if (ok) b.basis.push_back({a, word});
        int k = s - 1;
        while (k >= 0 && word[k] == n - (s - 1 - k)) --k;
        if (k < 0) break;
        ++word[k];
        for (int t = k + 1; t < s; ++t) word[t] = word[t - 1] + 1;
    }
    return b;
}

Matrix differential_matrix(const WeightBlock& from, const WeightBlock& to, const RootSpec& spec) {
    require(from.gamma == to.gamma && to.s == from.s + 1, "differential between unrelated blocks");
    Matrix m(to.dim(), from.dim());
    for (int c = 0; c < from.dim(); ++c) {
        FormVector v;
        v.add(from.basis[c], spec.one());
        const FormVector dv = differential(from.s, v, spec);
        for (const auto& [k, x] : dv.terms()) {
            int r = to.index_of(k);
            require(r >= 0, "differential leaves its weight block: " + form_string(k));
            m(r, c) = x;
        }
    }
    return m;
}

std::vector<MultiIndex> truncated_weights(const Truncation& trunc, const RootSpec& spec) {
    if (!trunc.truncated()) throw InvalidArgument("weights are enumerated for m >= 1 only");
    const int top = trunc.m * spec.ell();
    std::vector<MultiIndex> out;
    for (long d = 0; d <= static_cast<long>(trunc.n) * top; ++d)
        for (auto& g : bounded_compositions(trunc.n, d, top)) out.push_back(std::move(g));
    return out;
}

namespace {

void merge(CheckReport& into, const CheckReport& part) {
    into.checked += part.checked;
    into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
}

CheckReport collect(std::vector<CheckReport>& parts) {
    CheckReport r;
    for (const auto& p : parts) merge(r, p);
    return r;
}

int rank_into(const WeightBlock& from, const WeightBlock& to, const RootSpec& spec) {
    if (from.dim() == 0 || to.dim() == 0) return 0;
    return rank(differential_matrix(from, to, spec));
}

}  // namespace

CheckReport d_square_check(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy) {
    const auto gammas = truncated_weights(trunc, spec);
    const int n = trunc.n;
    std::vector<CheckReport> parts(gammas.size());
    parallel_for(static_cast<int>(gammas.size()), policy, [&](int t) {
        CheckReport& r = parts[t];
        std::vector<WeightBlock> bl;
        for (int s = 0; s <= n; ++s) bl.push_back(weight_block(gammas[t], s, trunc, spec));
        for (int s = 0; s <= n; ++s) {
            ++r.checked;
            if (bl[s].dim() != bl[s].predicted_dim())
                r.failures.push_back("block " + to_string(gammas[t]) + " s=" + std::to_string(s) + " has dim " +
                                     std::to_string(bl[s].dim()) + ", predicted " + std::to_string(bl[s].predicted_dim()));
        }
        for (int s = 0; s + 2 <= n; ++s) {
            if (bl[s].dim() == 0 || bl[s + 2].dim() == 0) continue;
            ++r.checked;
            Matrix dd = differential_matrix(bl[s + 1], bl[s + 2], spec) * differential_matrix(bl[s], bl[s + 1], spec);
            if (!dd.is_zero()) r.failures.push_back("d^2 != 0 on " + to_string(gammas[t]) + " s=" + std::to_string(s));
        }
    });
    return collect(parts);
}

CheckReport homomorphism_check(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy) {
    if (!trunc.truncated()) throw InvalidArgument("homomorphism check needs m >= 1");
    std::vector<MultiIndex> alphas;
    for (long d = 0; d <= trunc.top_degree(spec.ell()); ++d)
        for (auto& a : component_basis(d, trunc, spec)) alphas.push_back(std::move(a));
    const int n = trunc.n;
    const auto gens = all_generators(n);
    std::vector<CheckReport> parts(alphas.size());
    parallel_for(static_cast<int>(alphas.size()), policy, [&](int t) {
        CheckReport& r = parts[t];
        for (int s = 0; s < n; ++s) {
            WeightBlock words = weight_block(MultiIndex(n, 1), s, Truncation{n, 0}, spec);
            for (const auto& [unused, w] : words.basis) {
                (void)unused;
                FormVector v;
                v.add({alphas[t], w}, spec.one());
                const FormVector dv = differential(s, v, spec);
                for (const auto& g : gens) {
                    ++r.checked;
                    if (differential(s, tensor_action(g, v, spec, trunc), spec) != tensor_action(g, dv, spec, trunc))
                        r.failures.push_back("d " + g.name() + " != " + g.name() + " d on " + form_string(FormKey{alphas[t], w}));
                }
            }
        }
    });
    return collect(parts);
}

BlockCohomology block_cohomology(const MultiIndex& gamma, int s, const Truncation& trunc, const RootSpec& spec) {
    const int n = trunc.n;
    BlockCohomology b;
    b.gamma = gamma;
    b.s = s;
    const WeightBlock cur = weight_block(gamma, s, trunc, spec);
    b.dim = cur.dim();
    b.kernel = b.dim - (s < n ? rank_into(cur, weight_block(gamma, s + 1, trunc, spec), spec) : 0);
    b.image = s > 0 ? rank_into(weight_block(gamma, s - 1, trunc, spec), cur, spec) : 0;
    return b;
}

namespace {

std::vector<WedgeWord> all_words(int n, int s) {
    std::vector<WedgeWord> out;
    const WeightBlock b = weight_block(MultiIndex(n, 1), s, Truncation{n, 0}, RootSpec(3, RootOrder::Odd));
    for (const auto& k : b.basis) out.push_back(k.second);
    return out;
}

MultiIndex rep_exponent(const WedgeWord& w, int n, int value) {
    MultiIndex a(n, 0);
    for (int j : w) a[j - 1] = value;
    return a;
}

// Is v (supported in block `to`) a coboundary?
bool is_coboundary(const FormVector& v, const MultiIndex& gamma, int s, const Truncation& trunc, const RootSpec& spec) {
    if (v.is_zero()) return true;
    if (s == 0) return false;
    const WeightBlock to = weight_block(gamma, s, trunc, spec);
    Vec x(to.dim());
    for (const auto& [k, c] : v.terms()) {
        int i = to.index_of(k);
        if (i < 0) return false;
        x[i] = c;
    }
    const WeightBlock from = weight_block(gamma, s - 1, trunc, spec);
    RowEchelon im(to.dim());
    if (from.dim() > 0) {
        Matrix d = differential_matrix(from, to, spec);
        for (int c = 0; c < d.cols(); ++c) im.insert(d.col(c));
    }
    return im.contains(x);
}

}  // namespace

CohomologyReport cohomology(const Truncation& trunc, const RootSpec& spec, ExecPolicy policy) {
    if (!trunc.truncated()) throw InvalidArgument("cohomology of the truncated complex needs m >= 1");
    const int n = trunc.n;
    CohomologyReport rep;
    rep.n = n;
    const auto gammas = truncated_weights(trunc, spec);
    std::vector<std::vector<BlockCohomology>> res(gammas.size());
    parallel_for(static_cast<int>(gammas.size()), policy, [&](int t) {
        for (int s = 0; s <= n; ++s) res[t].push_back(block_cohomology(gammas[t], s, trunc, spec));
    });
    rep.form_dims.assign(n + 1, 0);
    rep.kernel_dims.assign(n + 1, 0);
    rep.image_dims.assign(n + 1, 0);
    rep.h_dims.assign(n + 1, 0);
    for (const auto& per : res)
        for (const auto& b : per) {
            rep.form_dims[b.s] += b.dim;
            rep.kernel_dims[b.s] += b.kernel;
            rep.image_dims[b.s] += b.image;
            rep.h_dims[b.s] += b.h();
            if (b.h() != 0) rep.nonzero_blocks.push_back(b);
        }
    bool ok = true;
    for (int s = 0; s <= n; ++s) {
        rep.predicted.push_back(binomial(n, s).get_si());
        ok = ok && rep.h_dims[s] == rep.predicted[s];
        rep.euler_forms += (s % 2 ? -1 : 1) * rep.form_dims[s];
        rep.euler_h += (s % 2 ? -1 : 1) * rep.h_dims[s];
    }
    ok = ok && rep.euler_forms == rep.euler_h && rep.euler_h == 0;
    const int ml = trunc.m * spec.ell();
    for (int s = 0; s <= n; ++s)
        for (const auto& w : all_words(n, s)) {
            Representative r;
            r.word = w;
            r.term = {rep_exponent(w, n, ml - 1), w};
            FormVector v;
            v.add(r.term, spec.one());
            r.cocycle = differential(s, v, spec).is_zero();
            r.nonzero_class = !is_coboundary(v, rep_exponent(w, n, ml), s, trunc, spec);
            ok = ok && r.cocycle && r.nonzero_class;
            rep.representatives.push_back(std::move(r));
        }
    // classes sit in distinct weight blocks, each with one-dimensional cohomology
    for (const auto& r : rep.representatives) {
        auto it = std::find_if(rep.nonzero_blocks.begin(), rep.nonzero_blocks.end(), [&](const BlockCohomology& b) {
            return b.gamma == rep_exponent(r.word, n, ml) && b.s == static_cast<int>(r.word.size());
        });
        ok = ok && it != rep.nonzero_blocks.end() && it->h() == 1;
    }
    ok = ok && rep.nonzero_blocks.size() == rep.representatives.size();
    rep.ok = ok;
    return rep;
}

CohomologyActionReport action_on_cohomology(const Truncation& trunc, const RootSpec& spec) {
    if (!trunc.truncated()) throw InvalidArgument("cohomology action needs m >= 1");
    const int n = trunc.n;
    const int ml = trunc.m * spec.ell();
    CohomologyActionReport rep;
    rep.expect_trivial = spec.root_order() == RootOrder::Odd || trunc.m % 2 == 0;
    bool ok = true;
    for (int s = 0; s <= n; ++s)
        for (const auto& w : all_words(n, s)) {
            ClassAction ca;
            ca.word = w;
            ca.raising_zero = ca.lowering_zero = true;
            const MultiIndex gamma = rep_exponent(w, n, ml);
            FormVector v;
            v.add({rep_exponent(w, n, ml - 1), w}, spec.one());
            for (int i = 1; i < n; ++i) {
                const Grade sh = generator_shift({Generator::Kind::E, i}, n);
                const FormVector ev = tensor_action({Generator::Kind::E, i}, v, spec, trunc);
                const FormVector fv = tensor_action({Generator::Kind::F, i}, v, spec, trunc);
                if (!ev.is_zero()) ca.raising_zero = ca.raising_zero && is_coboundary(ev, grade_add(gamma, sh), s, trunc, spec);
                if (!fv.is_zero()) ca.lowering_zero = ca.lowering_zero && is_coboundary(fv, grade_sub(gamma, sh), s, trunc, spec);
                const FormVector kv = tensor_action({Generator::Kind::K, i}, v, spec, trunc);
                int sign = 0;
                if (kv == v) sign = 1;
                else if (kv == v.scaled(-spec.one())) sign = -1;
                ca.k_signs.push_back(sign);
                if (sign == -1) rep.some_negative = true;
                ok = ok && sign != 0 && (!rep.expect_trivial || sign == 1);
            }
            ok = ok && ca.raising_zero && ca.lowering_zero;
            rep.classes.push_back(std::move(ca));
        }
    if (!rep.expect_trivial && n >= 2) ok = ok && rep.some_negative;
    rep.ok = ok;
    return rep;
}

ExactnessReport untruncated_exactness(int n, const RootSpec& spec, int budget, ExecPolicy policy) {
    if (n < 2) throw InvalidArgument("rank n must be at least 2");
    if (budget < 1) throw InvalidArgument("weight budget must be at least 1");
    ExactnessReport rep;
    rep.n = n;
    rep.budget = budget;
    std::vector<MultiIndex> gammas;
    for (int d = 0; d <= budget; ++d)
        for (auto& g : bounded_compositions(n, d, d)) gammas.push_back(std::move(g));
    std::vector<ExactnessReport> parts(gammas.size());
    parallel_for(static_cast<int>(gammas.size()), policy, [&](int t) {
        const MultiIndex& g = gammas[t];
        const int w = weight(g);
        // m l > |gamma| makes the truncated block equal the untruncated one
        const Truncation tr{n, w / spec.ell() + 1};
        for (int s = 0; s <= n; ++s) {
            BlockCohomology b = block_cohomology(g, s, Truncation{n, 0}, spec);
            BlockCohomology bt = block_cohomology(g, s, tr, spec);
            ++parts[t].blocks_checked;
            const int expect = (w == 0 && s == 0) ? 1 : 0;
            if (b.dim != bt.dim || b.kernel != bt.kernel || b.image != bt.image)
                parts[t].failures.push_back("block " + to_string(g) + " s=" + std::to_string(s) +
                                            " differs from its truncation");
            if (b.h() != expect)
                parts[t].failures.push_back("block " + to_string(g) + " s=" + std::to_string(s) + " has cohomology " +
                                            std::to_string(b.h()));
        }
    });
    for (const auto& p : parts) {
        rep.blocks_checked += p.blocks_checked;
        rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
    }
    rep.weights_checked = static_cast<int>(gammas.size());
    return rep;
}

}  // namespace qdiv
