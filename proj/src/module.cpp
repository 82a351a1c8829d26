#include "qdiv/module.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "qdiv/errors.hpp"

namespace qdiv {

Grade grade_add(const Grade& a, const Grade& b) {
    if (a.size() != b.size()) throw LengthMismatch("grades of different length");
    Grade c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Grade grade_sub(const Grade& a, const Grade& b) {
    if (a.size() != b.size()) throw LengthMismatch("grades of different length");
    Grade c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Grade grade_neg(const Grade& a) {
    Grade c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

// ---------------------------------------------------------------------------

GradedModule make_module(const CyclotomicField& field, std::vector<Grade> weights, std::vector<int> dims,
                         std::vector<Grade> shifts, std::vector<std::vector<Matrix>> blocks) {
    GradedModule m;
    m.field_ = &field;
    m.weights_ = std::move(weights);
    m.dims_ = std::move(dims);
    m.shifts_ = std::move(shifts);
    m.blocks_ = std::move(blocks);
    m.total_ = 0;
    for (std::size_t w = 0; w < m.weights_.size(); ++w) {
        m.index_.emplace(m.weights_[w], static_cast<int>(w));
        m.offsets_.push_back(m.total_);
        m.total_ += m.dims_[w];
    }
    m.target_.assign(m.shifts_.size(), std::vector<int>(m.weights_.size(), -1));
    for (std::size_t g = 0; g < m.shifts_.size(); ++g)
        for (std::size_t w = 0; w < m.weights_.size(); ++w) {
            int t = m.find(grade_add(m.weights_[w], m.shifts_[g]));
            m.target_[g][w] = t;
            const Matrix& b = m.blocks_[g][w];
            if (t < 0) {
                require(b.rows() == 0 && b.cols() == 0, "block into an absent weight");
            } else {
                require(b.rows() == m.dims_[t] && b.cols() == m.dims_[w], "block has the wrong shape");
            }
        }
    m.orig_.resize(m.total_);
    for (int i = 0; i < m.total_; ++i) m.orig_[i] = i;
    return m;
}

int GradedModule::find(const Grade& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

GradedModule GradedModule::build(const CyclotomicField& field, const std::vector<Grade>& coord_grade,
                                 const std::vector<Grade>& shifts, const std::vector<Matrix>& gens) {
    const int n = static_cast<int>(coord_grade.size());
    if (gens.size() != shifts.size()) throw LengthMismatch("one shift per generator is required");
    std::map<Grade, std::vector<int>> coords;
    for (int i = 0; i < n; ++i) coords[coord_grade[i]].push_back(i);
    std::vector<Grade> weights;
    std::vector<int> dims;
    std::vector<int> orig;
    for (const auto& [w, cs] : coords) {
        weights.push_back(w);
        dims.push_back(static_cast<int>(cs.size()));
        orig.insert(orig.end(), cs.begin(), cs.end());
    }
    std::vector<std::vector<Matrix>> blocks(gens.size(), std::vector<Matrix>(weights.size()));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const Matrix& G = gens[g];
        if (G.rows() != n || G.cols() != n) throw LengthMismatch("generator matrix has the wrong size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!G(i, j).is_zero())
                    require(coord_grade[i] == grade_add(coord_grade[j], shifts[g]),
                            "generator matrix is not homogeneous for its weight shift");
        for (std::size_t w = 0; w < weights.size(); ++w) {
            Grade t = grade_add(weights[w], shifts[g]);
            auto it = coords.find(t);
            if (it == coords.end()) continue;
            const auto& src = coords[weights[w]];
            const auto& dst = it->second;
            Matrix b(static_cast<int>(dst.size()), static_cast<int>(src.size()));
            for (std::size_t a = 0; a < dst.size(); ++a)
                for (std::size_t c = 0; c < src.size(); ++c) b(a, c) = G(dst[a], src[c]);
            blocks[g][w] = std::move(b);
        }
    }
    GradedModule m = make_module(field, weights, dims, shifts, std::move(blocks));
    m.orig_ = std::move(orig);
    return m;
}

GradedModule GradedModule::ungraded(const CyclotomicField& field, int dim, const std::vector<Matrix>& gens) {
    std::vector<Grade> coord(dim, Grade{});
    std::vector<Grade> shifts(gens.size(), Grade{});
    return build(field, coord, shifts, gens);
}

Matrix GradedModule::dense_generator(int g) const {
    Matrix out(total_, total_);
    for (int w = 0; w < num_weights(); ++w) {
        int t = target_[g][w];
        if (t < 0) continue;
        const Matrix& b = blocks_[g][w];
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(offsets_[t] + i, offsets_[w] + j) = b(i, j);
    }
    return out;
}

// ---------------------------------------------------------------------------

GradedSubspace GradedSubspace::zero(const GradedModule& m) {
    GradedSubspace s;
    for (int w = 0; w < m.num_weights(); ++w) s.parts.emplace_back(m.weight_dim(w));
    return s;
}

GradedSubspace GradedSubspace::whole(const GradedModule& m) {
    GradedSubspace s;
    for (int w = 0; w < m.num_weights(); ++w) {
        RowEchelon e(m.weight_dim(w));
        for (int i = 0; i < m.weight_dim(w); ++i) {
            Vec v(m.weight_dim(w));
            v[i] = m.field().one();
            e.insert(std::move(v));
        }
        s.parts.push_back(std::move(e));
    }
    return s;
}

int GradedSubspace::dim() const {
    int d = 0;
    for (const auto& p : parts) d += p.rank();
    return d;
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
    if (o.parts.size() != parts.size()) throw LengthMismatch("subspaces of different modules");
    for (std::size_t w = 0; w < parts.size(); ++w)
        for (const auto& r : o.parts[w].rows())
            if (!parts[w].contains(r)) return false;
    return true;
}

bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t w = 0; w < a.parts.size(); ++w)
        if (!(a.parts[w] == b.parts[w])) return false;
    return true;
}

std::vector<Vec> GradedSubspace::dense_rows(const GradedModule& m) const {
    std::vector<Vec> out;
    for (int w = 0; w < m.num_weights(); ++w)
        for (const auto& r : parts[w].rows()) {
            Vec v(m.dim());
            for (int i = 0; i < m.weight_dim(w); ++i) v[m.offset(w) + i] = r[i];
            out.push_back(std::move(v));
        }
    return out;
}

GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.parts.size() != b.parts.size()) throw LengthMismatch("subspaces of different modules");
    GradedSubspace s = a;
    for (std::size_t w = 0; w < s.parts.size(); ++w)
        for (const auto& r : b.parts[w].rows()) s.parts[w].insert(r);
    return s;
}

// ---------------------------------------------------------------------------

namespace {

GradedElement zero_element(const GradedModule& m, const Grade& deg) {
    GradedElement x;
    x.deg = deg;
    x.blocks.resize(m.num_weights());
    for (int w = 0; w < m.num_weights(); ++w) {
        int t = m.find(grade_add(m.weight(w), deg));
        if (t >= 0) x.blocks[w] = Matrix(m.weight_dim(t), m.weight_dim(w));
    }
    return x;
}

Grade zero_grade(const GradedModule& m) { return m.num_weights() ? Grade(m.weight(0).size(), 0) : Grade{}; }

// generator g after x
GradedElement left_multiply(const GradedModule& m, int g, const GradedElement& x) {
    GradedElement y = zero_element(m, grade_add(x.deg, m.shift(g)));
    for (int w = 0; w < m.num_weights(); ++w) {
        if (y.blocks[w].rows() == 0 && y.blocks[w].cols() == 0) continue;
        int t = m.find(grade_add(m.weight(w), x.deg));
        if (t < 0 || m.target(g, t) < 0) continue;
        y.blocks[w] = m.block(g, t) * x.blocks[w];
    }
    return y;
}

// tr(x y) for deg x = -deg y
CycScalar trace_pair(const GradedModule& m, const GradedElement& x, const GradedElement& y) {
    CycScalar acc;
    for (int w = 0; w < m.num_weights(); ++w) {
        const Matrix& yb = y.blocks[w];
        if (yb.rows() == 0) continue;
        int t = m.find(grade_add(m.weight(w), y.deg));
        const Matrix& xb = x.blocks[t];
        for (int i = 0; i < xb.rows(); ++i)
            for (int j = 0; j < xb.cols(); ++j)
                if (!xb(i, j).is_zero() && !yb(j, i).is_zero()) acc.add_product(xb(i, j), yb(j, i));
    }
    return acc;
}

GradedElement combine(const GradedModule& m, const Grade& deg, const std::vector<GradedElement>& xs, const Vec& c) {
    GradedElement out = zero_element(m, deg);
    for (std::size_t a = 0; a < xs.size(); ++a) {
        if (c[a].is_zero()) continue;
        for (int w = 0; w < m.num_weights(); ++w)
            if (out.blocks[w].rows() && out.blocks[w].cols()) out.blocks[w] = out.blocks[w] + c[a] * xs[a].blocks[w];
    }
    return out;
}

}  // namespace

Vec flatten(const GradedElement& x) {
    Vec v;
    for (const auto& b : x.blocks) v.insert(v.end(), b.entries().begin(), b.entries().end());
    return v;
}

Matrix dense(const GradedModule& m, const GradedElement& x) {
    Matrix out(m.dim(), m.dim());
    for (int w = 0; w < m.num_weights(); ++w) {
        const Matrix& b = x.blocks[w];
        if (b.rows() == 0 || b.cols() == 0) continue;
        int t = m.find(grade_add(m.weight(w), x.deg));
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(m.offset(t) + i, m.offset(w) + j) = b(i, j);
    }
    return out;
}

GradedElement compose(const GradedModule& m, const GradedElement& x, const GradedElement& y) {
    GradedElement z = zero_element(m, grade_add(x.deg, y.deg));
    for (int w = 0; w < m.num_weights(); ++w) {
        if (z.blocks[w].rows() == 0 || z.blocks[w].cols() == 0) continue;
        int t = m.find(grade_add(m.weight(w), y.deg));
        if (t < 0) continue;
        const Matrix& xb = x.blocks[t];
        if (xb.rows() == 0 || xb.cols() == 0) continue;
        z.blocks[w] = xb * y.blocks[w];
    }
    return z;
}

int GradedAlgebra::dim() const {
    int d = 0;
    for (const auto& [deg, b] : basis) d += static_cast<int>(b.size());
    return d;
}

// ---------------------------------------------------------------------------

bool is_closed(const GradedModule& m, const GradedSubspace& s) {
    for (int w = 0; w < m.num_weights(); ++w)
        for (const auto& r : s.parts[w].rows())
            for (int g = 0; g < m.num_generators(); ++g) {
                int t = m.target(g, w);
                if (t < 0) continue;
                if (!s.parts[t].contains(m.block(g, w).apply(r))) return false;
            }
    return true;
}

GradedSubspace closure(const GradedModule& m, const std::vector<std::pair<int, Vec>>& seeds) {
    GradedSubspace s = GradedSubspace::zero(m);
    std::deque<std::pair<int, Vec>> queue;
    for (const auto& [w, v] : seeds)
        if (s.parts.at(w).insert(v)) queue.emplace_back(w, v);
    int grown = static_cast<int>(queue.size());
    while (!queue.empty()) {
        auto [w, v] = std::move(queue.front());
        queue.pop_front();
        for (int g = 0; g < m.num_generators(); ++g) {
            int t = m.target(g, w);
            if (t < 0) continue;
            Vec u = m.block(g, w).apply(v);
            if (is_zero(u)) continue;
            if (s.parts[t].insert(u)) {
                queue.emplace_back(t, std::move(u));
                ++grown;
            }
        }
    }
    require(grown <= m.dim(), "closure grew past the module dimension");
    return s;
}

GradedSubspace closure(const GradedModule& m, const GradedSubspace& seed) {
    std::vector<std::pair<int, Vec>> seeds;
    for (int w = 0; w < m.num_weights(); ++w)
        for (const auto& r : seed.parts[w].rows()) seeds.emplace_back(w, r);
    return closure(m, seeds);
}

RowEchelon dense_closure(const GradedModule& m, const std::vector<Vec>& seeds) {
    std::vector<Matrix> gens;
    for (int g = 0; g < m.num_generators(); ++g) gens.push_back(m.dense_generator(g));
    RowEchelon e(m.dim());
    std::deque<Vec> queue;
    for (const auto& v : seeds)
        if (e.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& G : gens) {
            Vec u = G.apply(v);
            if (e.insert(u)) queue.push_back(std::move(u));
        }
    }
    return e;
}

GradedSubspace Quotient::lift(const GradedModule& parent, const GradedSubspace& sub) const {
    GradedSubspace out = kernel;
    for (int qw = 0; qw < module.num_weights(); ++qw) {
        int pw = parent_weight[qw];
        for (const auto& r : sub.parts[qw].rows()) {
            Vec v(parent.weight_dim(pw));
            for (std::size_t a = 0; a < complement[qw].size(); ++a) v[complement[qw][a]] = r[a];
            out.parts[pw].insert(std::move(v));
        }
    }
    return out;
}

Quotient quotient(const GradedModule& m, const GradedSubspace& s) {
    Quotient q;
    q.kernel = s;
    std::vector<int> qindex(m.num_weights(), -1);
    std::vector<Grade> weights;
    std::vector<int> dims;
    for (int w = 0; w < m.num_weights(); ++w) {
        auto free = s.parts[w].free_columns();
        if (free.empty()) continue;
        qindex[w] = static_cast<int>(weights.size());
        weights.push_back(m.weight(w));
        dims.push_back(static_cast<int>(free.size()));
        q.parent_weight.push_back(w);
        q.complement.push_back(std::move(free));
    }
    std::vector<Grade> shifts;
    std::vector<std::vector<Matrix>> blocks(m.num_generators(), std::vector<Matrix>(weights.size()));
    for (int g = 0; g < m.num_generators(); ++g) {
        shifts.push_back(m.shift(g));
        for (std::size_t qw = 0; qw < weights.size(); ++qw) {
            int pw = q.parent_weight[qw];
            int pt = m.target(g, pw);
            if (pt < 0 || qindex[pt] < 0) continue;
            const auto& cw = q.complement[qw];
            const auto& ct = q.complement[qindex[pt]];
            Matrix b(static_cast<int>(ct.size()), static_cast<int>(cw.size()));
            for (std::size_t c = 0; c < cw.size(); ++c) {
                Vec r = s.parts[pt].reduce(m.block(g, pw).col(cw[c]));
                for (std::size_t a = 0; a < ct.size(); ++a) b(static_cast<int>(a), static_cast<int>(c)) = r[ct[a]];
            }
            blocks[g][qw] = std::move(b);
        }
    }
    q.module = make_module(m.field(), weights, dims, shifts, std::move(blocks));
    return q;
}

GradedSubspace Restriction::lift(const GradedModule& parent, const GradedSubspace& sub) const {
    GradedSubspace out = GradedSubspace::zero(parent);
    for (int sw = 0; sw < module.num_weights(); ++sw) {
        int pw = parent_weight[sw];
        for (const auto& c : sub.parts[sw].rows()) {
            Vec v(parent.weight_dim(pw));
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero())
                    for (int i = 0; i < parent.weight_dim(pw); ++i) v[i].add_product(c[k], rows[sw][k][i]);
            out.parts[pw].insert(std::move(v));
        }
    }
    return out;
}

GradedSubspace Restriction::pull(const GradedSubspace& parent_sub) const {
    GradedSubspace out = GradedSubspace::zero(module);
    std::vector<int> sindex(parent_sub.parts.size(), -1);
    for (std::size_t sw = 0; sw < parent_weight.size(); ++sw) sindex[parent_weight[sw]] = static_cast<int>(sw);
    for (std::size_t pw = 0; pw < parent_sub.parts.size(); ++pw) {
        const auto& rs = parent_sub.parts[pw].rows();
        if (rs.empty()) continue;
        if (sindex[pw] < 0) throw InvalidArgument("subspace is not contained in the restriction");
        RowEchelon basis(parent_sub.parts[pw].ambient());
        for (const auto& r : rows[sindex[pw]]) basis.insert(r);
        for (const auto& r : rs) {
            auto c = basis.coordinates(r);
            if (!c) throw InvalidArgument("subspace is not contained in the restriction");
            out.parts[sindex[pw]].insert(std::move(*c));
        }
    }
    return out;
}

Restriction restrict_to(const GradedModule& m, const GradedSubspace& s) {
    Restriction r;
    std::vector<int> sindex(m.num_weights(), -1);
    std::vector<Grade> weights;
    std::vector<int> dims;
    for (int w = 0; w < m.num_weights(); ++w) {
        if (s.parts[w].rank() == 0) continue;
        sindex[w] = static_cast<int>(weights.size());
        weights.push_back(m.weight(w));
        dims.push_back(s.parts[w].rank());
        r.parent_weight.push_back(w);
        r.rows.push_back(s.parts[w].rows());
    }
    std::vector<Grade> shifts;
    std::vector<std::vector<Matrix>> blocks(m.num_generators(), std::vector<Matrix>(weights.size()));
    for (int g = 0; g < m.num_generators(); ++g) {
        shifts.push_back(m.shift(g));
        for (std::size_t sw = 0; sw < weights.size(); ++sw) {
            int pw = r.parent_weight[sw];
            int pt = m.target(g, pw);
            if (pt < 0) continue;
            if (sindex[pt] < 0) {
                for (const auto& row : r.rows[sw])
                    if (!is_zero(m.block(g, pw).apply(row))) throw NotClosed();
                continue;
            }
            Matrix b(dims[sindex[pt]], dims[sw]);
            for (int k = 0; k < dims[sw]; ++k) {
                auto c = s.parts[pt].coordinates(m.block(g, pw).apply(r.rows[sw][k]));
                if (!c) throw NotClosed();
                for (int a = 0; a < b.rows(); ++a) b(a, k) = (*c)[a];
            }
            blocks[g][sw] = std::move(b);
        }
    }
    r.module = make_module(m.field(), weights, dims, shifts, std::move(blocks));
    return r;
}

// ---------------------------------------------------------------------------

GradedAlgebra image_algebra(const GradedModule& m) {
    GradedAlgebra alg;
    std::map<Grade, RowEchelon> spans;
    std::deque<GradedElement> queue;
    auto offer = [&](GradedElement x) {
        Vec flat = flatten(x);
        auto it = spans.find(x.deg);
        if (it == spans.end()) it = spans.emplace(x.deg, RowEchelon(static_cast<int>(flat.size()))).first;
        if (!it->second.insert(std::move(flat))) return;
        alg.basis[x.deg].push_back(x);
        queue.push_back(std::move(x));
    };
    GradedElement id = zero_element(m, zero_grade(m));
    for (int w = 0; w < m.num_weights(); ++w) id.blocks[w] = Matrix::identity(m.field(), m.weight_dim(w));
    offer(std::move(id));
    const long bound = static_cast<long>(m.dim()) * m.dim();
    while (!queue.empty()) {
        GradedElement x = std::move(queue.front());
        queue.pop_front();
        for (int g = 0; g < m.num_generators(); ++g) {
            GradedElement y = left_multiply(m, g, x);
            if (is_zero(flatten(y))) continue;
            offer(std::move(y));
        }
        require(alg.dim() <= bound, "image algebra exceeds the matrix algebra dimension");
    }
    return alg;
}

Matrix trace_gram(const GradedModule& m, const std::vector<GradedElement>& xs, const std::vector<GradedElement>& ys) {
    Matrix g(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = 0; b < ys.size(); ++b)
            g(static_cast<int>(a), static_cast<int>(b)) = trace_pair(m, xs[a], ys[b]);
    return g;
}

GradedAlgebra trace_radical(const GradedModule& m, const GradedAlgebra& a, ExecPolicy policy) {
    std::vector<Grade> degs;
    for (const auto& [d, b] : a.basis) degs.push_back(d);
    std::vector<std::vector<GradedElement>> parts(degs.size());
    parallel_for(static_cast<int>(degs.size()), policy, [&](int k) {
        const Grade& d = degs[k];
        const auto& xs = a.basis.at(d);
        auto it = a.basis.find(grade_neg(d));
        if (it == a.basis.end()) {
            parts[k] = xs;
            return;
        }
        Matrix gram = trace_gram(m, xs, it->second);
        for (const Vec& c : left_kernel(gram, m.field())) parts[k].push_back(combine(m, d, xs, c));
    });
    GradedAlgebra rad;
    for (std::size_t k = 0; k < degs.size(); ++k)
        if (!parts[k].empty()) rad.basis[degs[k]] = std::move(parts[k]);
    return rad;
}

GradedAlgebra commutant(const GradedModule& m, ExecPolicy policy) {
    std::set<Grade> degset;
    for (int i = 0; i < m.num_weights(); ++i)
        for (int j = 0; j < m.num_weights(); ++j) degset.insert(grade_sub(m.weight(j), m.weight(i)));
    std::vector<Grade> degs(degset.begin(), degset.end());
    std::vector<std::vector<GradedElement>> parts(degs.size());
    parallel_for(static_cast<int>(degs.size()), policy, [&](int k) {
        const Grade& d = degs[k];
        // unknown phi_w : M_w -> M_{w+d}
        std::vector<int> tgt(m.num_weights(), -1), off(m.num_weights(), -1);
        int nvar = 0;
        for (int w = 0; w < m.num_weights(); ++w) {
            tgt[w] = m.find(grade_add(m.weight(w), d));
            if (tgt[w] < 0) continue;
            off[w] = nvar;
            nvar += m.weight_dim(tgt[w]) * m.weight_dim(w);
        }
        auto var = [&](int w, int i, int j) { return off[w] + i * m.weight_dim(w) + j; };
        std::vector<Vec> eqs;
        for (int g = 0; g < m.num_generators(); ++g)
            for (int w = 0; w < m.num_weights(); ++w) {
                int u = m.find(grade_add(grade_add(m.weight(w), d), m.shift(g)));
                if (u < 0) continue;
                int tw = tgt[w];                // w + d
                int gw = m.target(g, w);        // w + shift
                int gt = tw >= 0 ? m.target(g, tw) : -1;
                for (int a = 0; a < m.weight_dim(u); ++a)
                    for (int b = 0; b < m.weight_dim(w); ++b) {
                        Vec row(nvar);
                        // (G phi_w)[a][b]
                        if (tw >= 0 && gt >= 0)
                            for (int c = 0; c < m.weight_dim(tw); ++c) row[var(w, c, b)] += m.block(g, tw)(a, c);
                        // (phi_{w+shift} G)[a][b]
                        if (gw >= 0 && tgt[gw] >= 0)
                            for (int c = 0; c < m.weight_dim(gw); ++c) row[var(gw, a, c)] -= m.block(g, w)(c, b);
                        if (!is_zero(row)) eqs.push_back(std::move(row));
                    }
            }
        Matrix sys(static_cast<int>(eqs.size()), nvar);
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (int c = 0; c < nvar; ++c) sys(static_cast<int>(r), c) = eqs[r][c];
        for (const Vec& sol : kernel(sys, m.field())) {
            GradedElement x = zero_element(m, d);
            for (int w = 0; w < m.num_weights(); ++w) {
                if (tgt[w] < 0) continue;
                for (int i = 0; i < m.weight_dim(tgt[w]); ++i)
                    for (int j = 0; j < m.weight_dim(w); ++j) x.blocks[w](i, j) = sol[var(w, i, j)];
            }
            parts[k].push_back(std::move(x));
        }
    });
    GradedAlgebra e;
    for (std::size_t k = 0; k < degs.size(); ++k)
        if (!parts[k].empty()) e.basis[degs[k]] = std::move(parts[k]);
    return e;
}

GradedSubspace socle(const GradedModule& m, const GradedAlgebra& jac) {
    GradedSubspace s = GradedSubspace::zero(m);
    for (int w = 0; w < m.num_weights(); ++w) {
        std::vector<Vec> rows;
        for (const auto& [d, xs] : jac.basis)
            for (const auto& x : xs) {
                const Matrix& b = x.blocks[w];
                for (int i = 0; i < b.rows(); ++i)
                    if (b.cols()) rows.push_back(b.row(i));
            }
        Matrix stack(static_cast<int>(rows.size()), m.weight_dim(w));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < m.weight_dim(w); ++c) stack(static_cast<int>(r), c) = rows[r][c];
        for (Vec& v : kernel(stack, m.field())) s.parts[w].insert(std::move(v));
    }
    return s;
}

GradedSubspace radical(const GradedModule& m, const GradedAlgebra& jac) {
    GradedSubspace s = GradedSubspace::zero(m);
    for (const auto& [d, xs] : jac.basis)
        for (const auto& x : xs)
            for (int w = 0; w < m.num_weights(); ++w) {
                const Matrix& b = x.blocks[w];
                if (b.rows() == 0 || b.cols() == 0) continue;
                int t = m.find(grade_add(m.weight(w), d));
                for (int j = 0; j < b.cols(); ++j) s.parts[t].insert(b.col(j));
            }
    return s;
}

GradedSubspace socle(const GradedModule& m, ExecPolicy policy) {
    return socle(m, trace_radical(m, image_algebra(m), policy));
}

GradedSubspace radical(const GradedModule& m, ExecPolicy policy) {
    return radical(m, trace_radical(m, image_algebra(m), policy));
}

std::vector<GradedSubspace> socle_series(const GradedModule& m, ExecPolicy policy) {
    std::vector<GradedSubspace> series{GradedSubspace::zero(m)};
    while (series.back().dim() < m.dim()) {
        Quotient q = quotient(m, series.back());
        GradedSubspace soc = socle(q.module, policy);
        require(soc.dim() > 0, "socle of a nonzero module is zero");
        series.push_back(q.lift(m, soc));
    }
    return series;
}

std::vector<GradedSubspace> radical_series(const GradedModule& m, ExecPolicy policy) {
    std::vector<GradedSubspace> series{GradedSubspace::whole(m)};
    while (series.back().dim() > 0) {
        Restriction r = restrict_to(m, series.back());
        GradedSubspace rad = radical(r.module, policy);
        require(rad.dim() < r.module.dim(), "radical of a nonzero module is everything");
        series.push_back(r.lift(m, rad));
    }
    return series;
}

// ---------------------------------------------------------------------------

std::string to_string(SimplicityVerdict v) {
    switch (v) {
        case SimplicityVerdict::Simple: return "Simple";
        case SimplicityVerdict::NotSimple: return "NotSimple";
        default: return "Inconclusive";
    }
}

std::string to_string(IndecomposabilityVerdict v) {
    switch (v) {
        case IndecomposabilityVerdict::Indecomposable: return "Indecomposable";
        case IndecomposabilityVerdict::Decomposable: return "Decomposable";
        default: return "Inconclusive";
    }
}

SimplicityCertificate simplicity_certificate(const GradedModule& m, const GradedSubspace& s, ExecPolicy policy) {
    if (!is_closed(m, s)) throw NotClosed();
    SimplicityCertificate cert;
    if (s.dim() == 0) {
        cert.verdict = SimplicityVerdict::NotSimple;
        cert.reason = "zero subspace";
        return cert;
    }
    Restriction r = restrict_to(m, s);
    const GradedModule& n = r.module;
    GradedAlgebra jac = trace_radical(n, image_algebra(n), policy);
    GradedSubspace rad = radical(n, jac);
    cert.radical_dim = rad.dim();
    cert.commutant_dim = commutant(n, policy).dim();
    if (cert.radical_dim == 0 && cert.commutant_dim == 1) {
        cert.verdict = SimplicityVerdict::Simple;
        cert.reason = "radical zero and commutant one-dimensional";
        return cert;
    }
    if (cert.radical_dim > 0) {
        cert.verdict = SimplicityVerdict::NotSimple;
        cert.witness = r.lift(m, rad);
        cert.reason = "nonzero radical";
        return cert;
    }
    const GradedSubspace all = GradedSubspace::whole(n);
    for (int w = 0; w < n.num_weights(); ++w)
        for (const auto& v : all.parts[w].rows()) {
            GradedSubspace c = closure(n, {{w, v}});
            if (c.dim() < n.dim()) {
                cert.verdict = SimplicityVerdict::NotSimple;
                cert.witness = r.lift(m, c);
                cert.reason = "proper cyclic submodule";
                return cert;
            }
        }
    cert.reason = "semisimple with a commutant larger than the field";
    return cert;
}

namespace {

std::optional<Matrix> fitting_idempotent(const GradedModule& m, const Matrix& x, const std::vector<Matrix>& gens) {
    const int D = m.dim();
    std::vector<CycScalar> shifts{m.field().zero()};
    for (int i = 0; i < D; ++i) {
        bool seen = false;
        for (const auto& c : shifts) seen = seen || c == x(i, i);
        if (!seen) shifts.push_back(x(i, i));
    }
    for (const auto& c : shifts) {
        Matrix y = x - c * Matrix::identity(m.field(), D);
        // y^k for k >= D has stable kernel and image
        Matrix z = y;
        for (int k = 1; k < D; k *= 2) z = z * z;
        auto ker = kernel(z, m.field());
        if (ker.empty() || static_cast<int>(ker.size()) == D) continue;
        RowEchelon im = row_space(z.transpose());
        Matrix t(D, D), sel(D, D);
        int col = 0;
        for (const auto& v : im.rows()) {
            for (int i = 0; i < D; ++i) t(i, col) = v[i];
            ++col;
        }
        for (const auto& v : ker) {
            for (int i = 0; i < D; ++i) t(i, col) = v[i];
            sel(col, col) = m.field().one();
            ++col;
        }
        auto tinv = inverse(t, m.field());
        if (!tinv) continue;
        Matrix p = t * sel * *tinv;
        if (p * p != p) continue;
        bool commutes = true;
        for (const auto& g : gens) commutes = commutes && (g * p == p * g);
        if (commutes) return p;
    }
    return std::nullopt;
}

}  // namespace

IndecomposabilityCertificate indecomposability_certificate(const GradedModule& m, ExecPolicy policy) {
    IndecomposabilityCertificate cert;
    GradedAlgebra e = commutant(m, policy);
    GradedAlgebra rad = trace_radical(m, e, policy);
    cert.commutant_dim = e.dim();
    cert.commutant_radical_dim = rad.dim();
    if (cert.commutant_dim - cert.commutant_radical_dim == 1) {
        cert.verdict = IndecomposabilityVerdict::Indecomposable;
        return cert;
    }
    // Degree-zero part carries every idempotent; nonzero degrees are nilpotent.
    auto it = e.basis.find(zero_grade(m));
    if (it == e.basis.end()) return cert;
    std::vector<Matrix> gens;
    for (int g = 0; g < m.num_generators(); ++g) gens.push_back(m.dense_generator(g));
    std::vector<Matrix> cands;
    for (const auto& x : it->second) cands.push_back(dense(m, x));
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::size_t nb = cands.size();
    for (int trial = 0; trial < 8 && nb > 1; ++trial) {
        Matrix acc(m.dim(), m.dim());
        for (std::size_t k = 0; k < nb; ++k) acc = acc + m.field().from_int(coef(rng)) * cands[k];
        cands.push_back(std::move(acc));
    }
    for (const auto& x : cands) {
        if (auto p = fitting_idempotent(m, x, gens)) {
            cert.verdict = IndecomposabilityVerdict::Decomposable;
            cert.idempotent = std::move(p);
            return cert;
        }
    }
    return cert;
}

}  // namespace qdiv
