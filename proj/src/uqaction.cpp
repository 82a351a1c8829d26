#include "qdiv/uqaction.hpp"

#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"

namespace qdiv {

std::string Generator::name() const {
    const char* k = kind == Kind::E ? "E" : kind == Kind::F ? "F" : kind == Kind::K ? "K" : "Kinv";
    return std::string(k) + std::to_string(index);
}

std::vector<Generator> all_generators(int n) {
    std::vector<Generator> out;
    for (int i = 1; i < n; ++i)
        for (auto k : {Generator::Kind::E, Generator::Kind::F, Generator::Kind::K, Generator::Kind::Kinv})
            out.push_back({k, i});
    return out;
}

Grade generator_shift(const Generator& g, int n) {
    if (g.index < 1 || g.index >= n) throw AxisOutOfRange("generator index out of range");
    Grade d(n, 0);
    if (g.kind == Generator::Kind::E) {
        d[g.index - 1] = 1;
        d[g.index] = -1;
    } else if (g.kind == Generator::Kind::F) {
        d[g.index - 1] = -1;
        d[g.index] = 1;
    }
    return d;
}

ModVector apply_generator(const Generator& g, const ModVector& v, const RootSpec& spec, const Truncation& trunc) {
    ModVector out;
    const int i = g.index - 1;
    for (const auto& [b, c] : v.terms()) {
        if (g.index < 1 || g.index >= static_cast<int>(b.size())) throw AxisOutOfRange("generator index out of range");
        switch (g.kind) {
            case Generator::Kind::E: {
                if (b[i + 1] == 0) break;
                MultiIndex t = b;
                t[i] += 1;
                t[i + 1] -= 1;
                CycScalar k = q_int(b[i] + 1, spec) * c;
                if (trunc.truncated() && !trunc.admits(t, spec.ell()))
                    require(k.is_zero(), "raising operator leaves the truncation");
                out.add(t, k);
                break;
            }
            case Generator::Kind::F: {
                if (b[i] == 0) break;
                MultiIndex t = b;
                t[i] -= 1;
                t[i + 1] += 1;
                CycScalar k = q_int(b[i + 1] + 1, spec) * c;
                if (trunc.truncated() && !trunc.admits(t, spec.ell()))
                    require(k.is_zero(), "lowering operator leaves the truncation");
                out.add(t, k);
                break;
            }
            case Generator::Kind::K: out.add(b, spec.q_power(b[i] - b[i + 1]) * c); break;
            case Generator::Kind::Kinv: out.add(b, spec.q_power(b[i + 1] - b[i]) * c); break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ComponentSpace::ComponentSpace(const Truncation& trunc, long s, const RootSpec& spec)
    : trunc_(trunc), s_(s), spec_(spec), basis_(component_basis(s, trunc, spec)) {
    if (trunc.n < 2) throw InvalidArgument("rank n must be at least 2");
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], static_cast<int>(k));
    const int d = dim();
    std::vector<Grade> shifts;
    for (const auto& g : all_generators(n())) {
        Matrix m(d, d);
        for (int j = 0; j < d; ++j) {
            ModVector img = apply_generator(g, monomial(basis_[j], spec_), spec_, trunc_);
            for (const auto& [a, c] : img.terms()) {
                int i = index_of(a);
                require(i >= 0, "generator image outside the component");
                m(i, j) = c;
            }
        }
        mats_.push_back(std::move(m));
        shifts.push_back(generator_shift(g, n()));
    }
    std::vector<Grade> grades(basis_.begin(), basis_.end());
    module_ = GradedModule::build(spec_.field(), grades, shifts, mats_);
    for (int k = 0; k < d; ++k) require(module_.original_index()[k] == k, "component basis is not in weight order");
}

int ComponentSpace::index_of(const MultiIndex& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

const Matrix& ComponentSpace::matrix(const Generator& g) const {
    if (g.index < 1 || g.index >= n()) throw AxisOutOfRange("generator index out of range");
    return mats_[(g.index - 1) * 4 + static_cast<int>(g.kind)];
}

Vec ComponentSpace::coordinates(const ModVector& v) const {
    Vec out(dim());
    for (const auto& [a, c] : v.terms()) {
        int i = index_of(a);
        if (i < 0) throw InvalidArgument("vector has a term outside the component: " + to_string(a));
        out[i] = c;
    }
    return out;
}

ModVector ComponentSpace::vector(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dim()) throw LengthMismatch("coordinate vector has the wrong length");
    ModVector v;
    for (int i = 0; i < dim(); ++i) v.add(basis_[i], coords[i]);
    return v;
}

GradedSubspace ComponentSpace::monomial_span(const std::vector<MultiIndex>& as) const {
    GradedSubspace s = GradedSubspace::zero(module_);
    for (const auto& a : as) {
        int i = index_of(a);
        if (i < 0) throw InvalidArgument("monomial outside the component: " + to_string(a));
        s.parts[i].insert(Vec{spec_.one()});
    }
    return s;
}

std::vector<MultiIndex> ComponentSpace::monomials_of(const GradedSubspace& s) const {
    std::vector<MultiIndex> out;
    for (int i = 0; i < dim(); ++i)
        if (s.parts[i].rank() > 0) out.push_back(basis_[i]);
    return out;
}

Matrix generator_matrix(const Generator& g, const ComponentSpace& comp) { return comp.matrix(g); }

RowEchelon submodule_closure(const std::vector<ModVector>& seeds, const ComponentSpace& comp) {
    std::vector<Vec> vs;
    for (const auto& v : seeds) vs.push_back(comp.coordinates(v));
    return dense_closure(comp.module(), vs);
}

GradedSubspace monomial_closure(const std::vector<MultiIndex>& seeds, const ComponentSpace& comp) {
    std::vector<std::pair<int, Vec>> s;
    for (const auto& a : seeds) {
        int i = comp.index_of(a);
        if (i < 0) throw InvalidArgument("monomial outside the component: " + to_string(a));
        s.emplace_back(i, Vec{comp.spec().one()});
    }
    return closure(comp.module(), s);
}

GradedSubspace socle_oracle(const ComponentSpace& comp, ExecPolicy policy) { return socle(comp.module(), policy); }

GradedSubspace radical_oracle(const ComponentSpace& comp, ExecPolicy policy) { return radical(comp.module(), policy); }

// ---------------------------------------------------------------------------

RelationReport check_relations(const ComponentSpace& comp) {
    RelationReport rep;
    const int n = comp.n();
    const int d = comp.dim();
    const RootSpec& spec = comp.spec();
    const Matrix I = Matrix::identity(spec.field(), d);
    auto E = [&](int i) { return comp.matrix({Generator::Kind::E, i}); };
    auto F = [&](int i) { return comp.matrix({Generator::Kind::F, i}); };
    auto K = [&](int i) { return comp.matrix({Generator::Kind::K, i}); };
    auto Ki = [&](int i) { return comp.matrix({Generator::Kind::Kinv, i}); };
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checked;
        if (!ok) rep.failures.push_back(what);
    };
    auto power = [&](const Matrix& m, int k) {
        Matrix p = I;
        for (int t = 0; t < k; ++t) p = p * m;
        return p;
    };
    const CycScalar q = spec.q_power(1);
    const CycScalar qdiff = q - spec.q_power(-1);
    const CycScalar two = q_int(2, spec);
    const int l = spec.ell();
    for (int i = 1; i < n; ++i) {
        const std::string tag = " (i=" + std::to_string(i) + ")";
        check(K(i) * Ki(i) == I && Ki(i) * K(i) == I, "K K^-1 = 1" + tag);
        check(power(E(i), l).is_zero(), "E^l = 0" + tag);
        check(power(F(i), l).is_zero(), "F^l = 0" + tag);
        check(power(K(i), 2 * l) == I, "K^(2l) = 1" + tag);
        check(qdiff * (E(i) * F(i) - F(i) * E(i)) == K(i) - Ki(i), "[E,F] = (K - K^-1)/(q - q^-1)" + tag);
        for (int j = 1; j < n; ++j) {
            const std::string tj = " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
            int a = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            check(K(i) * E(j) * Ki(i) == spec.q_power(a) * E(j), "K E K^-1 = q^a E" + tj);
            check(K(i) * F(j) * Ki(i) == spec.q_power(-a) * F(j), "K F K^-1 = q^-a F" + tj);
            check(K(i) * K(j) == K(j) * K(i), "K K commute" + tj);
            if (i == j) continue;
            check(E(i) * F(j) == F(j) * E(i), "[E_i, F_j] = 0" + tj);
            if (std::abs(i - j) == 1) {
                check((E(i) * E(i) * E(j) - two * (E(i) * E(j) * E(i)) + E(j) * E(i) * E(i)).is_zero(), "Serre E" + tj);
                check((F(i) * F(i) * F(j) - two * (F(i) * F(j) * F(i)) + F(j) * F(i) * F(i)).is_zero(), "Serre F" + tj);
            } else {
                check(E(i) * E(j) == E(j) * E(i), "E_i E_j commute" + tj);
                check(F(i) * F(j) == F(j) * F(i), "F_i F_j commute" + tj);
            }
        }
    }
    return rep;
}

}  // namespace qdiv
