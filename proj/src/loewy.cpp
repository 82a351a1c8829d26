#include "qdiv/loewy.hpp"

#include <algorithm>
#include <sstream>

#include "qdiv/errors.hpp"
#include "qdiv/qarith.hpp"

namespace qdiv {

EnergyProfile edeg(const MultiIndex& a, const RootSpec& spec) {
    EnergyProfile p;
    const int l = spec.ell();
    for (int x : a) {
        if (x < 0) throw InvalidArgument("negative exponent in multi-index");
        p.per_axis.push_back(x / l);
        p.residue.push_back(x % l);
        p.total += x / l;
    }
    return p;
}

int edeg_vector(const ModVector& v, const RootSpec& spec) {
    if (v.is_zero()) throw ZeroVector();
    int best = -1;
    for (const auto& [a, c] : v.terms()) best = std::max(best, edeg(a, spec).total);
    return best;
}

namespace {

void check_degree(long s, const Truncation& trunc, const RootSpec& spec) {
    if (!trunc.truncated()) throw InvalidArgument("energy bounds need a truncation level m >= 1");
    if (s < 0 || s > trunc.top_degree(spec.ell()))
        throw DegreeOutOfRange("degree " + std::to_string(s) + " outside 0.." + std::to_string(trunc.top_degree(spec.ell())));
}

// Feasible splits s = l*E + r, 0 <= E <= n(m-1), 0 <= r <= n(l-1); valid for m >= 1.
EBounds energy_range(long s, const Truncation& trunc, const RootSpec& spec) {
    check_degree(s, trunc, spec);
    const long l = spec.ell();
    const long emax = static_cast<long>(trunc.n) * (trunc.m - 1);
    const long rmax = static_cast<long>(trunc.n) * (l - 1);
    EBounds b{-1, -1};
    for (long e = 0; e <= emax; ++e) {
        long r = s - l * e;
        if (r < 0 || r > rmax) continue;
        if (b.e0 < 0) b.e0 = e;
        b.etop = e;
    }
    require(b.e0 >= 0, "no feasible energy split");
    return b;
}

long kron(bool c) { return c ? 1 : 0; }

}  // namespace

EBounds e_bounds(long s, const Truncation& trunc, const RootSpec& spec) {
    if (trunc.m < 2) throw InvalidArgument("energy bounds are defined for m >= 2");
    return energy_range(s, trunc, spec);
}

EBounds e_bounds_bruteforce(long s, const Truncation& trunc, const RootSpec& spec) {
    check_degree(s, trunc, spec);
    EBounds b{-1, -1};
    for (const auto& a : component_basis(s, trunc, spec)) {
        long e = edeg(a, spec).total;
        if (b.e0 < 0 || e < b.e0) b.e0 = e;
        if (b.etop < 0 || e > b.etop) b.etop = e;
    }
    return b;
}

EnergyCaseCheck check_energy_cases(long s, const Truncation& trunc, const RootSpec& spec) {
    if (trunc.n < 3) throw InvalidArgument("energy case analysis needs n >= 3");
    EnergyCaseCheck c;
    const long n = trunc.n, m = trunc.m, l = spec.ell();
    const long N = n * (m * l - 1);
    const EBounds b = e_bounds(s, trunc, spec);
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) c.ok = false;
        c.notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    };
    auto str = [](long v) { return std::to_string(v); };
    const long np = n / l;
    const long En = n - np - 1 + kron(n == np * l);
    long rem = n - np * l;
    const long En1 = n - np - 1 - kron(rem >= 2 && rem <= l - 1);

    if (s <= l - 1) {
        c.case_no = 1;
        expect(b.e0 == 0 && b.etop == 0, "E0 = 0 = E, got (" + str(b.e0) + ", " + str(b.etop) + ")");
    } else if (s <= n * (l - 1)) {
        c.case_no = 2;
        expect(b.e0 == 0, "E0 = 0, got " + str(b.e0));
        const long exact_top = e_bounds(n * (l - 1), trunc, spec).etop;
        expect(En == exact_top, "E(n(l-1)) closed form " + str(En) + " vs exact " + str(exact_top));
        expect(1 <= b.etop && b.etop <= En, "1 <= E <= E(n(l-1)), E = " + str(b.etop));
        for (long j = 1; j <= n; ++j) {
            long h = s - j * (l - 1);
            if (h < 0 || h > l - 1) continue;
            long jp = j / l, rj = j % l;
            long formula = j - jp - kron(rj - h >= 1 && rj - h <= l - 1);
            expect(formula == b.etop, "j=" + str(j) + " h=" + str(h) + ": j - j' - delta = " + str(formula));
        }
        for (long j = 1; j <= n - 1; ++j) {
            if (s < j * (l - 1) + 1 || s > (j + 1) * (l - 1)) continue;
            long jp = j / l;
            expect(j - jp - 1 <= b.etop && b.etop <= j - jp,
                   "j=" + str(j) + ": " + str(j - jp - 1) + " <= E <= " + str(j - jp));
        }
    } else if (s <= N - l) {
        c.case_no = 3;
        long k = (s - (n - 1) * (l - 1)) / l;
        long h = (s - (n - 1) * (l - 1)) % l;
        expect(1 <= k && k <= n * (m - 1) - 1 && 0 <= h && h <= l - 1, "k = " + str(k) + " in range");
        expect(b.e0 == k, "E0 = k = " + str(k) + ", got " + str(b.e0));
        expect(k + 1 <= b.etop && b.etop <= n * (m - 1), "k+1 <= E <= n(m-1), E = " + str(b.etop));
        const long ex_n = e_bounds(n * (l - 1), trunc, spec).etop;
        const long ex_n1 = e_bounds((n - 1) * (l - 1), trunc, spec).etop;
        expect(En == ex_n, "E(n(l-1)) closed form " + str(En) + " vs exact " + str(ex_n));
        expect(En1 == ex_n1, "E((n-1)(l-1)) closed form " + str(En1) + " vs exact " + str(ex_n1));
        expect(En1 >= 1, "E((n-1)(l-1)) >= 1");
        if (k <= n * (m - 1) - En) {
            expect(k + En1 <= b.etop && b.etop <= k + En,
                   str(k + En1) + " <= E <= " + str(k + En) + ", E = " + str(b.etop));
        } else {
            expect(b.etop == n * (m - 1), "E = n(m-1) = " + str(n * (m - 1)) + ", got " + str(b.etop));
        }
    } else {
        c.case_no = 4;
        expect(b.e0 == n * (m - 1) && b.etop == n * (m - 1),
               "E0 = E = n(m-1), got (" + str(b.e0) + ", " + str(b.etop) + ")");
    }
    return c;
}

std::vector<MultiIndex> socle_basis(long s, const Truncation& trunc, const RootSpec& spec) {
    const EBounds b = energy_range(s, trunc, spec);
    std::vector<MultiIndex> out;
    for (const auto& a : component_basis(s, trunc, spec))
        if (edeg(a, spec).total == b.e0) out.push_back(a);
    return out;
}

MultiIndex greedy_residue(int n, long si, int ell) {
    if (si < 0 || si > static_cast<long>(n) * (ell - 1)) throw DegreeOutOfRange("residue weight out of range");
    MultiIndex eta(n, 0);
    for (int j = 0; j < n && si > 0; ++j) {
        int take = static_cast<int>(std::min<long>(si, ell - 1));
        eta[j] = take;
        si -= take;
    }
    return eta;
}

std::vector<MultiIndex> kappa_tuples(int n, long e, int m) {
    if (m < 1) return {};
    return bounded_compositions(n, e, m - 1);
}

std::vector<GradedSubspace> energy_filtration(const ComponentSpace& comp) {
    const EBounds b = energy_range(comp.degree(), comp.trunc(), comp.spec());
    std::vector<GradedSubspace> vs;
    for (long e = b.e0; e <= b.etop; ++e) {
        std::vector<MultiIndex> as;
        for (const auto& a : comp.basis())
            if (edeg(a, comp.spec()).total <= e) as.push_back(a);
        vs.push_back(comp.monomial_span(as));
    }
    return vs;
}

FiltrationReport loewy_filtration(long s, const Truncation& trunc, const RootSpec& spec, ExecPolicy policy) {
    FiltrationReport rep;
    rep.s = s;
    rep.bounds = energy_range(s, trunc, spec);
    ComponentSpace comp(trunc, s, spec);
    const GradedModule& M = comp.module();
    rep.total_dim = comp.dim();
    const auto vs = energy_filtration(comp);
    const int n = trunc.n, l = spec.ell();
    const auto pcoef = gaussian_coefficients(n, trunc.m);
    bool ok = true;
    int prev_dim = 0;
    long layer_sum = 0;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        LayerInfo L;
        L.i = i;
        const long e = rep.bounds.e0 + i;
        L.s_i = s - e * l;
        L.multiplicity = e < static_cast<long>(pcoef.size()) ? pcoef[e] : 0;
        const auto kappas = kappa_tuples(n, e, trunc.m);
        L.multiplicity_enum = static_cast<long>(kappas.size());
        L.simple_dim = (L.s_i >= 0 && L.s_i <= static_cast<long>(n) * (l - 1)) ? dim_by_gaussian(n, l, L.s_i) : 0;
        L.layer_dim = vs[i].dim() - prev_dim;
        prev_dim = vs[i].dim();
        layer_sum += L.layer_dim;
        L.closed = is_closed(M, vs[i]);

        const GradedSubspace below = i ? vs[i - 1] : GradedSubspace::zero(M);
        L.primitive_ok = L.closed;
        for (const auto& k : kappas) {
            MultiIndex eta = greedy_residue(n, L.s_i, l);
            for (int j = 0; j < n; ++j) eta[j] += l * k[j];
            L.primitive.push_back(eta);
            const int idx = comp.index_of(eta);
            if (idx < 0) {
                L.primitive_ok = false;
                continue;
            }
            for (int j = 1; j < n; ++j) {
                Vec img = comp.matrix({Generator::Kind::E, j}).col(idx);
                for (int w = 0; w < comp.dim(); ++w)
                    if (!img[w].is_zero() && below.parts[w].rank() == 0) L.primitive_ok = false;
            }
        }

        L.semisimple = false;
        L.generators_ok = false;
        if (L.closed) {
            Restriction r = restrict_to(M, vs[i]);
            Quotient q = quotient(r.module, r.pull(below));
            L.semisimple = radical(q.module, policy).dim() == 0;
            // class of each x^eta generates a copy of the simple module; the copies fill the layer
            GradedSubspace total = GradedSubspace::zero(q.module);
            bool each = L.primitive_ok;
            for (const auto& eta : L.primitive) {
                const int idx = comp.index_of(eta);
                if (idx < 0) break;
                Grade g = eta;
                int qw = q.module.find(g);
                if (qw < 0 || q.module.weight_dim(qw) != 1) {
                    each = false;
                    continue;
                }
                GradedSubspace c = closure(q.module, {{qw, Vec{spec.one()}}});
                each = each && c.dim() == L.simple_dim;
                total = graded_sum(total, c);
            }
            L.generators_ok = each && total.dim() == L.layer_dim;
        }
        ok = ok && L.closed && L.semisimple && L.primitive_ok && L.generators_ok &&
             L.multiplicity == L.multiplicity_enum && L.layer_dim == L.multiplicity * L.simple_dim;
        rep.layers.push_back(std::move(L));
    }
    if (!rep.layers.empty()) rep.socle_generators = rep.layers[0].primitive;
    for (std::size_t i = 1; i < rep.layers.size(); ++i)
        for (const auto& a : rep.layers[i].primitive) {
            if (comp.index_of(a) < 0) continue;
            GradedSubspace c = monomial_closure({a}, comp);
            for (const auto& b : rep.layers[i - 1].primitive) {
                int bi = comp.index_of(b);
                if (bi >= 0 && c.parts[bi].rank() > 0)
                    rep.links.push_back({static_cast<int>(i), static_cast<int>(i - 1), a, b});
            }
        }
    ok = ok && layer_sum == rep.total_dim &&
         static_cast<long>(rep.layers.size()) == rep.bounds.etop - rep.bounds.e0 + 1;
    rep.ok = ok;
    return rep;
}

IdentityReport identity_check(long s, const Truncation& trunc, const RootSpec& spec) {
    IdentityReport rep;
    rep.s = s;
    const long n = trunc.n, m = trunc.m, l = spec.ell();
    const EBounds b = energy_range(s, trunc, spec);
    rep.lhs_gaussian = dim_by_gaussian(static_cast<int>(n), static_cast<int>(m * l), s);
    mpz_class lit = 0;
    for (long i = 0; i <= s / (m * l); ++i) {
        mpz_class t = binomial(n, i) * binomial(n + s - i * m * l - 1, n - 1);
        lit += (i % 2) ? mpz_class(-t) : t;
    }
    rep.lhs_literal = lit.get_si();
    const auto pcoef = gaussian_coefficients(static_cast<int>(n), static_cast<int>(m));
    rep.kappa_counts_ok = true;
    mpz_class rhs_lit = 0;
    for (long i = 0; i <= b.etop - b.e0; ++i) {
        const long e = b.e0 + i;
        const long si = s - e * l;
        long mult = e < static_cast<long>(pcoef.size()) ? pcoef[e] : 0;
        long mult_enum = static_cast<long>(kappa_tuples(static_cast<int>(n), e, static_cast<int>(m)).size());
        mpz_class mult_alt = 0;
        for (long j = 0; j <= e / m; ++j) {
            mpz_class t = binomial(n, j) * binomial(n + e - j * m - 1, n - 1);
            mult_alt += (j % 2) ? mpz_class(-t) : t;
        }
        rep.kappa_counts_ok = rep.kappa_counts_ok && mult == mult_enum && mpz_class(mult) == mult_alt;
        long sd = dim_by_gaussian(static_cast<int>(n), static_cast<int>(l), si);
        rep.rhs += mult * sd;
        // inner limit floor((s - i) / l), not floor(s_i / l)
        mpz_class inner = 0;
        for (long j = 0; j <= (s - i) / l; ++j) {
            mpz_class t = binomial(n, j) * binomial(n + si - j * l - 1, n - 1);
            inner += (j % 2) ? mpz_class(-t) : t;
        }
        rhs_lit += inner * mult_alt;
    }
    rep.rhs_literal = rhs_lit.get_si();
    rep.ok = rep.kappa_counts_ok && rep.lhs_gaussian == rep.lhs_literal && rep.lhs_gaussian == rep.rhs &&
             rep.rhs == rep.rhs_literal;
    return rep;
}

RigidityReport rigidity_check(long s, const Truncation& trunc, const RootSpec& spec, ExecPolicy policy) {
    RigidityReport rep;
    rep.s = s;
    ComponentSpace comp(trunc, s, spec);
    const EBounds b = energy_range(s, trunc, spec);
    rep.loewy_length = static_cast<int>(b.etop - b.e0 + 1);
    const auto vs = energy_filtration(comp);
    const auto soc = socle_series(comp.module(), policy);
    const auto rad = radical_series(comp.module(), policy);
    for (const auto& x : soc) rep.socle_dims.push_back(x.dim());
    for (const auto& x : rad) rep.radical_dims.push_back(x.dim());
    for (const auto& x : vs) rep.energy_dims.push_back(x.dim());
    const int r = static_cast<int>(vs.size());
    rep.socle_matches = static_cast<int>(soc.size()) == r + 1;
    rep.radical_matches = static_cast<int>(rad.size()) == r + 1;
    for (int k = 1; k <= r && rep.socle_matches; ++k) rep.socle_matches = soc[k] == vs[k - 1];
    for (int k = 1; k <= r && rep.radical_matches; ++k) rep.radical_matches = rad[r - k] == vs[k - 1];
    rep.ok = rep.socle_matches && rep.radical_matches && r == rep.loewy_length;
    return rep;
}

ReachabilityReport reachability_tests(const ComponentSpace& comp) {
    ReachabilityReport rep;
    const auto& basis = comp.basis();
    const int d = comp.dim();
    std::vector<GradedSubspace> cl;
    std::vector<EnergyProfile> prof;
    for (const auto& a : basis) {
        cl.push_back(monomial_closure({a}, comp));
        prof.push_back(edeg(a, comp.spec()));
    }
    auto fail = [&](int a, int b, const std::string& what) {
        rep.failures.push_back(to_string(basis[a]) + " vs " + to_string(basis[b]) + ": " + what);
    };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const auto& pa = prof[a].per_axis;
            const auto& pb = prof[b].per_axis;
            if (pa == pb) {
                if (a < b) {
                    ++rep.equal_profile_pairs;
                    if (cl[a] != cl[b]) fail(a, b, "equal profiles but different submodules");
                }
                continue;
            }
            bool dominates = true;
            for (std::size_t i = 0; i < pa.size(); ++i) dominates = dominates && pa[i] >= pb[i];
            if (dominates && prof[a].total > prof[b].total) {
                ++rep.dominated_pairs;
                if (!(cl[a].contains(cl[b]) && cl[a] != cl[b])) fail(a, b, "dominating profile without strict containment");
            } else if (prof[a].total == prof[b].total && a < b) {
                ++rep.incomparable_pairs;
                if (cl[b].parts[a].rank() > 0 || cl[a].parts[b].rank() > 0) fail(a, b, "incomparable profiles but reachable");
            }
        }
    return rep;
}

}  // namespace qdiv
