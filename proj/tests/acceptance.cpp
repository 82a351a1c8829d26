// One PASS/FAIL line per acceptance criterion.  Exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "qdiv/derham.hpp"
#include "qdiv/loewy.hpp"
#include "qdiv/qarith.hpp"

#ifndef QDIV_GOLDEN_DIR
#define QDIV_GOLDEN_DIR "tests/golden"
#endif

using namespace qdiv;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

const RootOrder orders[] = {RootOrder::Odd, RootOrder::Even};
const RootSpec L3(3, RootOrder::Odd);
const Truncation T332{3, 2};

Outcome c1() {
    Outcome o;
    long n = 0;
    for (auto order : orders)
        for (int ell : {3, 5}) {
            RootSpec sp(ell, order);
            for (long m = 0; m <= 3L * ell; ++m)
                for (long r = 0; r <= m; ++r, ++n) {
                    const CycScalar p = q_binomial(m, r, sp);
                    if (p != q_binomial_recursive(m, r, sp) || p != lusztig_factor(m, r, sp))
                        o.fail(sp.describe() + " [" + std::to_string(m) + " " + std::to_string(r) + "]");
                }
        }
    if (o.ok) o.detail = std::to_string(n) + " pairs";
    return o;
}

Outcome c2() {
    Outcome o;
    long n = 0;
    for (int ell : {3, 5}) {
        RootSpec sp(ell, RootOrder::Odd);
        for (int r : {2, 3, 4})
            for (int m : {1, 2}) {
                Truncation t{r, m};
                const int b = m * ell;
                for (long s = 0; s <= t.top_degree(ell); ++s, ++n) {
                    const long e = static_cast<long>(component_basis(s, t, sp).size());
                    if (dim_by_polynomial(r, b, s) != e || dim_by_alternating_sum(r, b, s) != e ||
                        oracle::count_tuples(r, s, b - 1) != e)
                        o.fail("n=" + std::to_string(r) + " l=" + std::to_string(ell) + " s=" + std::to_string(s));
                }
            }
    }
    if (o.ok) o.detail = std::to_string(n) + " components";
    return o;
}

Outcome c3() {
    Outcome o;
    int checked = 0;
    for (auto order : orders)
        for (int m : {1, 2}) {
            RootSpec sp(3, order);
            Truncation t{3, m};
            for (long s = 0; s <= t.top_degree(3); ++s) {
                auto r = check_relations(ComponentSpace(t, s, sp));
                checked += r.checked;
                if (!r.ok()) o.fail(r.failures.front());
            }
        }
    if (o.ok) o.detail = std::to_string(checked) + " relations";
    return o;
}

Outcome c4() {
    Outcome o;
    const long dims[] = {1, 3, 6, 7, 6, 3, 1};
    for (long s = 0; s <= 6; ++s) {
        ComponentSpace c(Truncation{3, 1}, s, L3);
        if (c.dim() != dims[s]) o.fail("dim at s=" + std::to_string(s));
        if (simplicity_certificate(c.module(), GradedSubspace::whole(c.module())).verdict != SimplicityVerdict::Simple)
            o.fail("not simple at s=" + std::to_string(s));
        // highest weight vector: fill from the left, exponents capped at l - 1
        MultiIndex hw(3, 0);
        long left = s;
        for (auto& x : hw) {
            x = static_cast<int>(std::min<long>(left, 2));
            left -= x;
        }
        if (monomial_closure({hw}, c).dim() != c.dim()) o.fail("not generated at s=" + std::to_string(s));
        for (int i = 1; i <= 2; ++i)
            if (!apply_generator({Generator::Kind::E, i}, monomial(hw, L3), L3, Truncation{3, 1}).is_zero())
                o.fail("not highest at s=" + std::to_string(s));
        const CycScalar k1 = L3.q_power(hw[0] - hw[1]), k2 = L3.q_power(hw[1] - hw[2]);
        if (apply_generator({Generator::Kind::K, 1}, monomial(hw, L3), L3, Truncation{3, 1}) != monomial(hw, L3).scaled(k1) ||
            apply_generator({Generator::Kind::K, 2}, monomial(hw, L3), L3, Truncation{3, 1}) != monomial(hw, L3).scaled(k2))
            o.fail("weight at s=" + std::to_string(s));
    }
    if (o.ok) o.detail = "dims 1,3,6,7,6,3,1";
    return o;
}

Outcome c5() {
    Outcome o;
    for (int n : {3, 4})
        for (int ell : {3, 5}) {
            RootSpec sp(ell, RootOrder::Odd);
            Truncation t{n, 2};
            for (long s = 0; s <= t.top_degree(ell); ++s) {
                if (!(e_bounds(s, t, sp) == e_bounds_bruteforce(s, t, sp))) o.fail("bounds s=" + std::to_string(s));
                auto cc = check_energy_cases(s, t, sp);
                if (!cc.ok) o.fail("case " + std::to_string(cc.case_no) + " n=" + std::to_string(n) + " s=" + std::to_string(s));
            }
        }
    if (!(e_bounds(7, T332, L3) == EBounds{1, 2})) o.fail("E(7)");
    if (o.ok) o.detail = "E(7)_0 = 1, E(7) = 2";
    return o;
}

Outcome c6() {
    Outcome o;
    for (long s = 0; s <= T332.top_degree(3); ++s) {
        ComponentSpace c(T332, s, L3);
        if (!(c.monomial_span(socle_basis(s, T332, L3)) == socle_oracle(c))) o.fail("s=" + std::to_string(s));
    }
    ComponentSpace c7(T332, 7, L3);
    if (socle_oracle(c7).dim() != 18) o.fail("dim Soc at s=7");
    auto r = loewy_filtration(7, T332, L3);
    if (r.socle_generators != std::vector<MultiIndex>{{2, 2, 3}, {2, 5, 0}, {5, 2, 0}}) o.fail("generators at s=7");
    if (o.ok) o.detail = "16 degrees, dim 18 at s=7";
    return o;
}

Outcome c7() {
    Outcome o;
    for (long s = 0; s <= T332.top_degree(3); ++s) {
        auto r = loewy_filtration(s, T332, L3);
        if (!r.ok) o.fail("filtration s=" + std::to_string(s));
        for (const auto& l : r.layers)
            if (l.layer_dim != l.multiplicity * l.simple_dim || !l.primitive_ok)
                o.fail("layer " + std::to_string(l.i) + " s=" + std::to_string(s));
        if (!identity_check(s, T332, L3).ok) o.fail("identity s=" + std::to_string(s));
    }
    auto r7 = loewy_filtration(7, T332, L3);
    if (r7.layers.size() != 2 || r7.layers[0].layer_dim != 18 || r7.layers[1].layer_dim != 9) o.fail("s=7 layers");
    if (o.ok) o.detail = "27 = 3*6 + 3*3 at s=7";
    return o;
}

Outcome c8() {
    Outcome o;
    for (long s = 3; s <= 12; ++s) {
        auto r = rigidity_check(s, T332, L3);
        if (!r.ok) o.fail("s=" + std::to_string(s));
        if (s == 7 && r.loewy_length != 2) o.fail("length at s=7");
    }
    if (o.ok) o.detail = "s = 3..12";
    return o;
}

Outcome c9() {
    Outcome o;
    for (long s = 3; s <= 12; ++s) {
        ComponentSpace c(T332, s, L3);
        auto ic = indecomposability_certificate(c.module());
        if (ic.verdict != IndecomposabilityVerdict::Indecomposable || ic.commutant_dim - ic.commutant_radical_dim != 1)
            o.fail("s=" + std::to_string(s));
    }
    // control: A(3,1) components of degree 1 and 2 placed side by side
    ComponentSpace a(Truncation{3, 1}, 1, L3), b(Truncation{3, 1}, 2, L3);
    std::vector<Matrix> gens;
    for (const auto& g : all_generators(3)) {
        const Matrix &x = a.matrix(g), &y = b.matrix(g);
        Matrix z(x.rows() + y.rows(), x.cols() + y.cols());
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
        for (int i = 0; i < y.rows(); ++i)
            for (int j = 0; j < y.cols(); ++j) z(x.rows() + i, x.cols() + j) = y(i, j);
        gens.push_back(z);
    }
    auto ctl = indecomposability_certificate(GradedModule::ungraded(L3.field(), a.dim() + b.dim(), gens));
    if (ctl.verdict != IndecomposabilityVerdict::Decomposable) o.fail("control not decomposable");
    if (o.ok) o.detail = "s = 3..12, control decomposes";
    return o;
}

Outcome c10() {
    Outcome o;
    int checked = 0;
    for (auto order : orders)
        for (int n : {3, 4})
            for (int m : {1, 2}) {
                RootSpec sp(3, order);
                Truncation t{n, m};
                auto a = d_square_check(t, sp);
                auto h = homomorphism_check(t, sp);
                checked += a.checked + h.checked;
                if (!a.ok()) o.fail(a.failures.front());
                if (!h.ok()) o.fail(h.failures.front());
            }
    if (o.ok) o.detail = std::to_string(checked) + " checks";
    return o;
}

Outcome c11() {
    Outcome o;
    for (int ell : {3, 5})
        for (int n : {2, 3, 4})
            for (int m : {1, 2}) {
                RootSpec sp(ell, RootOrder::Odd);
                auto r = cohomology(Truncation{n, m}, sp);
                const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(ell) + " m=" + std::to_string(m);
                if (!r.ok) o.fail(tag);
                for (int s = 0; s <= n; ++s)
                    if (r.h_dims[s] != oracle::choose(n, s)) o.fail(tag + " s=" + std::to_string(s));
                for (const auto& rep : r.representatives)
                    if (!rep.cocycle || !rep.nonzero_class) o.fail(tag + " representative");
            }
    if (o.ok) o.detail = "dim H^s = C(n,s)";
    return o;
}

Outcome c12() {
    Outcome o;
    for (auto order : orders)
        for (int n : {2, 3})
            for (int m : {1, 2}) {
                RootSpec sp(3, order);
                auto r = action_on_cohomology(Truncation{n, m}, sp);
                const std::string tag = sp.describe() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
                if (!r.ok) o.fail(tag);
                if (r.expect_trivial == r.some_negative) o.fail(tag + " signs");
            }
    if (o.ok) o.detail = "-1 only for the even order with odd m";
    return o;
}

Outcome c13() {
    Outcome o;
    int w = 0;
    for (int n : {2, 3}) {
        auto r = untruncated_exactness(n, L3, 6);
        w += r.weights_checked;
        if (!r.ok()) o.fail(r.failures.front());
    }
    if (o.ok) o.detail = std::to_string(w) + " weights";
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c14() {
    Outcome o;
    const std::string dir = QDIV_GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"socle_n3_l3_m2.json", {"--n", "3", "--ell", "3", "--root", "odd", "--m", "2", "--format", "json", "socle"}},
        {"loewy_n3_l3_m2.json", {"--n", "3", "--ell", "3", "--root", "odd", "--m", "2", "--format", "json", "loewy"}},
        {"cohomology_n3_l3_m1.json", {"--n", "3", "--ell", "3", "--root", "odd", "--m", "1", "--format", "json", "cohomology"}},
        {"cohomology_n3_l3_even_m1.json",
         {"--n", "3", "--ell", "3", "--root", "even", "--m", "1", "--format", "json", "cohomology"}},
    };
    for (const auto& [file, args] : cases) {
        std::ostringstream a, b, e;
        const int ra = cli::run(args, a, e), rb = cli::run(args, b, e);
        if (ra != 0 || rb != 0) o.fail(file + " exit code");
        if (a.str() != b.str()) o.fail(file + " differs between runs");
        const std::string golden = slurp(dir + "/" + file);
        if (golden.empty()) o.fail(file + " missing");
        else if (golden != a.str()) o.fail(file + " differs from golden");
    }
    if (o.ok) o.detail = std::to_string(cases.size()) + " golden reports";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
        {"q-binomial consistency", c1}, {"dimension formulas", c2},  {"restricted relations", c3},
        {"simplicity", c4},             {"energy bounds", c5},       {"socle", c6},
        {"Loewy layers", c7},           {"rigidity", c8},            {"indecomposability", c9},
        {"d^2 = 0 and d is a module map", c10}, {"cohomology dimensions", c11}, {"sign-triviality", c12},
        {"untruncated exactness", c13}, {"determinism", c14},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %zu: %s (%s) [%.1fs]\n", o.ok ? "PASS" : "FAIL", i + 1, all[i].first.c_str(), o.detail.c_str(), secs);
        if (!o.ok) ++failed;
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
