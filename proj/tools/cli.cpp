#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiv/derham.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/loewy.hpp"
#include "qdiv/qarith.hpp"

namespace qdiv::cli {

using json = nlohmann::json;

namespace {

struct Config {
    int n = 3;
    int ell = 3;
    std::string root = "odd";
    int m = 1;
    std::optional<long> s;
    std::string format = "table";
    std::string out;
    int budget = 6;
    long qm = 0, qr = 0;
};

struct Report {
    json result = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    bool ok = true;
};

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string str(long v) { return std::to_string(v); }

std::string joined(const std::vector<MultiIndex>& as) {
    std::string out;
    for (const auto& a : as) out += (out.empty() ? "" : " ") + to_string(a);
    return out;
}

template <class T>
std::string join_nums(const std::vector<T>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

RootSpec make_spec(const Config& c) {
    return RootSpec(c.ell, c.root == "even" ? RootOrder::Even : RootOrder::Odd);
}

void need(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

std::vector<long> degrees(const Config& c, const Truncation& t, const RootSpec& spec) {
    const long top = t.top_degree(spec.ell());
    if (c.s) {
        if (*c.s < 0 || *c.s > top) throw DegreeOutOfRange("--s must lie in 0.." + str(top));
        return {*c.s};
    }
    std::vector<long> out;
    for (long s = 0; s <= top; ++s) out.push_back(s);
    return out;
}

// --- commands -------------------------------------------------------------------

Report cmd_qbinom(const Config& c) {
    const RootSpec spec = make_spec(c);
    Report r;
    const CycScalar v = q_binomial(c.qm, c.qr, spec);
    const CycScalar rec = q_binomial_recursive(c.qm, c.qr, spec);
    r.header = {"quantity", "value"};
    r.rows.push_back({"product", v.to_string()});
    r.rows.push_back({"recursion", rec.to_string()});
    r.result["m"] = c.qm;
    r.result["r"] = c.qr;
    r.result["value"] = v.to_string();
    r.result["recursion"] = rec.to_string();
    bool agree = v == rec;
    if (c.qr >= 0 && c.qr <= c.qm) {
        const CycScalar lf = lusztig_factor(c.qm, c.qr, spec);
        r.rows.push_back({"factorization", lf.to_string()});
        r.result["factorization"] = lf.to_string();
        agree = agree && lf == v;
    } else {
        r.result["factorization"] = nullptr;
    }
    r.rows.push_back({"agree", yn(agree)});
    r.result["agree"] = agree;
    r.ok = agree;
    return r;
}

Report cmd_dims(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    Report r;
    r.header = {"s", "basis", "polynomial", "alternating", "ok"};
    json rows = json::array();
    std::vector<long> ss;
    if (t.truncated()) {
        ss = degrees(c, t, spec);
    } else {
        need(c.s.has_value(), "the untruncated algebra needs --s");
        need(*c.s >= 0, "--s must be nonnegative");
        ss = {*c.s};
    }
    for (long s : ss) {
        const long enumerated = static_cast<long>(component_basis(s, t, spec).size());
        long poly, alt;
        if (t.truncated()) {
            poly = dim_by_polynomial(c.n, c.m * c.ell, s);
            alt = dim_by_alternating_sum(c.n, c.m * c.ell, s);
        } else {
            poly = alt = binomial(c.n + s - 1, c.n - 1).get_si();
        }
        const bool ok = enumerated == poly && poly == alt;
        r.ok = r.ok && ok;
        r.rows.push_back({str(s), str(enumerated), str(poly), str(alt), yn(ok)});
        rows.push_back({{"s", s}, {"basis", enumerated}, {"polynomial", poly}, {"alternating", alt}, {"ok", ok}});
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_edeg(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 2, "edeg needs --m >= 2");
    Report r;
    r.header = {"s", "E0", "E", "scan_E0", "scan_E", "case", "case_ok"};
    json rows = json::array();
    for (long s : degrees(c, t, spec)) {
        const EBounds b = e_bounds(s, t, spec);
        const EBounds bf = e_bounds_bruteforce(s, t, spec);
        json row = {{"s", s}, {"e0", b.e0}, {"etop", b.etop}, {"scan_e0", bf.e0}, {"scan_etop", bf.etop}};
        bool ok = b == bf;
        std::string case_no = "-", case_ok = "-";
        if (c.n >= 3) {
            const EnergyCaseCheck cc = check_energy_cases(s, t, spec);
            ok = ok && cc.ok;
            case_no = str(cc.case_no);
            case_ok = yn(cc.ok);
            row["case"] = cc.case_no;
            row["case_notes"] = cc.notes;
            for (const auto& note : cc.notes)
                if (!cc.ok) r.notes.push_back("s=" + str(s) + " " + note);
        }
        row["ok"] = ok;
        r.ok = r.ok && ok;
        r.rows.push_back({str(s), str(b.e0), str(b.etop), str(bf.e0), str(bf.etop), case_no, case_ok});
        rows.push_back(row);
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_socle(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 1, "socle needs --m >= 1");
    need(c.n >= 3, "socle needs --n >= 3");
    Report r;
    r.header = {"s", "dim", "socle", "min_energy", "equal", "generated", "generators"};
    json rows = json::array();
    for (long s : degrees(c, t, spec)) {
        ComponentSpace comp(t, s, spec);
        const GradedSubspace soc = socle_oracle(comp);
        const auto minimal = socle_basis(s, t, spec);
        const GradedSubspace span = comp.monomial_span(minimal);
        const long e0 = e_bounds_bruteforce(s, t, spec).e0;
        std::vector<MultiIndex> gens;
        for (const auto& k : kappa_tuples(c.n, e0, c.m)) {
            MultiIndex eta = greedy_residue(c.n, s - e0 * c.ell, c.ell);
            for (int j = 0; j < c.n; ++j) eta[j] += c.ell * k[j];
            gens.push_back(eta);
        }
        const bool equal = soc == span;
        const bool generated = monomial_closure(gens, comp) == soc;
        r.ok = r.ok && equal && generated;
        r.rows.push_back({str(s), str(comp.dim()), str(soc.dim()), str(span.dim()), yn(equal), yn(generated), joined(gens)});
        rows.push_back({{"s", s}, {"dim", comp.dim()}, {"socle_dim", soc.dim()}, {"min_energy_dim", span.dim()},
                        {"equal", equal}, {"generated", generated}, {"generators", gens}});
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_loewy(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 1, "loewy needs --m >= 1");
    need(c.n >= 3, "loewy needs --n >= 3");
    Report r;
    r.header = {"s", "layer", "s_i", "mult", "simple_dim", "layer_dim", "semisimple", "primitive_ok", "generators_ok", "primitive"};
    json rows = json::array();
    for (long s : degrees(c, t, spec)) {
        const FiltrationReport f = loewy_filtration(s, t, spec);
        r.ok = r.ok && f.ok;
        json layers = json::array();
        for (const auto& L : f.layers) {
            r.rows.push_back({str(s), str(L.i), str(L.s_i), str(L.multiplicity), str(L.simple_dim), str(L.layer_dim),
                              yn(L.semisimple), yn(L.primitive_ok), yn(L.generators_ok), joined(L.primitive)});
            layers.push_back({{"i", L.i},
                              {"s_i", L.s_i},
                              {"multiplicity", L.multiplicity},
                              {"multiplicity_enumerated", L.multiplicity_enum},
                              {"simple_dim", L.simple_dim},
                              {"layer_dim", L.layer_dim},
                              {"closed", L.closed},
                              {"semisimple", L.semisimple},
                              {"primitive_ok", L.primitive_ok},
                              {"generators_ok", L.generators_ok},
                              {"primitive", L.primitive}});
        }
        json links = json::array();
        for (const auto& l : f.links) {
            links.push_back({{"from_layer", l.from_layer}, {"to_layer", l.to_layer}, {"from", l.from}, {"to", l.to}});
            r.notes.push_back("s=" + str(s) + " link " + to_string(l.from) + " -> " + to_string(l.to));
        }
        rows.push_back({{"s", s},
                        {"e0", f.bounds.e0},
                        {"etop", f.bounds.etop},
                        {"dim", f.total_dim},
                        {"layers", layers},
                        {"links", links},
                        {"ok", f.ok}});
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_rigidity(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 1, "rigidity needs --m >= 1");
    need(c.n >= 3, "rigidity needs --n >= 3");
    Report r;
    r.header = {"s", "length", "socle_series", "radical_series", "energy", "rigid", "commutant", "verdict"};
    json rows = json::array();
    for (long s : degrees(c, t, spec)) {
        const RigidityReport rg = rigidity_check(s, t, spec);
        ComponentSpace comp(t, s, spec);
        const IndecomposabilityCertificate ic = indecomposability_certificate(comp.module());
        const bool ok = rg.ok && ic.verdict == IndecomposabilityVerdict::Indecomposable;
        r.ok = r.ok && ok;
        const std::string comm = str(ic.commutant_dim) + "/" + str(ic.commutant_radical_dim);
        r.rows.push_back({str(s), str(rg.loewy_length), join_nums(rg.socle_dims), join_nums(rg.radical_dims),
                          join_nums(rg.energy_dims), yn(rg.ok), comm, to_string(ic.verdict)});
        rows.push_back({{"s", s},
                        {"loewy_length", rg.loewy_length},
                        {"socle_dims", rg.socle_dims},
                        {"radical_dims", rg.radical_dims},
                        {"energy_dims", rg.energy_dims},
                        {"socle_matches", rg.socle_matches},
                        {"radical_matches", rg.radical_matches},
                        {"commutant_dim", ic.commutant_dim},
                        {"commutant_radical_dim", ic.commutant_radical_dim},
                        {"verdict", to_string(ic.verdict)},
                        {"ok", ok}});
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_cohomology(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 1, "cohomology needs --m >= 1");
    Report r;
    const CohomologyReport co = cohomology(t, spec);
    const CohomologyActionReport act = action_on_cohomology(t, spec);
    r.ok = co.ok && act.ok;
    r.header = {"s", "forms", "kernel", "image", "h", "binomial"};
    json rows = json::array();
    for (int s = 0; s <= c.n; ++s) {
        r.rows.push_back({str(s), str(co.form_dims[s]), str(co.kernel_dims[s]), str(co.image_dims[s]), str(co.h_dims[s]),
                          str(co.predicted[s])});
        rows.push_back({{"s", s},
                        {"forms", co.form_dims[s]},
                        {"kernel", co.kernel_dims[s]},
                        {"image", co.image_dims[s]},
                        {"h", co.h_dims[s]},
                        {"binomial", co.predicted[s]}});
    }
    json classes = json::array();
    for (std::size_t k = 0; k < co.representatives.size(); ++k) {
        const auto& rep = co.representatives[k];
        const auto& ca = act.classes[k];
        std::string signs;
        for (int x : ca.k_signs) signs += (signs.empty() ? "" : ",") + std::string(x > 0 ? "+1" : x < 0 ? "-1" : "?");
        r.notes.push_back("class " + form_string(rep.term) + " cocycle=" + yn(rep.cocycle) + " nonzero=" +
                          yn(rep.nonzero_class) + " e,f->0=" + yn(ca.raising_zero && ca.lowering_zero) + " K=(" + signs + ")");
        classes.push_back({{"word", rep.word},
                           {"exponent", rep.term.first},
                           {"cocycle", rep.cocycle},
                           {"nonzero_class", rep.nonzero_class},
                           {"raising_zero", ca.raising_zero},
                           {"lowering_zero", ca.lowering_zero},
                           {"k_signs", ca.k_signs}});
    }
    r.notes.push_back("euler characteristic: forms " + str(co.euler_forms) + ", cohomology " + str(co.euler_h));
    r.result["degrees"] = rows;
    r.result["classes"] = classes;
    r.result["euler_forms"] = co.euler_forms;
    r.result["euler_cohomology"] = co.euler_h;
    r.result["trivial_expected"] = act.expect_trivial;
    r.result["negative_sign_seen"] = act.some_negative;
    return r;
}

Report cmd_identity(const Config& c) {
    const RootSpec spec = make_spec(c);
    const Truncation t{c.n, c.m};
    need(c.m >= 1, "identity needs --m >= 1");
    Report r;
    r.header = {"s", "lhs", "lhs_literal", "rhs", "rhs_literal", "kappa_ok", "ok"};
    json rows = json::array();
    for (long s : degrees(c, t, spec)) {
        const IdentityReport id = identity_check(s, t, spec);
        r.ok = r.ok && id.ok;
        r.rows.push_back({str(s), str(id.lhs_gaussian), str(id.lhs_literal), str(id.rhs), str(id.rhs_literal),
                          yn(id.kappa_counts_ok), yn(id.ok)});
        rows.push_back({{"s", s},
                        {"lhs", id.lhs_gaussian},
                        {"lhs_literal", id.lhs_literal},
                        {"rhs", id.rhs},
                        {"rhs_literal", id.rhs_literal},
                        {"kappa_ok", id.kappa_counts_ok},
                        {"ok", id.ok}});
    }
    r.result["degrees"] = rows;
    return r;
}

Report cmd_exactness(const Config& c) {
    const RootSpec spec = make_spec(c);
    Report r;
    const ExactnessReport ex = untruncated_exactness(c.n, spec, c.budget);
    r.ok = ex.ok();
    r.header = {"budget", "weights", "blocks", "failures"};
    r.rows.push_back({str(ex.budget), str(ex.weights_checked), str(ex.blocks_checked), str(ex.failures.size())});
    r.notes = ex.failures;
    r.result["budget"] = ex.budget;
    r.result["weights"] = ex.weights_checked;
    r.result["blocks"] = ex.blocks_checked;
    r.result["failures"] = ex.failures;
    return r;
}

// --- rendering ------------------------------------------------------------------

std::string render_table(const std::string& cmd, const Config& c, const Report& r) {
    std::ostringstream os;
    os << "# qdiv " << cmd << "  n=" << c.n << " ell=" << c.ell << " root=" << c.root << " m=" << c.m;
    if (c.s) os << " s=" << *c.s;
    os << "\n";
    std::vector<std::size_t> w(r.header.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = r.header[k].size();
    for (const auto& row : r.rows)
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = std::max(w[k], row[k].size());
    auto line = [&](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::string cell = row[k];
            if (k + 1 < w.size()) cell.resize(w[k], ' ');
            out += (k ? "  " : "") + cell;
        }
        os << out << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    for (const auto& n : r.notes) os << n << "\n";
    os << "status: " << (r.ok ? "ok" : "FAILED") << "\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
        os << "\r\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return os.str();
}

std::string render_json(const std::string& cmd, const Config& c, const Report& r) {
    json doc;
    doc["schema"] = "qdiv.report/1";
    doc["command"] = cmd;
    json cfg = {{"n", c.n}, {"ell", c.ell}, {"root", c.root}, {"m", c.m}};
    if (c.s) cfg["s"] = *c.s;
    if (cmd == "exactness") cfg["budget"] = c.budget;
    if (cmd == "qbinom") cfg["args"] = {c.qm, c.qr};
    doc["config"] = cfg;
    doc["result"] = r.result;
    doc["ok"] = r.ok;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Quantum divided power algebras at roots of unity: exact reports", "qdiv"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--n", c.n, "rank n (>= 2)")->capture_default_str();
    app.add_option("--ell", c.ell, "char(q) = ell (>= 3)")->capture_default_str();
    app.add_option("--root", c.root, "order of q: odd (q^ell = 1) or even (q^(2 ell) = 1)")
        ->check(CLI::IsMember({"odd", "even"}))
        ->capture_default_str();
    app.add_option("--m", c.m, "truncation level, 0 = untruncated")->capture_default_str();
    app.add_option("--s", c.s, "single degree");
    app.add_option("--format", c.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", c.out, "write the report to a file");
    app.add_option("--budget", c.budget, "largest |gamma| for exactness")->capture_default_str();

    auto* qb = app.add_subcommand("qbinom", "Gaussian binomial [m r] at q");
    qb->add_option("m", c.qm)->required();
    qb->add_option("r", c.qr)->required();
    const std::vector<std::pair<std::string, std::string>> plain = {
        {"dims", "component dimensions three ways"},
        {"edeg", "extremal energy degrees and the case analysis"},
        {"socle", "socle against the minimal-energy span"},
        {"loewy", "Loewy layers, primitive vectors and links"},
        {"rigidity", "socle and radical series, commutant verdict"},
        {"cohomology", "de Rham cohomology and its module structure"},
        {"identity", "the dimension identity from the layer decomposition"},
        {"exactness", "exactness of the untruncated complex by weight"}};
    for (const auto& [name, help] : plain) app.add_subcommand(name, help);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    Report r;
    try {
        if (c.n < 2) throw InvalidArgument("--n must be at least 2");
        if (c.m < 0) throw InvalidArgument("--m must be nonnegative");
        if (cmd == "qbinom") r = cmd_qbinom(c);
        else if (cmd == "dims") r = cmd_dims(c);
        else if (cmd == "edeg") r = cmd_edeg(c);
        else if (cmd == "socle") r = cmd_socle(c);
        else if (cmd == "loewy") r = cmd_loewy(c);
        else if (cmd == "rigidity") r = cmd_rigidity(c);
        else if (cmd == "cohomology") r = cmd_cohomology(c);
        else if (cmd == "identity") r = cmd_identity(c);
        else r = cmd_exactness(c);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 3;
    }

    std::string text = c.format == "json" ? render_json(cmd, c, r) : c.format == "csv" ? render_csv(r) : render_table(cmd, c, r);
    if (c.out.empty()) {
        out << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.out << "\n";
            return 2;
        }
        f << text;
    }
    if (!r.ok) {
        err << "invariant violated: " << cmd << " check failed\n";
        return 3;
    }
    return 0;
}

}  // namespace qdiv::cli
