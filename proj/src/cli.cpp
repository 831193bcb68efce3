#include "monores/cli.hpp"

#include "monores/chain_complex.hpp"
#include "monores/dg_algebra.hpp"
#include "monores/errors.hpp"
#include "monores/homotopy.hpp"
#include "monores/io.hpp"
#include "monores/morse.hpp"
#include "monores/resolutions.hpp"
#include "monores/shamash.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace monores {

bool Certificate::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.pass; });
}

nlohmann::ordered_json Certificate::to_json() const {
    nlohmann::ordered_json out;
    out["command"] = command;
    out["inputs_digest"] = inputs_digest;
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["identity"] = c.identity;
        j["pass"] = c.pass;
        if (!c.witness.is_null()) {
            j["witness"] = c.witness;
        }
        out["checks"].push_back(std::move(j));
    }
    out["pass"] = pass();
    out["tool_version"] = tool_version;
    return out;
}

std::string Certificate::to_text() const {
    std::ostringstream out;
    out << "certificate: " << command << '\n';
    out << "inputs sha256: " << inputs_digest << '\n';
    out << "tool version: " << tool_version << '\n';
    for (const auto& c : checks) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.identity << '\n';
        if (!c.witness.is_null()) {
            out << "       witness: " << c.witness.dump() << '\n';
        }
    }
    out << "result: " << (pass() ? "pass" : "FAIL") << '\n';
    return out.str();
}

namespace {

enum class Format { text, json };

struct Options {
    std::string ideal_path;
    std::string format = "text";
    std::string indices;
    std::string order;
    std::string matching_path;
    std::string complex_path;
    std::string ci_path;
    std::string what;
    std::string strand_bound;
    std::size_t truncate = 6;
    std::size_t r = 1;
    std::size_t max_degree = 6;
    bool trust_regular = false;
};

struct Session {
    Options opt;
    Limits limits = Limits::from_environment();
    std::string inputs;  // concatenated input bytes for the digest
    std::ostream& out;

    Format format() const { return opt.format == "json" ? Format::json : Format::text; }

    MonomialIdeal ideal() {
        const std::string text = read_file(opt.ideal_path);
        inputs += text;
        MonomialIdeal ideal = parse_ideal(text);
        ideal.require_within(limits);
        return ideal;
    }

    std::string load(const std::string& path) {
        std::string text = read_file(path);
        inputs += '\0';
        inputs += text;
        return text;
    }

    IndexSet index_set() const {
        const auto list = parse_index_list(opt.indices);
        return IndexSet(std::span<const std::size_t>(list));
    }

    void emit(const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }
};

nlohmann::ordered_json cells_json(const std::vector<IndexSet>& cells) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (IndexSet c : cells) {
        out.push_back(c.members());
    }
    return out;
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k == 0 ? "" : sep) + std::to_string(v[k]);
    }
    return out;
}

void print_complex(Session& s, const BasedComplex& c, const MonomialIdeal& ideal, nlohmann::ordered_json extra = {}) {
    if (s.format() == Format::json) {
        if (extra.is_null()) {
            s.emit(complex_to_json(c));
            return;
        }
        extra["complex"] = complex_to_json(c);
        s.emit(extra);
    } else {
        s.out << complex_to_text(c, ideal.variables());
    }
}

// Which complex a verify/homotopy/shamash call refers to.
enum class Kind { taylor, pivot, lyubeznik, morse, file };

Kind chosen_kind(const Options& o) {
    const int given = !o.indices.empty() + !o.order.empty() + !o.matching_path.empty() + !o.complex_path.empty();
    if (given > 1) {
        throw CLI::ValidationError("choose at most one of --indices, --order, --matching, --complex");
    }
    if (!o.indices.empty()) {
        return Kind::pivot;
    }
    if (!o.order.empty()) {
        return Kind::lyubeznik;
    }
    if (!o.matching_path.empty()) {
        return Kind::morse;
    }
    return o.complex_path.empty() ? Kind::taylor : Kind::file;
}

std::vector<std::size_t> order_or_natural(const Options& o, std::size_t q) {
    if (o.order.empty()) {
        std::vector<std::size_t> natural(q);
        for (std::size_t i = 0; i < q; ++i) {
            natural[i] = i + 1;
        }
        return natural;
    }
    return parse_index_list(o.order);
}

BasedComplex chosen_complex(Session& s, const MonomialIdeal& ideal, Kind kind) {
    switch (kind) {
    case Kind::taylor:
        return taylor_resolution(ideal, s.limits);
    case Kind::pivot:
        return pivot_complex(ideal, s.index_set(), s.limits);
    case Kind::lyubeznik:
        return morse_resolution(ideal, lyubeznik_matching(ideal, order_or_natural(s.opt, ideal.num_generators()), s.limits),
                                s.limits);
    case Kind::morse:
        return morse_resolution(ideal, parse_matching(s.load(s.opt.matching_path)), s.limits);
    case Kind::file:
        return complex_from_json(nlohmann::json::parse(s.load(s.opt.complex_path)));
    }
    throw std::logic_error("unreachable");
}

int finish(Session& s, const Certificate& cert) {
    if (s.format() == Format::json) {
        s.emit(cert.to_json());
    } else {
        s.out << cert.to_text();
    }
    return cert.pass() ? 0 : 1;
}

Certificate new_certificate(Session& s, const std::string& command) {
    Certificate cert;
    cert.command = command;
    cert.inputs_digest = sha256_hex(s.inputs);
    return cert;
}

void add_d_squared(Certificate& cert, const BasedComplex& c, const MonomialIdeal& ideal) {
    const D2Report d2 = check_d_squared(c);
    CertificateCheck check{"d_{i-1} d_i = 0 for every i (exact polynomial arithmetic)", d2.pass, nullptr};
    if (d2.first_failure) {
        check.witness = {{"degree", d2.first_failure->degree},
                         {"row", d2.first_failure->row},
                         {"col", d2.first_failure->col},
                         {"value", d2.value.to_string(ideal.variables())}};
    }
    cert.checks.push_back(std::move(check));
    const auto graded = check_multigraded(c);
    CertificateCheck homogeneous{"every differential entry is homogeneous of degree deg(target) - deg(source)",
                                 !graded.has_value(), nullptr};
    if (graded) {
        homogeneous.witness = *graded;
    }
    cert.checks.push_back(std::move(homogeneous));
}

int verify_exactness(Session& s, Certificate& cert, const BasedComplex& c, const MonomialIdeal& ideal) {
    const ResolutionCertificate rc = is_resolution(c, ideal, s.limits);
    cert.checks.push_back({"d^2 = 0", rc.d_squared_zero, nullptr});
    CertificateCheck exact{"H_i = 0 for i >= 1 on all " + std::to_string(rc.strands_checked) +
                               " strands at lcm-lattice multidegrees (other strands are isomorphic to these)",
                           rc.is_resolution, nullptr};
    if (!rc.failures.empty()) {
        exact.witness = nlohmann::ordered_json::array();
        for (const ExactnessFailure& f : rc.failures) {
            nlohmann::ordered_json cycle = nlohmann::ordered_json::array();
            for (const auto& [index, coefficient] : f.witness) {
                cycle.push_back({{"cell", c.basis(f.homological_degree)[index].cell.members()},
                                 {"coefficient", coefficient.to_string(ideal.variables())}});
            }
            exact.witness.push_back({{"multidegree", ideal.format(f.degree)},
                                     {"homological_degree", f.homological_degree},
                                     {"dimension", f.dimension},
                                     {"cycle_not_boundary", cycle}});
        }
    }
    cert.checks.push_back(std::move(exact));
    return finish(s, cert);
}

void add_dg(Certificate& cert, const DGReport& report) {
    for (const AxiomCheck& a : report.checks) {
        CertificateCheck check{a.name + " (" + std::to_string(a.cases) + " cases)", a.pass, nullptr};
        if (!a.pass) {
            check.witness = cells_json(a.witness);
        }
        cert.checks.push_back(std::move(check));
    }
}

void add_homotopy(Certificate& cert, const HomotopyReport& report) {
    for (const IdentityCheck& c : report.checks) {
        CertificateCheck check{c.name, c.pass, nullptr};
        if (c.first_failure) {
            check.witness = {{"source_degree", c.first_failure->degree},
                             {"row", c.first_failure->row},
                             {"col", c.first_failure->col}};
        }
        cert.checks.push_back(std::move(check));
    }
}

HomotopySystem chosen_homotopy(Session& s, const MonomialIdeal& ideal, const CIData& ci, Kind kind) {
    if (kind == Kind::pivot) {
        return pivot_homotopy(ideal, s.index_set(), ci, s.limits);
    }
    if (kind == Kind::taylor) {
        return taylor_homotopy(ideal, ci, s.limits);
    }
    throw CLI::ValidationError("homotopies are available for the Taylor resolution and pivot resolutions only");
}

CIData load_ci(Session& s, const MonomialIdeal& ideal) {
    if (s.opt.ci_path.empty()) {
        throw CLI::ValidationError("--ci FILE is required");
    }
    return parse_ci(s.load(s.opt.ci_path), ideal);
}

int cmd_verify(Session& s) {
    const MonomialIdeal ideal = s.ideal();
    const Kind kind = chosen_kind(s.opt);
    if (s.opt.what == "dg") {
        if (kind != Kind::taylor && kind != Kind::pivot) {
            throw CLI::ValidationError("--what dg applies to the Taylor resolution or a pivot resolution");
        }
        Certificate cert = new_certificate(s, "verify dg");
        if (kind == Kind::taylor) {
            add_dg(cert, verify_dg_axioms(TaylorAlgebra(ideal, s.limits)));
        } else {
            add_dg(cert, verify_dg_axioms(PivotAlgebra(ideal, s.index_set(), PivotProductSign::corrected, s.limits)));
        }
        return finish(s, cert);
    }
    if (s.opt.what == "homotopy") {
        const CIData ci = load_ci(s, ideal);
        const HomotopySystem h = chosen_homotopy(s, ideal, ci, kind);
        Certificate cert = new_certificate(s, "verify homotopy");
        add_homotopy(cert, verify_homotopy(h, ci));
        return finish(s, cert);
    }
    const BasedComplex c = chosen_complex(s, ideal, kind);
    Certificate cert = new_certificate(s, "verify " + s.opt.what);
    if (s.opt.what == "d2") {
        add_d_squared(cert, c, ideal);
        return finish(s, cert);
    }
    return verify_exactness(s, cert, c, ideal);
}

int cmd_homotopy(Session& s) {
    const MonomialIdeal ideal = s.ideal();
    const CIData ci = load_ci(s, ideal);
    const Kind kind = chosen_kind(s.opt);
    const HomotopySystem h = chosen_homotopy(s, ideal, ci, kind);
    const HomotopyReport report = verify_homotopy(h, ci);
    Certificate cert = new_certificate(s, "homotopy");
    add_homotopy(cert, report);
    if (s.format() == Format::json) {
        nlohmann::ordered_json j;
        j["complex"] = complex_to_json(h.complex);
        j["sigma"] = nlohmann::ordered_json::array();
        for (std::size_t index = 1; index <= h.r(); ++index) {
            nlohmann::ordered_json maps = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < h.complex.length(); ++k) {
                const PolyMatrix& m = h.map(index, k);
                nlohmann::ordered_json entries = nlohmann::ordered_json::array();
                for (const auto& [where, value] : m.entries()) {
                    entries.push_back({{"row", where.first}, {"col", where.second}, {"poly", polynomial_to_json(value)}});
                }
                maps.push_back({{"source_degree", k}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
            }
            j["sigma"].push_back(std::move(maps));
        }
        j["certificate"] = cert.to_json();
        s.emit(j);
    } else {
        for (std::size_t index = 1; index <= h.r(); ++index) {
            for (std::size_t k = 0; k < h.complex.length(); ++k) {
                for (std::size_t col = 0; col < h.complex.rank(k); ++col) {
                    ChainElement image;
                    for (const auto& [row, value] : h.map(index, k).column(col)) {
                        image.add(h.complex.basis(k + 1)[row].cell, value);
                    }
                    if (!image.is_zero()) {
                        s.out << "sigma_" << index << "(e" << h.complex.basis(k)[col].cell.to_string()
                              << ") = " << image.to_string(ideal.variables()) << '\n';
                    }
                }
            }
        }
        s.out << cert.to_text();
    }
    return cert.pass() ? 0 : 1;
}

Multidegree parse_bound(const std::string& text, std::size_t nvars) {
    const auto list = parse_index_list(text);
    if (list.size() != nvars) {
        throw CLI::ValidationError("--strand-bound needs one exponent per variable");
    }
    std::vector<unsigned> exps(list.begin(), list.end());
    return Multidegree(exps);
}

int cmd_shamash(Session& s) {
    const MonomialIdeal ideal = s.ideal();
    const CIData ci = load_ci(s, ideal);
    Kind kind = chosen_kind(s.opt);
    HomotopySystem h;
    std::string base = "Taylor resolution";
    if (kind == Kind::taylor) {
        if (const auto smallest = smallest_pivot_indices(ideal, s.limits)) {
            h = pivot_homotopy(ideal, *smallest, ci, s.limits);
            base = "pivot resolution T_" + smallest->to_string();
        } else {
            h = taylor_homotopy(ideal, ci, s.limits);
        }
    } else {
        h = chosen_homotopy(s, ideal, ci, kind);
        base = "pivot resolution T_" + s.index_set().to_string();
    }
    Certificate cert = new_certificate(s, "shamash");
    const HomotopyReport hr = verify_homotopy(h, ci);
    add_homotopy(cert, hr);
    if (!hr.pass) {
        return finish(s, cert);
    }
    const ShamashComplex sh = shamash_complex(h, ci, s.opt.truncate);
    const ShamashSquareReport sq = check_shamash_square(sh, ci);
    CertificateCheck square{"delta^2 = sum_s a_s * (t_s contraction) over Q, so delta^2 = 0 modulo (a_1..a_r)",
                            sq.pass, nullptr};
    if (sq.first_failure) {
        square.witness = {{"degree", sq.first_failure->degree}, {"row", sq.first_failure->row},
                          {"col", sq.first_failure->col}};
    }
    cert.checks.push_back(std::move(square));
    CertificateCheck ranks{"rank in degree i = sum_{2d+k=i} binom(r+d-1, r-1) rank F_k", true, nullptr};
    for (std::size_t i = 0; i <= s.opt.truncate; ++i) {
        if (sh.ranks()[i] != shamash_rank(h.complex.ranks(), ci.r(), i)) {
            ranks.pass = false;
            ranks.witness = {{"degree", i}};
            break;
        }
    }
    cert.checks.push_back(std::move(ranks));
    if (!s.opt.strand_bound.empty()) {
        const RExactnessReport ex =
            check_exactness_over_monomial_ci(sh, ci, parse_bound(s.opt.strand_bound, ideal.nvars()));
        CertificateCheck exact{"strand homology over R vanishes in degrees 1..N-1 up to the multidegree bound",
                               ex.applicable && ex.pass, nullptr};
        if (!ex.applicable) {
            exact.witness = "needs each a_s to be a scalar times a monomial, pairwise coprime";
        } else if (ex.failing_degree) {
            exact.witness = {{"multidegree", ideal.format(*ex.failing_degree)},
                             {"homological_degree", ex.failing_homological_degree}};
        } else {
            exact.witness = {{"strands_checked", ex.strands_checked}};
        }
        cert.checks.push_back(std::move(exact));
    }
    const std::string regular = s.opt.trust_regular
                                    ? "assumed (--trust-regular)"
                                    : "not verified; exactness over R relies on it (pass --trust-regular to acknowledge)";
    if (s.format() == Format::json) {
        nlohmann::ordered_json j;
        j["base"] = base;
        j["truncation"] = s.opt.truncate;
        j["ranks"] = sh.ranks();
        j["regular_sequence"] = regular;
        j["certificate"] = cert.to_json();
        s.emit(j);
    } else {
        s.out << "base: " << base << '\n';
        s.out << "ranks: " << join(sh.ranks(), " ") << '\n';
        s.out << "regular sequence: " << regular << '\n';
        s.out << cert.to_text();
    }
    return cert.pass() ? 0 : 1;
}

int cmd_bounds(Session& s) {
    const MonomialIdeal ideal = s.ideal();
    const auto scarf = scarf_number(ideal, s.limits);
    const std::size_t q = ideal.num_generators();
    if (!scarf) {
        s.out << (s.format() == Format::json ? "{\"scarf_number\": \"inf\", \"bounds\": null}\n"
                                             : "scarf number is infinite; the Taylor resolution is minimal\n");
        return 1;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream text;
    text << "scarf number " << *scarf << ", q = " << q << ", r = " << s.opt.r << '\n';
    text << "degree  literal  structural\n";
    for (std::size_t n = 0; n <= s.opt.max_degree; ++n) {
        const auto literal = betti_bound(q, *scarf, s.opt.r, n, BoundMode::paper_literal);
        const auto structural = betti_bound(q, *scarf, s.opt.r, n, BoundMode::structural);
        rows.push_back({{"degree", n}, {"paper_literal", literal}, {"structural", structural}});
        text << n << "  " << literal << "  " << structural << (literal < structural ? "  literal < structural" : "")
             << '\n';
    }
    if (s.format() == Format::json) {
        s.emit({{"scarf_number", *scarf}, {"q", q}, {"r", s.opt.r}, {"bounds", rows}});
    } else {
        s.out << text.str();
    }
    return 0;
}

nlohmann::ordered_json matching_json(const MorseMatching& m) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const MorseEdge& e : m.edges()) {
        edges.push_back({{"upper", e.upper.members()}, {"lower", e.lower.members()}});
    }
    return {{"edges", edges}};
}

int run(Session& s, const std::string& command) {
    if (command == "taylor") {
        const MonomialIdeal ideal = s.ideal();
        print_complex(s, taylor_resolution(ideal, s.limits), ideal);
        return 0;
    }
    if (command == "pivot") {
        const MonomialIdeal ideal = s.ideal();
        print_complex(s, pivot_complex(ideal, s.index_set(), s.limits), ideal);
        return 0;
    }
    if (command == "gaps") {
        const MonomialIdeal ideal = s.ideal();
        const IndexSet tau = s.index_set();
        const auto gaps = find_gaps(ideal, tau);
        if (s.format() == Format::json) {
            s.emit({{"indices", tau.members()}, {"gaps", gaps}});
        } else {
            s.out << (gaps.empty() ? "none" : join(gaps, ",")) << '\n';
        }
        return gaps.empty() ? 1 : 0;
    }
    if (command == "scarf") {
        const auto scarf = scarf_number(s.ideal(), s.limits);
        if (s.format() == Format::json) {
            s.emit({{"scarf_number", scarf ? nlohmann::ordered_json(*scarf) : nlohmann::ordered_json("inf")}});
        } else {
            s.out << (scarf ? std::to_string(*scarf) : "inf") << '\n';
        }
        return 0;
    }
    if (command == "smallest-pivot") {
        const auto smallest = smallest_pivot_indices(s.ideal(), s.limits);
        if (s.format() == Format::json) {
            s.emit({{"indices", smallest ? nlohmann::ordered_json(smallest->members()) : nlohmann::ordered_json()}});
        } else {
            s.out << (smallest ? join(smallest->members(), ",") : "none") << '\n';
        }
        return smallest ? 0 : 1;
    }
    if (command == "betti") {
        const MinimalizeResult m = minimalize(taylor_resolution(s.ideal(), s.limits));
        if (s.format() == Format::json) {
            s.emit({{"betti", m.betti}, {"cancellations", m.cancellations}});
        } else {
            s.out << join(m.betti, " ") << '\n';
        }
        return 0;
    }
    if (command == "lyubeznik") {
        const MonomialIdeal ideal = s.ideal();
        const MorseMatching m = lyubeznik_matching(ideal, order_or_natural(s.opt, ideal.num_generators()), s.limits);
        if (s.format() == Format::text) {
            s.out << "matching:";
            for (const MorseEdge& e : m.edges()) {
                s.out << ' ' << e.upper.to_string() << "->" << e.lower.to_string();
            }
            s.out << '\n';
        }
        print_complex(s, morse_resolution(ideal, m, s.limits), ideal, {{"matching", matching_json(m)}});
        return 0;
    }
    if (command == "morse") {
        const MonomialIdeal ideal = s.ideal();
        const MorseMatching m = parse_matching(s.load(s.opt.matching_path));
        const MatchingReport report = validate_matching(ideal, m, s.limits);
        if (!report.valid) {
            if (s.format() == Format::json) {
                s.emit({{"valid", false}, {"condition", report.failed_condition}, {"message", report.message}});
            } else {
                s.out << "invalid matching (condition " << report.failed_condition << "): " << report.message << '\n';
            }
            return 1;
        }
        print_complex(s, morse_resolution(ideal, m, s.limits), ideal);
        return 0;
    }
    if (command == "verify") {
        return cmd_verify(s);
    }
    if (command == "homotopy") {
        return cmd_homotopy(s);
    }
    if (command == "shamash") {
        return cmd_shamash(s);
    }
    return cmd_bounds(s);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Resolutions of monomial ideals with exact certificates", "monores"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("ideal", opt.ideal_path, "ideal file")->required();
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    std::vector<CLI::App*> subs;
    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s);
        subs.push_back(s);
        return s;
    };
    sub("taylor", "Taylor resolution");
    sub("pivot", "pivot complex T_S")->add_option("--indices", opt.indices, "S, e.g. 1,2")->required();
    sub("gaps", "gaps of an index set")->add_option("--indices", opt.indices, "index set")->required();
    sub("scarf", "Scarf number");
    sub("smallest-pivot", "lexicographically least pivot set of minimal size");
    sub("betti", "Betti numbers by minimalization of the Taylor resolution");
    sub("lyubeznik", "Lyubeznik resolution")->add_option("--order", opt.order, "generator order, strongest first");
    sub("morse", "Morse resolution of a matching")
        ->add_option("--matching", opt.matching_path, "matching JSON file")
        ->required();
    CLI::App* verify = sub("verify", "certify a construction");
    verify->add_option("--what", opt.what, "identity family")
        ->required()
        ->check(CLI::IsMember({"d2", "exactness", "dg", "homotopy"}));
    verify->add_option("--indices", opt.indices, "use the pivot complex T_S");
    verify->add_option("--order", opt.order, "use the Lyubeznik resolution for this order");
    verify->add_option("--matching", opt.matching_path, "use the Morse resolution of this matching");
    verify->add_option("--complex", opt.complex_path, "use a serialized complex (JSON)");
    verify->add_option("--ci", opt.ci_path, "complete intersection file");
    CLI::App* homotopy = sub("homotopy", "higher homotopies for a complete intersection");
    homotopy->add_option("--ci", opt.ci_path, "complete intersection file")->required();
    homotopy->add_option("--indices", opt.indices, "pivot set S (default: Taylor)");
    CLI::App* shamash = sub("shamash", "Eisenbud-Shamash complex");
    shamash->add_option("--ci", opt.ci_path, "complete intersection file")->required();
    shamash->add_option("--truncate", opt.truncate, "top homological degree N");
    shamash->add_option("--indices", opt.indices, "pivot set S (default: smallest pivot, else Taylor)");
    shamash->add_flag("--trust-regular", opt.trust_regular, "acknowledge that a_1..a_r is a regular sequence");
    shamash->add_option("--strand-bound", opt.strand_bound, "check exactness over R up to this multidegree");
    CLI::App* bounds = sub("bounds", "Betti bounds over the complete intersection");
    bounds->add_option("--r", opt.r, "number of complete intersection elements")->required();
    bounds->add_option("--max-degree", opt.max_degree, "largest homological degree listed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::string command;
    for (CLI::App* s : subs) {
        if (s->parsed()) {
            command = s->get_name();
        }
    }
    Session session{opt, Limits::from_environment(), {}, out};
    try {
        return run(session, command);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const contract_error& e) {
        err << "precondition failed: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace monores
