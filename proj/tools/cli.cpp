#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "elliptic/diagram.hpp"
#include "elliptic/dual_complex.hpp"
#include "elliptic/euler.hpp"
#include "elliptic/fixtures.hpp"
#include "elliptic/graphic_checks.hpp"
#include "elliptic/graphic_io.hpp"
#include "elliptic/invariants.hpp"
#include "elliptic/pi1.hpp"
#include "elliptic/quaternion_groups.hpp"
#include "elliptic/tables.hpp"
#include "elliptic/torus_curves.hpp"
#include "elliptic/verify.hpp"

namespace elliptic::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Printer {
    std::ostream& out;
    Notation nt;

    void row(const std::string& key, const std::string& value) const { out << key << '\t' << value << '\n'; }
    std::string pick(const std::string& utf8, const std::string& ascii) const {
        return nt == Notation::utf8 ? utf8 : ascii;
    }
};

// invariants

struct InvariantsArgs {
    std::string kind;
    long m = 0;
    long k = 0;
    bool ascii = false;
};

int run_invariants(const InvariantsArgs& a, std::ostream& out) {
    Printer p{out, a.ascii ? Notation::ascii : Notation::utf8};
    if (a.kind == "lens") {
        LensSpace l = make_lens(a.m, a.k);
        auto iso = isometry_group_lens(l);
        auto diff = diff_homeo_type_lens(l);
        auto seifert = hopf_seifert_data(l);
        p.row("manifold", "L(" + std::to_string(l.m) + "," + std::to_string(l.q) + ")");
        p.row("Isom", iso.isom.render(p.nt));
        p.row(p.pick("π₀", "pi0"), iso.pi0.render(p.nt));
        if (auto c = iso.isom.component_count()) p.row("components", std::to_string(*c));
        p.row("Diff", diff.diff.render(p.nt));
        p.row("Seifert", "k=" + std::to_string(seifert.exceptional_order) + ", " +
                             std::to_string(seifert.exceptional_fibers) + " exceptional fibers");
        p.row("fiber", "(" + std::to_string(seifert.fiber_a) + "," + std::to_string(seifert.fiber_b) + ")");
        return ok;
    }
    require_klein_params(a.m, a.k);
    long m = a.m, n = a.k;
    auto isom = isom_Mmn(m, n, p.nt);
    auto orb = quotient_orbifold(m, n);
    auto diff = diff_homeo_type_klein(m, n);
    p.row("manifold", "M(" + std::to_string(m) + "," + std::to_string(n) + ")");
    p.row("type", to_string(klein_m_type(m, n)));
    p.row(p.pick("π₁", "pi1"), klein_pi1_name(m, n, p.nt));
    p.row("order", std::to_string(4 * m * n));
    if (m == 1) {
        auto lp = lens_identification(static_cast<int>(n));
        p.row("lens", "L(" + std::to_string(lp.p) + "," + std::to_string(lp.q) + ")");
    }
    p.row("Isom", isom.group.render(p.nt));
    p.row("realized as", isom.realized_as);
    p.row("Diff", diff.diff.render(p.nt));
    p.row(p.pick("h(π₁)", "h(pi1)"), orb.image.render(p.nt));
    p.row("orbifold", orb.orbifold.render(p.nt));
    p.row("Isom(O)", orb.isom.render(p.nt));
    if (orb.extrapolated) p.row("note", "orbifold row extended from m = 1, n > 1");
    return ok;
}

// pi1

int run_pi1(int m, int n, bool cayley, std::ostream& out) {
    Printer p{out, Notation::utf8};
    auto group = construct_pi1(m, n);
    auto rel = check_relations(m, n);
    auto iso = check_quaternionic_isomorphism(m, n);
    auto free = verify_free_action(group);
    p.row("group", "pi1(M(" + std::to_string(m) + "," + std::to_string(n) + "))");
    p.row("order", std::to_string(group.size()));
    p.row("embedding", to_string(group.embedding_case()));
    std::string failing;
    if (!rel.a_order) failing += " a^2m";
    if (!rel.b_order) failing += " b^4n";
    if (!rel.conjugation) failing += " bab^-1a";
    if (!rel.central) failing += " a^mb^2n";
    p.row("relations", failing.empty() ? "ok" : "failing:" + failing);
    p.row("associative", group.size() <= 600 ? yes_no(pi1_is_associative(m, n) && group.is_associative()) : "skipped");
    p.row("isomorphism", iso.ok() ? "ok" : "failed");
    p.row("free", free.free ? "yes" : "no: " + free.witness->description);
    if (m == 1) {
        auto lp = lens_identification(n);
        p.row("lens", "L(" + std::to_string(lp.p) + "," + std::to_string(lp.q) + ")");
    }
    if (cayley) {
        auto elems = pi1_elements(m, n);
        auto table = pi1_cayley_table(m, n);
        out << "*";
        for (const auto& e : elems) out << '\t' << e.to_string();
        out << '\n';
        for (std::size_t i = 0; i < elems.size(); ++i) {
            out << elems[i].to_string();
            for (std::size_t j : table[i]) out << '\t' << elems[j].to_string();
            out << '\n';
        }
    }
    return iso.ok() && rel.all() ? ok : contradiction;
}

// curves

struct CurveArgs {
    std::string kind = "klein";
    long m = 0;
    long k = 0;
    long p = 0;
    long q = 0;
    std::string side = "v";
};

SplittingContext context_of(const CurveArgs& a) {
    if (a.kind == "klein") return SplittingContext::klein(a.m, a.k);
    return SplittingContext::lens(a.m, a.k);
}

CurveClass class_of(const CurveArgs& a) {
    return {a.p, a.q, a.kind == "klein" ? Basis::klein_level : Basis::lens_heegaard};
}

Side side_of(const std::string& s) { return s == "v" ? Side::v : Side::w; }

std::string space_name(const CurveArgs& a) {
    return (a.kind == "klein" ? "M(" : "L(") + std::to_string(a.m) + "," + std::to_string(a.k) + ")";
}

int run_curve_test(const CurveArgs& a, bool meridian, std::ostream& out) {
    auto ctx = context_of(a);
    auto c = class_of(a);
    Side s = side_of(a.side);
    bool result = meridian ? is_meridian(c, ctx, s) : is_longitude(c, ctx, s);
    out << c.to_string() << '\t' << (meridian ? "meridian" : "longitude") << " of " << (s == Side::v ? "V" : "W")
        << " in " << space_name(a) << '\t' << yes_no(result) << '\n';
    return ok;
}

int run_curve_classify(const CurveArgs& a, std::ostream& out) {
    auto c = class_of(a);
    auto type = classify_level_pair(c, context_of(a));
    out << c.to_string() << '\t' << to_string(type) << '\n';
    return ok;
}

int run_bilongitude(long m, long q, std::ostream& out) {
    auto classes = bilongitude_classes(m, q);
    if (classes.empty()) out << "none\n";
    for (const auto& c : classes) out << c.to_string() << '\n';
    return ok;
}

int run_fibers(long m, long n, std::ostream& out) {
    auto r = longitudes_are_fibers_check(m, n);
    Printer p{out, Notation::utf8};
    p.row("a longitude", yes_no(r.a_is_longitude));
    p.row("b^2 longitude", yes_no(r.b2_is_longitude));
    p.row("level fibering", r.holds_for_level_fibering ? "holds" : "fails");
    if (m == 1 && n == 1) p.row("other fibering", r.holds_for_other_fibering ? "holds" : "fails");
    p.row("anomalous", yes_no(r.anomalous()));
    for (const auto& w : r.witnesses) p.row("witness", w);
    return ok;
}

int run_automorphisms(long m, long q, bool swap, long window, std::ostream& out) {
    auto r = level_automorphisms(m, q, swap, window);
    out << "solutions\t" << r.solutions.size() << '\n';
    for (const auto& s : r.solutions)
        out << "u=" << s.u << "\tv=" << s.v << "\teps=" << s.eps << '\n';
    return ok;
}

// euler

void print_trace(const FeasibilityTrace& t, std::ostream& out) {
    out << "feasible\t" << yes_no(t.feasible) << '\n';
    if (t.minimal_vertices) out << "minimal V\t" << t.minimal_vertices << '\n';
    for (const auto& s : t.steps) out << "step\t" << s << '\n';
}

int run_faces(const std::vector<long>& values, std::ostream& out) {
    long v = 0, e = 0;
    std::vector<long> faces;
    if (values.empty()) {
        auto fx = l21_flattened_fixture();
        v = fx.vertices;
        e = fx.edges;
        faces = fx.face_sizes;
        out << "fixture\tL(2,1) flattened torus (reconstructed)\n";
    } else {
        if (values.size() < 3) throw UsageError("faces needs V, E and at least one face size");
        v = values[0];
        e = values[1];
        faces.assign(values.begin() + 2, values.end());
    }
    auto a = flattened_face_audit(v, e, faces);
    auto list = [](const std::vector<std::size_t>& xs) {
        if (xs.empty()) return std::string("none");
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
        return s;
    };
    out << "V\t" << a.vertices << "\nE\t" << a.edges << "\nF\t" << a.faces << "\nchi\t" << a.euler_characteristic
        << "\nE = 2V\t" << yes_no(a.edge_count_ok) << "\nF <= V/2\t" << yes_no(a.face_bound_ok)
        << "\nface sum\t" << yes_no(a.face_sum_ok) << "\nodd faces\t" << list(a.odd_faces) << "\nbigons\t"
        << list(a.bigons) << "\npasses\t" << yes_no(a.passes()) << '\n';
    return ok;
}

// graphic

struct GraphicArgs {
    std::string target;
    std::string eps = "1/10";
    bool strong = false;
    bool strict_border = false;
};

void print_check(const std::string& name, const CheckReport& r, std::ostream& out) {
    std::string status = r.clean() ? "ok" : "";
    if (!r.violations.empty()) status += std::to_string(r.violations.size()) + " violations";
    if (!r.precondition_failures.empty())
        status += (status.empty() ? "" : ", ") + std::to_string(r.precondition_failures.size()) +
                  " precondition failures";
    if (!r.out_of_scope.empty()) status += ", " + std::to_string(r.out_of_scope.size()) + " out of scope";
    out << name << '\t' << status << '\n';
    for (const auto& f : r.violations) out << "  violation\t" << f.rule << '\t' << f.message << '\n';
    for (const auto& f : r.precondition_failures) out << "  precondition\t" << f.rule << '\t' << f.message << '\n';
    for (const auto& f : r.out_of_scope) out << "  out of scope\t" << f.rule << '\t' << f.message << '\n';
}

int report_graphic(const Graphic& g, const GraphicArgs& a, std::ostream& out) {
    Rational eps = parse_rational(a.eps);
    auto k = build_dual(g);
    auto verdict = diagram_map(k, g);
    out << verdict.summary();
    out << "vertices\t" << g.vertices().size() << "\nedges\t" << g.edges().size() << "\nregions\t"
        << g.regions().size() << '\n';
    print_check("labels", validate_labels(g, a.strong), out);
    print_check("border", check_border_labels(g, eps, a.strict_border ? BorderMode::capital_only : BorderMode::letter_class),
                out);
    print_check("rs2", check_rs2(g), out);
    print_check("rs3", check_rs3(g), out);
    auto audit = audit_dual(k, g);
    out << "dual\t" << (audit.ok() ? "ok" : "failed") << '\t' << k.cells0.size() << " 0-cells, " << k.cells1.size()
        << " 1-cells, " << k.cells2.size() << " 2-cells, chi " << k.euler_characteristic() << '\n';
    for (const auto& problem : audit.problems) out << "  problem\t" << problem << '\n';
    if (const auto* cert = std::get_if<ContradictionCertified>(&verdict.verdict)) {
        out << "recheck\t" << (recheck_certificate(*cert, k, g) ? "ok" : "failed") << '\n';
        return contradiction;
    }
    return ok;
}

// tables

int run_tables(const std::string& which, const std::string& format, bool ascii, std::ostream& out) {
    TableFormat f = format == "text" ? TableFormat::text : TableFormat::tsv;
    Notation nt = ascii ? Notation::ascii : Notation::utf8;
    if (!which.empty()) {
        auto id = parse_table_id(which);
        if (!id) throw UsageError("unknown table: " + which);
        out << render_table(*id, f, nt);
        return ok;
    }
    bool first = true;
    for (TableId id : all_tables()) {
        if (!first) out << '\n';
        first = false;
        out << "# " << table_name(id) << '\n' << render_table(id, f, nt);
    }
    return ok;
}

// verify

int run_verify(const std::string& suite, std::optional<long> max, std::ostream& out) {
    SuiteReport r;
    if (suite == "pi1") r = verify_pi1_suite(static_cast<int>(max.value_or(6)));
    else if (suite == "free-action") r = verify_free_action_suite(static_cast<int>(max.value_or(6)));
    else if (suite == "longitude") r = verify_longitude_suite(max.value_or(40));
    else if (suite == "bilongitude") r = verify_bilongitude_suite(max.value_or(500));
    else r = verify_euler_suite(max.value_or(100));
    out << r.name << '\t' << r.cases << " cases\t" << r.failures.size() << " failures\t" << (r.ok() ? "PASS" : "FAIL")
        << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
    return r.ok() ? ok : contradiction;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, curves and graphics for elliptic 3-manifolds", "elliptic"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* inv = app.add_subcommand("invariants", "Invariants of L(m,q) or M(m,n)");
    InvariantsArgs inv_args;
    inv->add_option("kind", inv_args.kind, "lens or klein")->required()->check(CLI::IsMember({"lens", "klein"}));
    inv->add_option("m", inv_args.m)->required();
    inv->add_option("q_or_n", inv_args.k)->required();
    inv->add_flag("--ascii", inv_args.ascii, "ASCII notation");
    inv->callback([&] { action = [&] { return run_invariants(inv_args, out); }; });

    auto* tables = app.add_subcommand("tables", "Render the isometry and Diff tables");
    std::string which, format = "tsv";
    bool tables_ascii = false;
    tables->add_option("--which", which, "lens, elliptic, klein-isom, orbifold or diff")
        ->check(CLI::IsMember({"lens", "elliptic", "klein-isom", "orbifold", "diff"}));
    tables->add_option("--format", format)->check(CLI::IsMember({"tsv", "text"}));
    tables->add_flag("--ascii", tables_ascii, "ASCII notation");
    tables->callback([&] { action = [&] { return run_tables(which, format, tables_ascii, out); }; });

    auto* pi1 = app.add_subcommand("pi1", "Fundamental group of M(m,n)");
    int pm = 0, pn = 0;
    bool cayley = false;
    pi1->add_option("m", pm)->required()->check(CLI::Range(1, 1000));
    pi1->add_option("n", pn)->required()->check(CLI::Range(1, 1000));
    pi1->add_flag("--cayley", cayley, "Print the Cayley table");
    pi1->callback([&] { action = [&] { return run_pi1(pm, pn, cayley, out); }; });

    auto* curves = app.add_subcommand("curves", "Curve classes on level and Heegaard tori");
    curves->require_subcommand(1);
    CurveArgs ca;
    auto add_curve_test = [&](const std::string& name, bool meridian) {
        auto* c = curves->add_subcommand(name, "Is (p,q) a " + name + " of one side");
        c->add_option("kind", ca.kind, "klein or lens")->required()->check(CLI::IsMember({"klein", "lens"}));
        c->add_option("m", ca.m)->required();
        c->add_option("n_or_q", ca.k)->required();
        c->add_option("p", ca.p)->required();
        c->add_option("q", ca.q)->required();
        c->add_option("--side", ca.side)->check(CLI::IsMember({"v", "w"}));
        c->callback([&, meridian] { action = [&, meridian] { return run_curve_test(ca, meridian, out); }; });
    };
    add_curve_test("meridian", true);
    add_curve_test("longitude", false);
    auto* classify = curves->add_subcommand("classify", "V-cored, W-cored or bilongitudinal");
    classify->add_option("kind", ca.kind)->required()->check(CLI::IsMember({"klein", "lens"}));
    classify->add_option("m", ca.m)->required();
    classify->add_option("n_or_q", ca.k)->required();
    classify->add_option("p", ca.p)->required();
    classify->add_option("q", ca.q)->required();
    classify->callback([&] { action = [&] { return run_curve_classify(ca, out); }; });
    auto* bilong = curves->add_subcommand("bilongitude", "Classes a + kb that are longitudes of both sides of L(m,q)");
    bilong->add_option("m", ca.m)->required();
    bilong->add_option("q", ca.k)->required();
    bilong->callback([&] { action = [&] { return run_bilongitude(ca.m, ca.k, out); }; });
    auto* fibers = curves->add_subcommand("fibers", "Longitudes of R_u against the fiber of M(m,n)");
    fibers->add_option("m", ca.m)->required();
    fibers->add_option("n", ca.k)->required();
    fibers->callback([&] { action = [&] { return run_fibers(ca.m, ca.k, out); }; });
    auto* autos = curves->add_subcommand("automorphisms", "Level-preserving automorphisms of the Heegaard torus");
    bool swap = false;
    long window = 64;
    autos->add_option("m", ca.m)->required();
    autos->add_option("q", ca.k)->required();
    autos->add_flag("--swap", swap, "Exchange the two sides");
    autos->add_option("--window", window)->check(CLI::Range(1L, 100000L));
    autos->callback([&] { action = [&] { return run_automorphisms(ca.m, ca.k, swap, window, out); }; });

    auto* euler = app.add_subcommand("euler", "Euler characteristic gates");
    euler->require_subcommand(1);
    SpineCount sc;
    auto* spine = euler->add_subcommand("spine", "Common spine counts m k0 k1 k2");
    spine->add_option("m", sc.m)->required();
    spine->add_option("k0", sc.k0)->required();
    spine->add_option("k1", sc.k1)->required();
    spine->add_option("k2", sc.k2)->required();
    spine->callback([&] { action = [&] { print_trace(spine_feasible(sc), out); return static_cast<int>(ok); }; });
    CircleCount cc;
    auto* circles = euler->add_subcommand("circles", "Intersection circles m n r k l");
    circles->add_option("m", cc.m)->required();
    circles->add_option("n", cc.n)->required();
    circles->add_option("r", cc.r)->required();
    circles->add_option("k", cc.k)->required();
    circles->add_option("l", cc.l)->required();
    circles->callback([&] { action = [&] { print_trace(circles_feasible(cc), out); return static_cast<int>(ok); }; });
    std::vector<long> face_values;
    auto* faces = euler->add_subcommand("faces", "Face audit V E sizes..., or the L(2,1) fixture");
    faces->add_option("values", face_values);
    faces->callback([&] { action = [&] { return run_faces(face_values, out); }; });

    auto* graphic = app.add_subcommand("graphic", "Labeled graphics and the Diagram map");
    graphic->require_subcommand(1);
    GraphicArgs ga;
    auto* check = graphic->add_subcommand("check", "Check a graphic JSON file");
    check->add_option("file", ga.target)->required();
    check->add_option("--eps", ga.eps, "Border band width p/q");
    check->add_flag("--strong", ga.strong, "Strongly irreducible labels (RS1)");
    check->add_flag("--strict-border", ga.strict_border, "Require capital letters near the sides");
    check->callback([&] { action = [&] { return report_graphic(read_graphic_file(ga.target), ga, out); }; });
    auto* demo = graphic->add_subcommand("demo", "Run the checks on a built-in graphic");
    demo->add_option("name", ga.target)->required()->check(CLI::IsMember(builtin_graphic_names()));
    demo->add_option("--eps", ga.eps, "Border band width p/q");
    demo->add_flag("--strong", ga.strong, "Strongly irreducible labels (RS1)");
    demo->callback([&] { action = [&] { return report_graphic(builtin_graphic(ga.target), ga, out); }; });
    auto* exp = graphic->add_subcommand("export", "Write a built-in graphic as JSON");
    exp->add_option("name", ga.target)->required()->check(CLI::IsMember(builtin_graphic_names()));
    exp->callback([&] { action = [&] { out << write_graphic_json(builtin_graphic(ga.target)); return static_cast<int>(ok); }; });

    auto* verify = app.add_subcommand("verify", "Exhaustive verification suites");
    std::string suite;
    std::optional<long> max;
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"pi1", "free-action", "longitude", "bilongitude", "euler"}));
    verify->add_option("--max", max)->check(CLI::Range(1L, 100000L));
    verify->callback([&] { action = [&] { return run_verify(suite, max, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return usage;
    }
    if (!action) {
        err << "error: no command\n";
        return usage;
    }
    try {
        return action();
    } catch (const CurveContradiction& e) {
        err << "contradiction: " << one_line(e.what()) << '\n';
        return contradiction;
    } catch (const std::invalid_argument& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return usage;
    } catch (const std::logic_error& e) {
        err << "internal contradiction: " << one_line(e.what()) << '\n';
        return contradiction;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return usage;
    }
}

}  // namespace elliptic::cli
