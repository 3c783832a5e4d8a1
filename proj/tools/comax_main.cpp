// comax: build finite-dimensional coalgebras, classify them, and compute
// their covering coalgebras through the maximal ring of quotients of the
// dual algebra.

#include <CLI11.hpp>

#include <iostream>

#include "comax/json_io.hpp"

using namespace comax;

namespace {

struct SourceOpts {
    std::string input;
    std::string quiver_file;
    std::string family;
    std::string field = "q";
    int maxlen = -1;
};

void add_source_opts(CLI::App* cmd, SourceOpts& so, bool with_input) {
    if (with_input)
        cmd->add_option("--input,-i", so.input, "coalgebra JSON file produced by 'build'");
    cmd->add_option("--quiver", so.quiver_file, "quiver text file (path coalgebra)");
    cmd->add_option("--family", so.family, "builtin family: matrix:<n> or dividedpower:<n>");
    cmd->add_option("--field", so.field, "ground field: q or fp:<p>")->capture_default_str();
    cmd->add_option("--maxlen", so.maxlen, "path length bound (required for cyclic quivers)");
}

Coalgebra load_coalgebra(const SourceOpts& so) {
    int sources = (!so.input.empty()) + (!so.quiver_file.empty()) + (!so.family.empty());
    require(sources == 1, ErrorKind::InvalidArgument,
            "exactly one of --input / --quiver / --family is required");
    if (!so.input.empty()) return coalgebra_from_json(json::parse(read_file(so.input)));

    FieldSpec field = FieldSpec::parse(so.field);
    if (!so.quiver_file.empty()) {
        Quiver q = parse_quiver(read_file(so.quiver_file));
        std::optional<int> bound;
        if (so.maxlen >= 0) bound = so.maxlen;
        return path_coalgebra(q, bound, field);
    }
    auto colon = so.family.find(':');
    require(colon != std::string::npos, ErrorKind::InvalidArgument,
            "family must be matrix:<n> or dividedpower:<n>");
    std::string name = so.family.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(so.family.substr(colon + 1));
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "bad family size in '" + so.family + "'");
    }
    if (name == "matrix") return matrix_coalgebra(field, n);
    if (name == "dividedpower") return truncated_divided_power(field, n);
    fail(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

const char* status_str(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Ok: return "ok";
        case VerifyStatus::Counterexample: return "COUNTEREXAMPLE";
        case VerifyStatus::NotApplicable: return "not applicable";
    }
    return "?";
}

int run_build(const SourceOpts& so, const std::string& out) {
    Coalgebra c = load_coalgebra(so);
    ValidationReport rep = validate_coalgebra(c);
    require(rep.ok, ErrorKind::InvalidArgument, "coalgebra axioms fail: " + rep.message);
    std::cerr << "dim=" << c.dim() << " field=" << c.field.name() << " valid=yes\n";
    emit(out, dump_canonical(coalgebra_to_json(c)));
    return 0;
}

int run_report(const SourceOpts& so, const std::string& out, bool as_json) {
    Coalgebra c = load_coalgebra(so);
    PropertyReport r = coalgebra_report(c);
    if (as_json) {
        emit(out, dump_canonical(report_to_json(c, r)));
    } else {
        auto line = [](const std::string& name, const Flag& f) {
            std::string v = f.known() ? (*f.value ? "true" : "false") : "error: " + f.error;
            return "  " + name + ": " + v + "\n";
        };
        std::string text = "coalgebra dim " + std::to_string(c.dim()) + " over " + c.field.name() + "\n";
        text += line("non_singular", r.non_singular);
        text += line("cosemisimple", r.cosemisimple);
        text += line("cosemiprime", r.cosemiprime);
        text += line("hereditary", r.hereditary);
        text += line("coprime_simple", r.coprime_simple);
        text += line("copolyform_left", r.copolyform_left);
        text += line("copolyform_right", r.copolyform_right);
        text += line("self_injective_dual", r.self_injective_dual);
        text += "  cocommutative: " + std::string(r.cocommutative ? "true" : "false") + "\n";
        text += "  coradical_dim: " + std::to_string(r.coradical_dim) + "\n";
        text += "  radical_dim: " + std::to_string(r.radical_dim) + "\n";
        text += "  cover: " + r.cover_summary + "\n";
        emit(out, text);
    }
    // nonzero exit if any flag failed to compute
    for (const Flag* f : {&r.non_singular, &r.cosemisimple, &r.hereditary, &r.coprime_simple,
                          &r.copolyform_left, &r.copolyform_right, &r.self_injective_dual})
        if (!f->known()) return 2;
    return 0;
}

int run_cover(const SourceOpts& so, const std::string& out) {
    Coalgebra c = load_coalgebra(so);
    CoalgebraCover cov = covering_coalgebra(c);
    std::cerr << "D dim " << cov.d.dim() << ", kernel dim " << cov.kernel.dim()
              << (cov.flags.kernel_small ? ", small" : "")
              << (cov.flags.codense ? ", codense" : "")
              << (cov.flags.maximal_checked ? ", maximal" : "") << "\n";
    emit(out, dump_canonical(cover_to_json(c, cov)));
    return 0;
}

// Definitional finite-field re-checks for --oracle, built on the brute-force
// submodule enumeration.
int run_oracle_checks(const Coalgebra& c) {
    require(!c.field.is_rational(), ErrorKind::InvalidArgument,
            "--oracle needs a finite ground field (the checks enumerate submodules)");
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    FDModule m = comodule_as_module(c, a, Side::Left);
    std::vector<Subspace> subs = brute_force_submodules(m);

    auto def_small = [&](const Subspace& n) {
        for (const Subspace& l : subs)
            if (sum(n, l).is_full() && !l.is_full()) return false;
        return true;
    };
    auto def_essential = [&](const Subspace& n) {
        for (const Subspace& l : subs)
            if (!l.is_zero() && intersect(n, l).is_zero()) return false;
        return true;
    };
    int failures = 0;
    for (const Subspace& n : subs) {
        if (is_small(m, n) != def_small(n)) ++failures;
        if (is_essential(m, n) != def_essential(n)) ++failures;
    }
    std::cout << "oracle small/essential on " << subs.size() << " submodules: "
              << (failures == 0 ? "ok" : "MISMATCH") << "\n";

    // codense shortcut vs the quantifier over submodules of the kernel
    int codense_failures = 0;
    for (const Subspace& n : subs) {
        QuotientModule q = quotient_module(m, n);
        if (q.mod.dim == 0) continue;
        bool fast = is_codense_cover(m, q.mod, q.projection);
        SubmoduleModule km = submodule_module(m, n);
        bool slow = true;
        for (const Subspace& l : brute_force_submodules(km.mod)) {
            QuotientModule kq = quotient_module(km.mod, l);
            if (kq.mod.dim == 0) continue;
            if (hom_dim(m, kq.mod) > 0) {
                slow = false;
                break;
            }
        }
        if (fast != slow) ++codense_failures;
    }
    std::cout << "oracle codense on quotients: " << (codense_failures == 0 ? "ok" : "MISMATCH")
              << "\n";
    return failures + codense_failures == 0 ? 0 : 2;
}

int run_verify(const SourceOpts& so, bool oracle) {
    Coalgebra c = load_coalgebra(so);
    int rc = 0;
    VerifyResult r1 = verify_nonsingular_equivalences(c);
    std::cout << "non-singular equivalences: " << status_str(r1.status) << "\n  " << r1.detail
              << "\n";
    VerifyResult r2 = verify_cosemisimple_flat(c);
    std::cout << "cosemisimple iff non-singular+flat: " << status_str(r2.status) << "\n  "
              << r2.detail << "\n";
    VerifyResult r3 = verify_coprime_dichotomy(c);
    std::cout << "coprime dichotomy: " << status_str(r3.status) << "\n  " << r3.detail << "\n";
    VerifyResult r4 = verify_cocommutative_theorem(c);
    std::cout << "cocommutative theorem: " << status_str(r4.status) << "\n  " << r4.detail << "\n";
    for (const VerifyResult* r : {&r1, &r2, &r3, &r4})
        if (!r->ok()) rc = 2;
    if (oracle) {
        int orc = run_oracle_checks(c);
        if (orc != 0) rc = orc;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional coalgebras, quotient rings, and covering coalgebras"};
    app.require_subcommand(1);

    SourceOpts so_build, so_report, so_cover, so_verify;
    std::string out_build, out_report, out_cover;
    bool report_json = false, verify_oracle = false;

    CLI::App* cmd_build = app.add_subcommand("build", "construct a coalgebra, write canonical JSON");
    add_source_opts(cmd_build, so_build, false);
    cmd_build->add_option("--output,-o", out_build, "write JSON here instead of stdout");

    CLI::App* cmd_report = app.add_subcommand("report", "classify a coalgebra");
    add_source_opts(cmd_report, so_report, true);
    cmd_report->add_option("--output,-o", out_report, "write the report here");
    cmd_report->add_flag("--json", report_json, "emit the report as canonical JSON");

    CLI::App* cmd_cover = app.add_subcommand("cover", "compute the covering coalgebra");
    add_source_opts(cmd_cover, so_cover, true);
    cmd_cover->add_option("--output,-o", out_cover, "write the cover JSON here");

    CLI::App* cmd_verify = app.add_subcommand("verify", "machine-check the structural theorems");
    add_source_opts(cmd_verify, so_verify, true);
    cmd_verify->add_flag("--oracle", verify_oracle,
                         "also run the exhaustive finite-field submodule checks");

    try {
        app.parse(argc, argv);
        if (cmd_build->parsed()) return run_build(so_build, out_build);
        if (cmd_report->parsed()) return run_report(so_report, out_report, report_json);
        if (cmd_cover->parsed()) return run_cover(so_cover, out_cover);
        if (cmd_verify->parsed()) return run_verify(so_verify, verify_oracle);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_category();
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
