#include "detskein/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "detskein/certify.hpp"
#include "detskein/coloring.hpp"
#include "detskein/corpus.hpp"
#include "detskein/diagram.hpp"
#include "detskein/error.hpp"
#include "detskein/skein.hpp"
#include "detskein/tangle.hpp"

namespace detskein {
namespace {

struct Context {
    std::ostream& out;
    bool porcelain = false;
};

std::string join_fractions(const std::vector<TangleFraction>& fs) {
    std::string s;
    for (const auto& f : fs) {
        if (!s.empty()) s += ' ';
        s += to_string(f);
    }
    return s.empty() ? "-" : s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OrientationConstraint parse_constraint(const std::string& s) {
    if (s == "any" || s == "unconstrained") return OrientationConstraint::unconstrained;
    return parse_orientation_class(s) == OrientationClass::parallel ? OrientationConstraint::parallel
                                                                    : OrientationConstraint::antiparallel;
}

void print_scan(Context& ctx, const std::string& name, const ScanReport& report) {
    if (!ctx.porcelain) {
        ctx.out << name << ": max zero companions " << report.max_count() << "\n";
    }
    for (const auto& row : report.rows) {
        if (!ctx.porcelain && row.witnesses.empty()) continue;
        if (ctx.porcelain) ctx.out << name << " | ";
        ctx.out << to_string(row.x) << " | " << row.witnesses.size() << " | " << join_fractions(row.witnesses)
                << "\n";
    }
}

int det_cmd(Context& ctx, const std::string& pd) {
    ctx.out << determinant(parse_pd(pd)) << "\n";
    return 0;
}

int colorable_cmd(Context& ctx, const std::string& pd, int n) {
    const LinkDiagram d = parse_pd(pd);
    const bool yes = n_colorable(d, n);
    if (ctx.porcelain) {
        ctx.out << (yes ? "true" : "false") << "\n";
    } else {
        ctx.out << (yes ? "" : "not ") << n << "-colorable (determinant " << determinant(d) << ")\n";
    }
    return 0;
}

int tangle_cf(Context& ctx, const std::string& frac) {
    const ContinuedFraction cf = fraction_to_cf(parse_fraction(frac));
    ctx.out << to_string(cf) << "\n";
    return 0;
}

int tangle_eval(Context& ctx, const std::string& text) {
    ctx.out << to_string(cf_to_fraction(parse_continued_fraction(text))) << "\n";
    return 0;
}

int tangle_conn(Context& ctx, const std::string& frac) {
    const TangleFraction f = parse_fraction(frac);
    ctx.out << to_string(connectivity(f)) << "\n";
    return 0;
}

int tangle_word(Context& ctx, const std::string& frac) {
    const TangleWord w = cf_to_word(fraction_to_cf(parse_fraction(frac)));
    if (ctx.porcelain) {
        ctx.out << to_string(w) << "\n";
    } else {
        ctx.out << to_string(w) << " (" << crossing_count(w) << " crossings)\n";
    }
    return 0;
}

int skein_triple(Context& ctx, const std::string& x, const std::string& y, const std::string& oriented) {
    const FareyPair pair(parse_fraction(x), parse_fraction(y));
    SkeinTriple t;
    if (oriented.empty()) {
        t = unoriented_triple(pair);
    } else {
        const LinkDiagram amb = orient_for(closure_template().diagram(), 0, parse_orientation_class(oriented));
        t = oriented_triple(pair, amb, 0);
    }
    const std::string sep = ctx.porcelain ? " | " : "\n";
    auto field = [&](const char* name, const TangleFraction& f) {
        if (!ctx.porcelain) ctx.out << name << ": ";
        ctx.out << to_string(f);
    };
    field("first", t.first);
    ctx.out << sep;
    field("second", t.second);
    ctx.out << sep;
    field("mediant", t.mediant);
    if (t.partner) {
        ctx.out << sep;
        field("partner", *t.partner);
        ctx.out << sep;
        field("resolution", *t.resolution);
    }
    ctx.out << "\n";
    return 0;
}

int template_fit(Context& ctx, const std::string& pd) {
    const TangleTemplate t(parse_pd(pd).unoriented());
    const Coefficients c = fit_coefficients(t, 0);
    const auto z = zero_locus(c);
    if (ctx.porcelain) {
        ctx.out << c.a << " | " << c.b << " | " << (c.sign > 0 ? "+" : "-") << " | " << to_string(*z) << "\n";
    } else {
        ctx.out << to_string(c) << "\n" << "zero locus: " << to_string(*z) << "\n";
    }
    return 0;
}

int template_scan(Context& ctx, const std::string& pd, std::int64_t bound) {
    if (!pd.empty()) {
        print_scan(ctx, "input", two_slot_scan(TangleTemplate(parse_pd(pd)), 0, 1, bound));
        return 0;
    }
    for (const auto& e : bundled_templates()) {
        const LinkDiagram d = parse_pd(e.pd);
        if (d.slots().size() != 2) continue;
        print_scan(ctx, e.name, two_slot_scan(TangleTemplate(d), 0, 1, bound));
    }
    return 0;
}

int scan_cmd(Context& ctx, const std::string& pd, std::int64_t bound) {
    const TangleTemplate t(parse_pd(pd).unoriented());
    if (t.slot_count() == 2) {
        print_scan(ctx, "input", two_slot_scan(t, 0, 1, bound));
        return 0;
    }
    if (t.slot_count() != 1) throw DomainError("scan needs a template with one or two slots");
    std::vector<TangleFraction> zeros;
    std::size_t tried = 0;
    for (const auto& f : fractions_in_box(bound)) {
        ++tried;
        if (determinant_at(t, 0, f) == 0) zeros.push_back(f);
    }
    if (ctx.porcelain) {
        ctx.out << tried << " | " << zeros.size() << " | " << join_fractions(zeros) << "\n";
    } else {
        ctx.out << "fractions tried: " << tried << "\n"
                << "zero determinant: " << join_fractions(zeros) << "\n";
    }
    return 0;
}

int certify_cmd(Context& ctx, const std::string& frac, const std::string& oriented, const std::string& path) {
    const TangleFraction f = parse_fraction(frac);
    const Certificate c = oriented.empty() ? span_certificate(f)
                                           : oriented_span_certificate({f, parse_constraint(oriented)});
    const std::string text = to_json(c);
    if (path.empty()) {
        ctx.out << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot write " + path);
    file << text;
    if (ctx.porcelain) {
        ctx.out << to_string(f) << " | " << c.nodes.size() << " | " << path << "\n";
    } else {
        ctx.out << "wrote " << c.nodes.size() << "-node certificate for " << to_string(f) << " to " << path << "\n";
    }
    return 0;
}

int verify_cmd(Context& ctx, const std::string& path) {
    const Certificate c = certificate_from_json(read_file(path));
    const Verdict v = verify_certificate(c);
    if (ctx.porcelain) {
        ctx.out << (v.accepted ? "ACCEPT" : "REJECT");
        if (!v.accepted) ctx.out << " | " << v.check << " | " << v.node;
        ctx.out << "\n";
    } else {
        ctx.out << to_string(v) << "\n";
    }
    return v.accepted ? 0 : 2;
}

int corpus_cmd(Context& ctx, const std::string& path) {
    const std::vector<CorpusEntry> entries = path.empty() ? bundled_corpus() : parse_corpus(read_file(path));
    int bad = 0;
    for (const auto& e : entries) {
        const LinkDiagram d = parse_pd(e.pd);
        const int comps = components(d);
        const BigInt det = determinant(d);
        const bool ok = comps == e.components && det == e.determinant;
        bad += ok ? 0 : 1;
        if (ctx.porcelain) {
            ctx.out << e.name << " | " << comps << " | " << det << " | " << (ok ? "ok" : "mismatch") << "\n";
        } else if (!ok) {
            ctx.out << e.name << ": expected components " << e.components << " determinant " << e.determinant
                    << ", computed " << comps << " and " << det << "\n";
        }
    }
    if (!ctx.porcelain) {
        ctx.out << entries.size() - bad << "/" << entries.size() << " entries agree with the manifest\n";
    }
    return bad == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Link determinants, rational tangles and skein certificates", "detskein"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out};
    app.add_flag("--porcelain", ctx.porcelain, "Line-oriented machine-readable output");

    std::function<int()> action;
    std::string pd, frac, frac2, text, oriented, path, corpus_path;
    int n = 3;
    std::int64_t bound = 6;

    auto* det = app.add_subcommand("det", "Determinant of a PD code");
    det->add_option("pd", pd, "PD code")->required();
    det->callback([&] { action = [&] { return det_cmd(ctx, pd); }; });

    auto* col = app.add_subcommand("colorable", "Fox n-colorability of a PD code");
    col->add_option("pd", pd, "PD code")->required();
    col->add_option("--n", n, "Prime modulus")->required()->check(CLI::PositiveNumber);
    col->callback([&] { action = [&] { return colorable_cmd(ctx, pd, n); }; });

    auto* tangle = app.add_subcommand("tangle", "Rational tangle algebra");
    tangle->require_subcommand(1);
    auto* cf = tangle->add_subcommand("cf", "Continued fraction of p/q");
    cf->add_option("fraction", frac)->required();
    cf->callback([&] { action = [&] { return tangle_cf(ctx, frac); }; });
    auto* ev = tangle->add_subcommand("eval", "Fraction of (a1,...,an)");
    ev->add_option("cf", text)->required();
    ev->callback([&] { action = [&] { return tangle_eval(ctx, text); }; });
    auto* conn = tangle->add_subcommand("conn", "Connectivity class of p/q");
    conn->add_option("fraction", frac)->required();
    conn->callback([&] { action = [&] { return tangle_conn(ctx, frac); }; });
    auto* word = tangle->add_subcommand("word", "Twist word of p/q");
    word->add_option("fraction", frac)->required();
    word->callback([&] { action = [&] { return tangle_word(ctx, frac); }; });

    auto* skein = app.add_subcommand("skein", "Farey skein triples");
    skein->require_subcommand(1);
    auto* triple = skein->add_subcommand("triple", "Triple generated by two Farey neighbors");
    triple->add_option("first", frac)->required();
    triple->add_option("second", frac2)->required();
    triple->add_option("--oriented", oriented, "parallel or antiparallel");
    triple->callback([&] { action = [&] { return skein_triple(ctx, frac, frac2, oriented); }; });

    auto* tmpl = app.add_subcommand("template", "Determinant model of tangle templates");
    tmpl->require_subcommand(1);
    auto* fit = tmpl->add_subcommand("fit", "Fit determinant coefficients of a one-slot template");
    fit->add_option("pd", pd)->required();
    fit->callback([&] { action = [&] { return template_fit(ctx, pd); }; });
    auto* tscan = tmpl->add_subcommand("scan", "Zero companions in two-slot templates (default: bundled)");
    tscan->add_option("pd", pd);
    tscan->add_option("--bound", bound)->check(CLI::PositiveNumber);
    tscan->callback([&] { action = [&] { return template_scan(ctx, pd, bound); }; });

    auto* cert = app.add_subcommand("certify", "Skein certificate for p/q");
    cert->add_option("fraction", frac)->required();
    cert->add_option("--oriented", oriented, "parallel, antiparallel or any");
    cert->add_option("-o", path, "Output file");
    cert->callback([&] { action = [&] { return certify_cmd(ctx, frac, oriented, path); }; });

    auto* ver = app.add_subcommand("verify", "Verify a certificate file");
    ver->add_option("file", path)->required();
    ver->callback([&] { action = [&] { return verify_cmd(ctx, path); }; });

    auto* scan = app.add_subcommand("scan", "Zero-determinant insertions of a template");
    scan->add_option("pd", pd)->required();
    scan->add_option("--bound", bound)->check(CLI::PositiveNumber);
    scan->callback([&] { action = [&] { return scan_cmd(ctx, pd, bound); }; });

    auto* corpus = app.add_subcommand("corpus", "Check a corpus manifest (default: bundled)");
    corpus->add_option("--corpus", corpus_path, "Manifest path");
    corpus->callback([&] { action = [&] { return corpus_cmd(ctx, corpus_path); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    }
    return 1;
}

}  // namespace detskein
