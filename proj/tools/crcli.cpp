#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crcodes/atlas.hpp"
#include "crcodes/design.hpp"
#include "crcodes/errors.hpp"
#include "crcodes/graph.hpp"
#include "crcodes/io.hpp"
#include "crcodes/lloyd.hpp"
#include "json.hpp"

using namespace crc;
namespace at = crc::atlas;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kInput = 2, kResource = 3, kInternal = 4 };

struct Options {
    bool json = false;
    unsigned threads = 0;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::string ia_text(const std::optional<IntersectionArray>& ia) { return ia ? ia->to_string() : "-"; }

std::string rational_list(const PackingParameters& beta) {
    std::string s = "(";
    for (std::size_t i = 0; i < beta.size(); ++i) s += (i ? ", " : "") + to_string(beta[i]);
    return s + ")";
}

// "--m 3 --q 2" style catalog parameters left over after option parsing.
at::Params parse_params(const std::vector<std::string>& extras) {
    at::Params p;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i], value;
        if (key.rfind("--", 0) != 0 || key.size() < 3) throw DomainError("unexpected argument '" + key + "'");
        key = key.substr(2);
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) throw DomainError("parameter --" + key + " needs a value");
            value = extras[++i];
        }
        try {
            std::size_t used = 0;
            int v = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            p[key] = v;
        } catch (const std::logic_error&) {
            throw DomainError("parameter --" + key + " needs an integer, got '" + value + "'");
        }
    }
    return p;
}

void print_entry(const at::EntryResult& e, const at::Family& f, const std::string& provenance) {
    std::cout << e.key << "  " << f.title << "\n";
    if (!e.error.empty()) {
        std::cout << "  error: " << e.error << "\n  FAIL\n";
        return;
    }
    std::cout << "  n=" << e.n << " q=" << e.q << " |C|=" << e.size << " d=" << e.d << " rho=" << e.rho
              << " cr=" << (e.cr ? "true" : "false") << " up_wide=" << (e.up_wide ? "true" : "false") << "\n";
    std::cout << "  computed IA  " << ia_text(e.computed) << "\n";
    if (e.expected) std::cout << "  expected IA  " << e.expected->to_string() << "  (" << provenance << ")\n";
    if (f.negative) {
        std::cout << "  negative control: expected not completely regular\n";
    } else {
        std::cout << "  checks: ia=" << (e.ia_match ? "match" : "MISMATCH") << " d=" << (e.d_match ? "match" : "MISMATCH")
                  << " eigenvalues=" << (e.eigen_pass ? "pass" : "FAIL") << " lloyd-roots=" << (e.roots_pass ? "pass" : "FAIL")
                  << " cardinality=" << (e.cardinality_pass ? "pass" : "FAIL");
        if (e.graph_match) std::cout << " graph=" << (*e.graph_match ? "match" : "MISMATCH");
        std::cout << "\n";
    }
    if (!f.note.empty()) std::cout << "  note: " << f.note << "\n";
    std::cout << "  " << (e.ok ? "PASS" : "FAIL") << "\n";
}

int cmd_atlas_list(const Options& o, const at::Filter& filter) {
    auto inst = at::list(filter);
    if (o.json) {
        ojson j = ojson::array();
        for (const auto& i : inst) {
            auto e = i.family->expect(i.params);
            ojson r;
            r["key"] = i.key();
            r["id"] = i.family->id;
            r["title"] = i.family->title;
            r["provenance"] = at::to_string(i.family->provenance);
            r["external"] = i.family->external;
            r["negative_control"] = i.family->negative;
            r["expected_ia"] = e.ia ? ojson(e.ia->to_string()) : ojson();
            j.push_back(r);
        }
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    for (const auto& i : inst) {
        auto e = i.family->expect(i.params);
        std::string tag = i.family->external ? "EXTERNAL" : (i.family->negative ? "NEGATIVE" : at::to_string(i.family->provenance));
        std::printf("%-28s %-9s %s\n", i.key().c_str(), tag.c_str(),
                    e.ia ? e.ia->to_string().c_str() : "not CR");
    }
    std::printf("%zu instances\n", inst.size());
    return kPass;
}

int cmd_atlas_build(const Options& o, const std::string& id, const at::Params& given, const std::string& out,
                    const std::string& report) {
    const at::Family& f = at::family(id);
    at::Params p = at::resolve(f, given);
    auto b = at::build(id, p);
    at::Instance inst{&f, p};
    if (!out.empty()) write_text(out, code_to_json(b.code));
    auto r = at::check(inst.key(), f.id, b.code, b.expected);
    ojson j = ojson::parse(at::entry_json(r));
    j["title"] = f.title;
    j["provenance"] = at::to_string(b.provenance);
    if (!f.note.empty()) j["note"] = f.note;
    if (!report.empty()) write_text(report, j.dump(2));
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        print_entry(r, f, at::to_string(b.provenance));
    return r.ok ? kPass : kMismatch;
}

int cmd_atlas_regress(const Options& o, bool all, const std::vector<std::string>& ids, const std::string& out) {
    std::vector<at::Instance> inst;
    if (all) {
        inst = at::list();
    } else {
        if (ids.empty()) throw DomainError("atlas regress needs catalog ids or --all-feasible");
        for (const auto& id : ids) {
            at::family(id);
            for (const auto& i : at::list())
                if (i.family->id == id) inst.push_back(i);
        }
    }
    auto rep = at::regress(inst, o.threads);
    std::string js = at::report_json(rep);
    if (!out.empty()) write_text(out, js);
    if (o.json) {
        std::cout << js << "\n";
    } else {
        for (const auto& e : rep.entries) {
            std::string status = e.skipped ? "skip" : (e.ok ? "pass" : "FAIL");
            std::printf("%-4s %-28s %-40s %s\n", status.c_str(), e.key.c_str(),
                        e.skipped ? "(external: supply a code file)" : ia_text(e.computed).c_str(),
                        e.error.empty() ? "" : e.error.c_str());
        }
        std::printf("passed %d, failed %d, skipped %d\n", rep.passed, rep.failed, rep.skipped);
    }
    std::fprintf(stderr, "regress: %zu instances in %.1f s\n", rep.entries.size(), rep.seconds);
    return rep.ok() ? kPass : kMismatch;
}

struct VerifyFlags {
    bool cr = false, classify = false, lloyd = false, designs = false, graph = false;
    int weight = -1, strength = -1;
    std::string expect_ia, dot, graph_json;
};

int cmd_verify(const Options& o, const std::string& file, VerifyFlags v) {
    Code c = read_code_file(file);
    if (!v.cr && !v.classify && !v.lloyd && !v.designs && !v.graph && v.expect_ia.empty()) v.classify = true;
    if (v.designs && (v.weight < 0 || v.strength < 0)) throw DomainError("--designs needs --weight and --strength");
    bool ok = true;
    ojson j;
    j["file"] = file;
    std::ostringstream txt;
    txt << file << ": n=" << c.n() << " q=" << c.q() << " |C|=" << to_string(c.size())
        << (c.is_linear() ? " linear" : " explicit") << "\n";

    Classification cl = classify(c);
    if (v.classify) {
        j["classification"] = ojson::parse(classification_json(cl));
        txt << "  e=" << cl.e << " d=" << cl.d << " rho=" << cl.rho << " s=" << cl.s << " b=" << cl.b
            << " rank(B)=" << cl.rank_b << "\n";
        auto tf = [](bool x) { return x ? "true" : "false"; };
        txt << "  perfect=" << tf(cl.perfect) << " quasi_perfect=" << tf(cl.quasi_perfect) << " up_narrow="
            << tf(cl.up_narrow) << " up_gvt=" << tf(cl.up_gvt) << " up_wide=" << tf(cl.up_wide)
            << " cr=" << tf(cl.completely_regular) << "\n";
        if (cl.beta) txt << "  beta=" << rational_list(*cl.beta) << "\n";
    }
    if (v.cr || v.classify) {
        j["completely_regular"] = cl.completely_regular;
        j["ia"] = cl.ia ? ojson(cl.ia->to_string()) : ojson();
        txt << "  CR=" << (cl.completely_regular ? "true" : "false") << " IA " << ia_text(cl.ia) << "\n";
        if (v.cr && !cl.completely_regular) ok = false;
    }
    if (!v.expect_ia.empty()) {
        auto want = parse_ia(v.expect_ia, c.n(), c.q());
        bool same = cl.ia && cl.ia->b == want.b && cl.ia->c == want.c;
        j["expected_ia"] = want.to_string();
        j["ia_match"] = same;
        txt << "  expected IA " << want.to_string() << ": " << (same ? "match" : "MISMATCH") << "\n";
        ok = ok && same;
    }
    if (v.lloyd) {
        ojson l;
        if (cl.ia) {
            auto ev = eigenvalue_membership_test(*cl.ia, true);
            l["eigenvalue_test"] = ev.pass;
            txt << "  eigenvalue membership: " << (ev.pass ? "pass" : "FAIL") << " (" << ev.found << "/" << ev.needed
                << ")\n";
            ok = ok && ev.pass;
        }
        if (cl.beta) {
            auto lr = lloyd_roots(cl.n, cl.q, *cl.beta);
            bool card = cardinality_identity(c, *cl.beta);
            l["beta"] = ojson::array();
            for (const auto& x : *cl.beta) l["beta"].push_back(to_string(x));
            l["roots"] = lr.roots;
            l["root_test"] = lr.pass;
            l["cardinality_identity"] = card;
            txt << "  beta=" << rational_list(*cl.beta) << " roots {";
            for (std::size_t i = 0; i < lr.roots.size(); ++i) txt << (i ? ", " : "") << lr.roots[i];
            txt << "}: " << (lr.pass ? "pass" : "FAIL") << "; cardinality identity: " << (card ? "pass" : "FAIL")
                << "\n";
            ok = ok && lr.pass && card;
        } else {
            txt << "  not uniformly packed: no packing parameters\n";
            l["beta"] = nullptr;
            ok = false;
        }
        j["lloyd"] = l;
    }
    if (v.designs) {
        auto w = verify_design(c, v.weight, v.strength);
        if (w) {
            j["design"] = ojson::parse(design_json(*w));
            txt << "  C_" << v.weight << " is a " << v.strength << "-(" << w->v << ", " << w->k << ", "
                << to_string(w->lambda) << ")" << (w->qary ? "_q" : "") << " design, " << to_string(w->blocks)
                << " blocks\n";
        } else {
            j["design"] = nullptr;
            txt << "  C_" << v.weight << " is not a " << v.strength << "-design\n";
            ok = false;
        }
    }
    if (v.graph) {
        if (!c.is_linear()) throw DomainError("--graph needs a linear code");
        CosetGraph g = build_coset_graph(c);
        GraphIA gi = coset_graph_ia(g);
        ojson gj;
        gj["vertices"] = g.V;
        gj["distance_regular"] = gi.regular;
        gj["via_simple"] = gi.via_simple;
        gj["sampled"] = gi.sampled;
        gj["ia"] = gi.ia ? ojson(gi.ia->to_string()) : ojson();
        bool same = cl.completely_regular == gi.regular;
        if (cl.ia && gi.ia) same = same && cl.ia->b == gi.ia->b && cl.ia->c == gi.ia->c;
        gj["matches_code_ia"] = same;
        j["graph"] = gj;
        txt << "  coset graph: " << g.V << " vertices, distance-regular=" << (gi.regular ? "true" : "false")
            << (gi.sampled ? " (sampled)" : "") << " IA " << ia_text(gi.ia) << ": "
            << (same ? "agrees with code" : "DISAGREES with code") << "\n";
        ok = ok && same;
        if (!v.dot.empty()) write_text(v.dot, export_dot(g));
        if (!v.graph_json.empty()) write_text(v.graph_json, export_json(g));
    }
    j["pass"] = ok;
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << txt.str() << "  " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kPass : kMismatch;
}

int cmd_bounds_rho1(const Options& o, const std::vector<int>& args) {
    auto r = rho1_bounds(args[0], args[1], args[2]);
    if (o.json) {
        ojson j;
        j["b"] = r.b;
        j["c"] = r.c;
        j["n"] = r.n;
        j["a"] = r.a;
        j["pass"] = r.pass;
        j["checks"] = ojson::array();
        for (const auto& ch : r.checks) {
            ojson cj;
            cj["name"] = ch.name;
            cj["applicable"] = ch.applicable;
            cj["pass"] = ch.pass;
            cj["detail"] = ch.detail;
            j["checks"].push_back(cj);
        }
        j["a_star_lower"] = r.a_star_lower ? ojson(*r.a_star_lower) : ojson();
        j["a_star_upper"] = r.a_star_upper ? ojson(*r.a_star_upper) : ojson();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "IA {" << r.b << "; " << r.c << "} at n=" << r.n << " (a=" << r.a << ")\n";
        for (const auto& ch : r.checks) {
            if (!ch.applicable) continue;
            std::cout << "  " << (ch.pass ? "pass " : "FAIL ") << ch.name;
            if (!ch.detail.empty()) std::cout << ": " << ch.detail;
            std::cout << "\n";
        }
        if (r.a_star_lower) std::cout << "  a* >= " << *r.a_star_lower << "\n";
        if (r.a_star_upper) std::cout << "  a* <= " << *r.a_star_upper << "\n";
        std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? kPass : kMismatch;
}

int cmd_bounds_lloyd(const Options& o, const std::vector<std::string>& args) {
    if (args.size() < 4) throw DomainError("--lloyd-roots needs n q beta_0 ... beta_rho");
    auto to_int = [](const std::string& s, const char* what) {
        Rational r = parse_rational(s);
        if (!is_integer(r) || r < 1) throw DomainError(std::string(what) + " must be a positive integer");
        return static_cast<int>(numerator(r));
    };
    int n = to_int(args[0], "n"), q = to_int(args[1], "q");
    PackingParameters beta;
    for (std::size_t i = 2; i < args.size(); ++i) beta.push_back(parse_rational(args[i]));
    auto lr = lloyd_roots(n, q, beta);
    bool card = false;
    {
        // |C| from the identity itself, when it is an integer.
        Rational denom = 0;
        for (std::size_t i = 0; i < beta.size(); ++i)
            denom += beta[i] * Rational(binomial(n, static_cast<long long>(i))) * Rational(big_pow(q - 1, i));
        if (denom > 0) {
            Rational size = Rational(big_pow(q, n)) / denom;
            card = is_integer(size);
        }
    }
    if (o.json) {
        ojson j;
        j["n"] = n;
        j["q"] = q;
        j["beta"] = ojson::array();
        for (const auto& b : beta) j["beta"].push_back(to_string(b));
        j["roots"] = lr.roots;
        j["pass"] = lr.pass;
        j["integral_size"] = card;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "beta=" << rational_list(beta) << " at n=" << n << " q=" << q << "\n  roots {";
        for (std::size_t i = 0; i < lr.roots.size(); ++i) std::cout << (i ? ", " : "") << lr.roots[i];
        std::cout << "}\n  integral |C| from the cardinality identity: " << (card ? "yes" : "no") << "\n  "
                  << (lr.pass ? "PASS" : "FAIL") << "\n";
    }
    return lr.pass ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crcli: completely regular codes toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    Guards& g = default_guards();
    apply_env_overrides(g);
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--threads", o.threads, "Worker threads for regress (0 = all cores)");
    app.add_option("--max-vectors", g.max_vectors, "Guard: ambient-space vectors")->check(CLI::PositiveNumber);
    app.add_option("--max-syndromes", g.max_syndromes, "Guard: syndromes")->check(CLI::PositiveNumber);
    app.add_option("--max-codewords", g.max_codewords, "Guard: enumerated codewords")->check(CLI::PositiveNumber);
    app.add_option("--max-design-ops", g.max_design_ops, "Guard: design counting work")->check(CLI::PositiveNumber);
    app.add_option("--max-pair-ops", g.max_pair_ops, "Guard: pairwise distance work")->check(CLI::PositiveNumber);

    auto* atlas = app.add_subcommand("atlas", "Catalog of completely regular code families");
    atlas->require_subcommand(1);
    atlas->fallthrough();

    at::Filter filter;
    int rho_filter = 0, q_filter = 0;
    bool no_external = false, no_negative = false;
    auto* list = atlas->add_subcommand("list", "List pinned catalog instances");
    list->add_option("--rho", rho_filter, "Only this covering radius");
    list->add_option("--q", q_filter, "Only this alphabet size");
    list->add_option("--id", filter.id_prefix, "Only ids with this prefix");
    list->add_flag("--no-external", no_external, "Hide entries without a builder");
    list->add_flag("--no-negative", no_negative, "Hide negative controls");

    std::string build_id, build_out, build_report;
    auto* build = atlas->add_subcommand("build", "Build one catalog entry and check it; family parameters as --name value");
    build->add_option("id", build_id, "Catalog id, e.g. S.1 or F.18")->required();
    build->add_option("-o,--output", build_out, "Write the code file here");
    build->add_option("--report", build_report, "Write the JSON check report here");
    build->allow_extras();
    build->fallthrough(false);

    bool all_feasible = false;
    std::vector<std::string> regress_ids;
    std::string regress_out;
    auto* regress = atlas->add_subcommand("regress", "Build and check pinned instances");
    regress->add_option("ids", regress_ids, "Catalog ids");
    regress->add_flag("--all-feasible", all_feasible, "Every pinned instance with a builder");
    regress->add_option("-o,--output", regress_out, "Write the JSON report here");

    std::string manifest_out;
    auto* manifest = atlas->add_subcommand("manifest", "Catalog manifest (ids, parameter schema, expected arrays)");
    manifest->add_option("-o,--output", manifest_out, "Write the manifest here instead of stdout");

    std::string verify_file;
    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "Analyse a code file");
    verify->add_option("file", verify_file, "Code file (JSON)")->required();
    verify->add_flag("--cr", vf.cr, "Complete regularity and intersection array");
    verify->add_flag("--classify", vf.classify, "All parameters and packing flags");
    verify->add_flag("--lloyd", vf.lloyd, "Eigenvalue, Lloyd-root and cardinality tests");
    verify->add_flag("--designs", vf.designs, "Check that the weight-w words form a t-design");
    verify->add_option("--weight", vf.weight, "Weight w for --designs");
    verify->add_option("--strength", vf.strength, "Strength t for --designs");
    verify->add_flag("--graph", vf.graph, "Coset graph distance-regularity against the code");
    verify->add_option("--expect-ia", vf.expect_ia, "Intersection array to compare, e.g. \"{23,22,21;1,2,3}\"");
    verify->add_option("--dot", vf.dot, "With --graph: write the coset graph as DOT");
    verify->add_option("--graph-json", vf.graph_json, "With --graph: write the coset graph as JSON");

    std::vector<int> rho1;
    std::vector<std::string> lloyd;
    auto* bounds = app.add_subcommand("bounds", "Arithmetic feasibility checks");
    auto* rho1_opt = bounds->add_option("--rho1", rho1, "b c n: necessary conditions for IA {b; c}")->expected(3);
    auto* lloyd_opt =
        bounds->add_option("--lloyd-roots", lloyd, "n q beta_0 ... beta_rho: roots of the Lloyd polynomial")
            ->expected(4, 64);
    rho1_opt->excludes(lloyd_opt);
    bounds->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kInput;
    }

    try {
        if (list->parsed()) {
            if (rho_filter) filter.rho = rho_filter;
            if (q_filter) filter.q = q_filter;
            filter.include_external = !no_external;
            filter.include_negative = !no_negative;
            return cmd_atlas_list(o, filter);
        }
        if (build->parsed()) {
            std::vector<std::string> extras;
            for (const auto& a : build->remaining()) {
                if (a == "--json")
                    o.json = true;
                else
                    extras.push_back(a);
            }
            return cmd_atlas_build(o, build_id, parse_params(extras), build_out, build_report);
        }
        if (regress->parsed()) return cmd_atlas_regress(o, all_feasible, regress_ids, regress_out);
        if (manifest->parsed()) {
            if (manifest_out.empty())
                std::cout << at::manifest_json() << "\n";
            else
                write_text(manifest_out, at::manifest_json());
            return kPass;
        }
        if (verify->parsed()) return cmd_verify(o, verify_file, vf);
        if (bounds->parsed()) {
            if (!rho1.empty()) return cmd_bounds_rho1(o, rho1);
            return cmd_bounds_lloyd(o, lloyd);
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource guard '" << e.guard << "': " << e.what() << "\n";
        return kResource;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const CatalogError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInput;
}
