// Command-line front end: checks .cx files, generates resolutions, runs the
// verification suite. Exit codes: 0 = all verdicts hold / nothing found,
// 1 = a violation or witness, 2 = usage, input or resource error.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "cubex/errors.hpp"
#include "cubex/format.hpp"
#include "cubex/theorems.hpp"

using namespace cubex;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string class_name = "surjections";
    std::string report = "text";
    std::uint64_t seed = 7;
    int level = -1;
    int caps = 3;
};

ExtensionClass the_class(const GlobalOptions& g) {
    return ExtensionClass::parse(g.class_name);
}

// One structured record per line; field set fixed in docs/FORMAT.md.
// Wall time is text-only so that seeded runs are byte-identical.
void emit(const GlobalOptions& g, const std::string& check, const std::string& instance,
          std::uint64_t hash, const std::string& verdict, const std::string& witness,
          double wall_ms) {
    if (g.report == "structured") {
        json record;
        record["check"] = check;
        record["instance"] = instance;
        record["instance_hash"] = hash;
        record["verdict"] = verdict;
        record["witness"] = witness;
        std::cout << record.dump() << "\n";
    } else {
        std::cout << check << ": " << instance << " -> " << verdict;
        if (!witness.empty()) std::cout << "\n  witness: " << witness;
        std::cout << "  (" << wall_ms << " ms)\n";
    }
}

void emit(const GlobalOptions& g, const TheoremReport& r) {
    emit(g, r.id, r.instance, r.instance_hash, verdict_name(r.verdict), r.witness,
         r.wall_ms);
}

int run_check_cube(const GlobalOptions& g, const std::string& path) {
    const auto doc = load_document(path);
    const auto E = the_class(g);
    if (doc.cubes.empty())
        throw validation_error("no cube declarations in '" + path + "'");
    int exit = 0;
    for (const auto& [name, cube] : doc.cubes) {
        std::string witness;
        bool ok = true;
        for (SubsetMask I = 1; I <= cube.full() && cube.dim() > 0; ++I) {
            const auto sub = sublimit_comparison(cube, I);
            if (!sub.comparison) {
                ok = false;
                witness = "comparison at I=" + subset_key(I) +
                          " does not factor through the limit";
                break;
            }
            if (!member(E, *sub.comparison)) {
                ok = false;
                witness = "comparison at I=" + subset_key(I) + " is not in " + E.name() +
                          " (apex size " + std::to_string(sub.cone.apex.size()) +
                          ", image size " +
                          std::to_string([&] {
                              std::vector<char> hit(sub.cone.apex.size(), 0);
                              for (int v : sub.comparison->table())
                                  hit[static_cast<std::size_t>(v)] = 1;
                              return std::count(hit.begin(), hit.end(), 1);
                          }()) +
                          ")";
                break;
            }
        }
        emit(g, "check-cube", name + " (dim " + std::to_string(cube.dim()) + ")",
             fnv1a(describe(cube)), ok ? "extension" : "not-an-extension", witness, 0.0);
        if (!ok) exit = 1;
    }
    return exit;
}

int run_check_resolution(const GlobalOptions& g, const std::string& path) {
    const auto doc = load_document(path);
    const auto E = the_class(g);
    if (doc.simplicials.empty())
        throw validation_error("no simplicial declarations in '" + path + "'");
    int exit = 0;
    for (const auto& [name, ss] : doc.simplicials) {
        if (!ss.augmented())
            throw validation_error("simplicial '" + name + "' is not augmented");
        const int level = g.level >= 0 ? std::min(g.level, ss.level()) : ss.level();
        std::optional<int> failed;
        for (int n = 0; n <= level; ++n)
            if (!is_exact_at(ss, n, E)) {
                failed = n;
                break;
            }
        emit(g, "check-resolution",
             name + " (level " + std::to_string(level) + ", class " + E.name() + ")",
             fnv1a(describe(ss)),
             failed ? "not-a-resolution" : "resolution",
             failed ? "not E-exact at level " + std::to_string(*failed) : "", 0.0);
        if (failed) exit = 1;
    }
    return exit;
}

int run_check_kan(const GlobalOptions& g, const std::string& path) {
    const auto doc = load_document(path);
    const auto E = the_class(g);
    if (doc.simplicials.empty())
        throw validation_error("no simplicial declarations in '" + path + "'");
    int exit = 0;
    for (const auto& [name, ss] : doc.simplicials) {
        const auto report = kan_report(ss, E);
        std::string witness;
        for (const auto& e : report.entries)
            if (!e.in_class)
                witness += "(" + std::to_string(e.n) + "," + std::to_string(e.k) + ") ";
        emit(g, "check-kan", name + " (class " + E.name() + ")", fnv1a(describe(ss)),
             report.kan ? "kan" : "not-kan",
             witness.empty() ? "" : "failing horns: " + witness, 0.0);
        if (!report.kan) exit = 1;
    }
    return exit;
}

int run_audit_class(const GlobalOptions& g, const std::string& path) {
    const auto doc = load_document(path);
    const auto E = the_class(g);
    if (doc.morphisms.empty())
        throw validation_error("no morphism declarations in '" + path + "'");
    std::vector<FinMorphism> universe;
    for (const auto& [name, m] : doc.morphisms) universe.push_back(m);
    const auto report = audit_axioms(E, universe);
    int exit = 0;
    for (const auto& f : report.findings) {
        const char* status = f.status == AxiomStatus::Violated ? "violated"
                             : f.status == AxiomStatus::NotApplicable
                                 ? "not-applicable"
                                 : "verified-on-universe";
        emit(g, "audit-class",
             report.class_name + " " + f.axiom + " (" + std::to_string(f.instances) +
                 " instances, " + report.universe + ")",
             fnv1a(report.universe + f.axiom), status, f.witness, 0.0);
        if (f.status == AxiomStatus::Violated) exit = 1;
    }
    return exit;
}

int run_tv_generate(const GlobalOptions& g, const std::string& path,
                    const std::string& out_path, const std::string& object_name) {
    const auto doc = load_document(path);
    const auto E = the_class(g);
    const int level = g.level >= 0 ? g.level : 2;
    if (doc.objects.empty())
        throw validation_error("no object declarations in '" + path + "'");

    Document out;
    out.metadata["generator"] = "tv-resolution";
    for (const auto& [name, x] : doc.objects) {
        if (!object_name.empty() && name != object_name) continue;
        const auto ss = tv_resolution(x, E, identity_cover(), level);
        // register every level object under a derived name
        for (int n = -1; n <= level; ++n) {
            const auto& obj = ss.object(n);
            bool present = false;
            for (const auto& [ename, eobj] : out.objects)
                if (eobj == obj) present = true;
            if (!present)
                out.objects.emplace(
                    name + "_tv_" + (n < 0 ? "m1" : std::to_string(n)), obj);
        }
        out.simplicials.emplace(name + "_tv", ss);
        const bool full = satisfies_full_identities(ss);
        std::cerr << "tv-generate: " << name << " -> level " << level
                  << (full ? " (degeneracies satisfy the full identities)" : "")
                  << "\n";
    }
    if (out.simplicials.empty())
        throw validation_error("object '" + object_name + "' not found");
    if (out_path.empty())
        std::cout << serialize_document(out);
    else
        save_document(out, out_path);
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& id) {
    SuiteOptions opts;
    opts.seed = g.seed;
    opts.size_cap = g.caps;
    const auto reports = run_suite(id, opts);
    int exit = 0;
    for (const auto& r : reports) {
        emit(g, r);
        if (r.verdict == Verdict::Violated) exit = 1;
    }
    return exit;
}

int run_search(const GlobalOptions& g, const std::string& category) {
    SuiteOptions opts;
    opts.seed = g.seed;
    opts.size_cap = g.caps;
    const auto r = search_maltsev_counterexample(category, opts);
    emit(g, r);
    return r.verdict == Verdict::Violated ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubex: higher extensions and simplicial resolutions over finite "
                 "concrete categories"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--class", g.class_name,
                   "extension class: surjections|split-epis|isomorphisms|all|set-split");
    app.add_option("--report", g.report, "report format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--level", g.level, "truncation level");
    app.add_option("--caps", g.caps, "size cap for searches and audits");

    std::string path, out_path, object_name, id = "all", category = "sets";

    app.fallthrough();
    auto* check_cube = app.add_subcommand("check-cube", "check cubes in a .cx file");
    check_cube->fallthrough();
    check_cube->add_option("file", path)->required();

    auto* check_res =
        app.add_subcommand("check-resolution", "check resolutions in a .cx file");
    check_res->fallthrough();
    check_res->add_option("file", path)->required();

    auto* check_kan = app.add_subcommand("check-kan", "check the Kan property");
    check_kan->fallthrough();
    check_kan->add_option("file", path)->required();

    auto* audit = app.add_subcommand("audit-class",
                                     "audit axioms (E1)-(E5) over the file's morphisms");
    audit->fallthrough();
    audit->add_option("file", path)->required();

    auto* tv = app.add_subcommand("tv-generate", "generate a Tierney-Vogel resolution");
    tv->fallthrough();
    tv->add_option("file", path)->required();
    tv->add_option("-o,--out", out_path, "output file (stdout when absent)");
    tv->add_option("--object", object_name, "which object to resolve");

    auto* verify = app.add_subcommand("verify", "run the theorem suite");
    verify->fallthrough();
    verify->add_option("--id", id, "check id or 'all'");

    auto* search = app.add_subcommand("search-counterexample",
                                      "search for a Mal'tsev counterexample");
    search->fallthrough();
    search->add_option("--category", category, "sets|groups")
        ->check(CLI::IsMember({"sets", "groups"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check_cube->parsed()) return run_check_cube(g, path);
        if (check_res->parsed()) return run_check_resolution(g, path);
        if (check_kan->parsed()) return run_check_kan(g, path);
        if (audit->parsed()) return run_audit_class(g, path);
        if (tv->parsed()) return run_tv_generate(g, path, out_path, object_name);
        if (verify->parsed()) return run_verify(g, id);
        if (search->parsed()) return run_search(g, category);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
