// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: cubex_acceptance [fixtures-dir]
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "cubex/format.hpp"
#include "cubex/theorems.hpp"

using namespace cubex;
namespace fs = std::filesystem;

namespace {

const ExtensionClass kSurj{ClassKind::Surjections};

struct Criterion {
    int number;
    std::string title;
    double budget_s;
    bool pass = false;
    std::string detail;
    double elapsed_s = 0.0;
};

class Runner {
public:
    template <typename F>
    void run(int number, const std::string& title, double budget_s, F&& body) {
        Criterion c{number, title, budget_s};
        const auto start = std::chrono::steady_clock::now();
        try {
            c.pass = body(c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        if (c.pass && c.elapsed_s > c.budget_s) {
            c.pass = false;
            c.detail = "exceeded the stated time budget";
        }
        results.push_back(c);
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion-" << c.number << "  "
                  << c.title << "  [" << c.elapsed_s << " s / " << c.budget_s << " s]";
        if (!c.detail.empty()) std::cout << "  -- " << c.detail;
        std::cout << std::endl;
    }

    std::vector<Criterion> results;
};

std::string structured_records(const std::vector<TheoremReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        nlohmann::json record;
        record["check"] = r.id;
        record["instance"] = r.instance;
        record["instance_hash"] = r.instance_hash;
        record["verdict"] = verdict_name(r.verdict);
        record["witness"] = r.witness;
        os << record.dump() << "\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const fs::path fixtures = argc > 1 ? argv[1] : "fixtures";
    Runner runner;
    SuiteOptions opts;
    opts.seed = 7;

    runner.run(1, "checker equivalence (exhaustive <=2 plus 1000 seeded random cubes)",
               120.0, [&](std::string& detail) {
                   const auto reports = run_suite("dip-equivalence", opts);
                   for (const auto& r : reports)
                       if (r.verdict != Verdict::Holds) {
                           detail = r.instance + ": " + r.witness;
                           return false;
                       }
                   detail = reports[0].instance;
                   return true;
               });

    runner.run(2, "resolution iff truncations are extensions (TV + 20 mutations)",
               300.0, [&](std::string& detail) {
                   const auto r = check_resolution_extensions(opts);
                   if (r.verdict != Verdict::Holds) {
                       detail = r.instance;
                       return false;
                   }
                   return true;
               });

    runner.run(3, "codomain agreement for all arrow views of arr_n", 120.0,
               [&](std::string& detail) {
                   std::vector<TruncatedSimplicial> instances;
                   instances.push_back(
                       tv_resolution(canonical_set(3), kSurj, identity_cover(), 3));
                   instances.push_back(
                       tv_resolution(cyclic_group(2), kSurj, identity_cover(), 3));
                   instances.push_back(constant_simplicial(klein_four_group(), 3));
                   instances.push_back(canonical_augmentation(nerve_of_ordinal2(2)));
                   Rng rng(opts.seed);
                   for (int i = 0; i < 5; ++i)
                       instances.push_back(random_simplicial_group(rng, 3, 8));
                   std::size_t checked = 0;
                   for (const auto& ss : instances)
                       for (int n = 1; n <= std::min(4, ss.level() + 1); ++n) {
                           const auto views = arrow_views(arr_n(ss, n));
                           for (const auto& v : views) {
                               ++checked;
                               if (!(v.codomain == views[0].codomain)) {
                                   detail = "codomain mismatch at n=" +
                                            std::to_string(n);
                                   return false;
                               }
                           }
                           if (!(views[0].codomain == arr_n(ss, n - 1))) {
                               detail = "codomain is not arr_{n-1} at n=" +
                                        std::to_string(n);
                               return false;
                           }
                       }
                   detail = std::to_string(checked) + " views compared";
                   return true;
               });

    runner.run(4, "Mal'tsev counterexample: witness in sets, none in groups", 610.0,
               [&](std::string& detail) {
                   SuiteOptions sets = opts;
                   sets.size_cap = 3;
                   const auto t0 = std::chrono::steady_clock::now();
                   const auto rs = search_maltsev_counterexample("sets", sets);
                   const double sets_s =
                       std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                     t0)
                           .count();
                   if (rs.verdict != Verdict::Violated ||
                       rs.witness.find("pullback size 4") == std::string::npos ||
                       rs.witness.find("comparison image size 3") == std::string::npos) {
                       detail = "sets search did not produce the expected witness";
                       return false;
                   }
                   if (sets_s > 10.0) {
                       detail = "sets search exceeded 10 s";
                       return false;
                   }
                   SuiteOptions groups = opts;
                   groups.size_cap = 6;
                   const auto rg = search_maltsev_counterexample("groups", groups);
                   if (rg.verdict != Verdict::NoneFoundInBounds) {
                       detail = "group search returned " + verdict_name(rg.verdict);
                       return false;
                   }
                   detail = "sets witness in " + std::to_string(sets_s) + " s; " +
                            rg.instance;
                   return true;
               });

    runner.run(5, "50 seeded truncated simplicial groups are E-Kan", 300.0,
               [&](std::string& detail) {
                   Rng rng(opts.seed);
                   for (int i = 0; i < 50; ++i) {
                       const int level = 2 + (i % 2);
                       const auto ss = random_simplicial_group(rng, level, 8);
                       if (!is_kan(ss, kSurj)) {
                           detail = "instance " + std::to_string(i) + " is not Kan: " +
                                    describe(ss);
                           return false;
                       }
                   }
                   detail = "50 instances, levels 2-3, base order <= 8";
                   return true;
               });

    runner.run(6, "the ordinal-2 nerve fails E-Kan at level <= 2", 5.0,
               [&](std::string& detail) {
                   const auto nerve = nerve_of_ordinal2(2);
                   const auto report = kan_report(nerve, kSurj);
                   if (report.kan) {
                       detail = "nerve is unexpectedly Kan";
                       return false;
                   }
                   for (const auto& e : report.entries)
                       if (!e.in_class && e.n <= 2) {
                           detail = "fails at (" + std::to_string(e.n) + "," +
                                    std::to_string(e.k) + ")";
                           return true;
                       }
                   detail = "no failure at n <= 2";
                   return false;
               });

    runner.run(7, "20 contractible Kan group instances are resolutions", 120.0,
               [&](std::string& detail) {
                   Rng rng(opts.seed);
                   for (int i = 0; i < 20; ++i) {
                       const auto ss = random_contractible_group_instance(rng, 2, 6);
                       const auto r = check_contractible_kan(ss, kSurj);
                       if (r.verdict != Verdict::Holds) {
                           detail = "instance " + std::to_string(i) + ": " +
                                    verdict_name(r.verdict) + " (" + r.instance + ")";
                           return false;
                       }
                   }
                   detail = "20 instances";
                   return true;
               });

    runner.run(8, "kernel-pair lemma on 100 seeded surjective group squares", 120.0,
               [&](std::string& detail) {
                   Rng rng(opts.seed);
                   for (int i = 0; i < 100; ++i) {
                       const auto s = random_surjective_group_square(rng, 8);
                       const auto r = check_kernel_pair_lemma(s, kSurj);
                       if (r.verdict != Verdict::Holds) {
                           detail = "square " + std::to_string(i) + ": " +
                                    verdict_name(r.verdict);
                           return false;
                       }
                   }
                   detail = "100 squares";
                   return true;
               });

    runner.run(9, "axioms go up: sets<=2 lift E1-E3, groups<=4 lift E1-E5", 600.0,
               [&](std::string& detail) {
                   SuiteOptions sets = opts;
                   sets.size_cap = 2;
                   const auto rs = check_axioms_go_up(kSurj, "sets", sets);
                   if (rs.verdict != Verdict::Holds) {
                       detail = "sets: " + rs.instance;
                       return false;
                   }
                   SuiteOptions groups = opts;
                   groups.size_cap = 4;
                   const auto rg = check_axioms_go_up(kSurj, "groups", groups);
                   if (rg.verdict != Verdict::Holds) {
                       detail = "groups: " + rg.instance;
                       return false;
                   }
                   detail = rg.instance;
                   return true;
               });

    runner.run(10, "format round-trip on the corpus; byte-identical seeded reports",
               300.0, [&](std::string& detail) {
                   std::size_t count = 0;
                   for (const auto& entry : fs::directory_iterator(fixtures)) {
                       if (!entry.is_regular_file() ||
                           entry.path().extension() != ".cx")
                           continue;
                       ++count;
                       std::ifstream in(entry.path());
                       std::ostringstream buf;
                       buf << in.rdbuf();
                       const auto doc = parse_document(buf.str());
                       const auto canonical = serialize_document(doc);
                       const auto doc2 = parse_document(canonical);
                       if (!(doc2 == doc)) {
                           detail = "parse o serialize is not the identity on " +
                                    entry.path().filename().string();
                           return false;
                       }
                       if (serialize_document(doc2) != canonical) {
                           detail = "serialization is not byte-stable on " +
                                    entry.path().filename().string();
                           return false;
                       }
                   }
                   if (count < 30) {
                       detail = "corpus has only " + std::to_string(count) + " files";
                       return false;
                   }
                   const auto run1 = structured_records(run_suite("all", opts));
                   const auto run2 = structured_records(run_suite("all", opts));
                   if (run1 != run2) {
                       detail = "two seeded verify runs differ";
                       return false;
                   }
                   detail = std::to_string(count) + " fixtures; " +
                            std::to_string(std::count(run1.begin(), run1.end(), '\n')) +
                            " identical structured records";
                   return true;
               });

    bool all = true;
    for (const auto& c : runner.results) all = all && c.pass;
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return all ? 0 : 1;
}
