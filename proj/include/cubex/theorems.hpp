#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubex/generators.hpp"

namespace cubex {

enum class Verdict { Holds, Violated, Skipped, NoneFoundInBounds };

std::string verdict_name(Verdict v);

struct TheoremReport {
    std::string id;          // stable check id
    std::string instance;    // short instance description
    std::uint64_t instance_hash = 0;
    Verdict verdict = Verdict::Holds;
    std::string witness;     // replayable serialization, empty unless violated
    double wall_ms = 0.0;    // reported in text output only
};

// Search bounds shared by the suite.
struct SuiteOptions {
    std::uint64_t seed = 7;
    int size_cap = 3;        // carrier bound for set searches / order bound for groups
    Caps caps;
};

// Prop. (i)<=>(ii): both extension checkers agree on the cube.
TheoremReport check_dip_equivalence(const Cube& c, const ExtensionClass& E,
                                    const Caps& caps = default_caps());

// The four equivalent conditions around (E5), instantiated over a universe.
// category: "sets" or "groups".
TheoremReport check_e5_equivalences(const ExtensionClass& E, const std::string& category,
                                    const SuiteOptions& opts);

// Kernel-pair lemma on one square with all sides in E.
TheoremReport check_kernel_pair_lemma(const SquareArrow& s, const ExtensionClass& E,
                                      const Caps& caps = default_caps());

// (E1)-(E3) or (E1)-(E5) for the lifted class over squares built from a
// base universe of surjections.
TheoremReport check_axioms_go_up(const ExtensionClass& E, const std::string& category,
                                 const SuiteOptions& opts);

// Forward Kan theorem on one quasi- or full-flavored instance.
TheoremReport check_kan_theorem(const TruncatedSimplicial& ss, const ExtensionClass& E,
                                const Caps& caps = default_caps());

// Contractible + E-Kan => E-resolution on one instance.
TheoremReport check_contractible_kan(const TruncatedSimplicial& ss,
                                     const ExtensionClass& E,
                                     const Caps& caps = default_caps());

// Exhaustive search for a split epimorphism of split epimorphisms that is
// not a double extension. Witnesses are verified through the truncated
// contractible object of the converse construction before being reported.
TheoremReport search_maltsev_counterexample(const std::string& category,
                                            const SuiteOptions& opts);

// (E5+) instances over group quotients, plus the derived double extensions.
TheoremReport check_e5_plus_suite(const ExtensionClass& E, const SuiteOptions& opts);

// Theorem: resolution <=> all truncations are extensions, on generated
// Tierney-Vogel instances and their single-face mutations.
TheoremReport check_resolution_extensions(const SuiteOptions& opts);

// Runs the named check (or all of them for "all") over its built-in
// generated universes; the CLI's `verify` subcommand.
std::vector<TheoremReport> run_suite(const std::string& id, const SuiteOptions& opts);
std::vector<std::string> suite_ids();

// FNV-1a over a canonical description, for instance hashes.
std::uint64_t fnv1a(const std::string& text);

} // namespace cubex
