#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubex/limits.hpp"

namespace cubex {

enum class ClassKind { Surjections, SplitEpis, Isomorphisms, AllMorphisms, SetSplit };

// A named class E of morphisms: the membership predicate everything else
// is parametrised by.
struct ExtensionClass {
    ClassKind kind = ClassKind::Surjections;

    std::string name() const;
    // Accepts the canonical names and the CLI alias "all".
    static ExtensionClass parse(const std::string& name);
};

bool member(const ExtensionClass& E, const FinMorphism& f);

// A commutative square
//
//      A1 --f1--> B1
//      |a         |b
//      v          v
//      A0 --f0--> B0
//
// read as the morphism (f1,f0): a -> b between the vertical arrows.
struct SquareArrow {
    FinMorphism a;  // left
    FinMorphism b;  // right
    FinMorphism f1; // top
    FinMorphism f0; // bottom

    SquareArrow() = default;
    SquareArrow(FinMorphism a, FinMorphism b, FinMorphism f1, FinMorphism f0);
    static SquareArrow unchecked(FinMorphism a, FinMorphism b, FinMorphism f1,
                                 FinMorphism f0);

    friend bool operator==(const SquareArrow&, const SquareArrow&) = default;
};

// Swaps the two directions of the square: a<->f1, b<->f0.
SquareArrow transpose(const SquareArrow& s);

// The five membership conditions: a, b, f1, f0 and the comparison
// <a,f1> into the pullback of b and f0.
bool is_double_extension(const ExtensionClass& E, const SquareArrow& s,
                         const Caps& caps = default_caps());

// The class E^1 on squares. Further lifting happens on cubes.
struct LiftedClass {
    ExtensionClass base;

    std::string name() const { return base.name() + "^1"; }
    bool member(const SquareArrow& s, const Caps& caps = default_caps()) const {
        return is_double_extension(base, s, caps);
    }
};

inline LiftedClass lift_class(const ExtensionClass& E) { return LiftedClass{E}; }

// ---- axiom audit -----------------------------------------------------------

enum class AxiomStatus { VerifiedOnUniverse, Violated, NotApplicable };

struct AxiomFinding {
    std::string axiom;   // "E1".."E5"
    AxiomStatus status = AxiomStatus::VerifiedOnUniverse;
    std::size_t instances = 0;
    std::string witness;  // non-empty iff violated
};

struct AuditReport {
    std::string class_name;
    std::string universe;
    std::vector<AxiomFinding> findings; // sorted by axiom name

    bool all_verified() const;
    const AxiomFinding& finding(const std::string& axiom) const;
};

// Audits (E1)-(E5) for E against an explicit finite universe of morphisms.
// The universe is first closed under composition (bounded by caps); pullback
// legs constructed by the E2/E5 steps are tested in place. Verdicts are
// "verified on this universe", never a category-level proof.
AuditReport audit_axioms(const ExtensionClass& E, std::vector<FinMorphism> universe,
                         const Caps& caps = default_caps());

// Same audit one level up: class E^1 against a universe of squares.
AuditReport audit_axioms_squares(const ExtensionClass& E,
                                 std::vector<SquareArrow> universe,
                                 const Caps& caps = default_caps());

// ---- square-category helpers (shared with the theorem suite) --------------

SquareArrow compose_squares(const SquareArrow& f, const SquareArrow& g); // f after g
SquareArrow identity_square(const FinMorphism& x);
bool is_iso_square(const SquareArrow& s);

// All sections of f as a split epi in the category (homomorphic sections),
// in lexicographic table order.
std::vector<FinMorphism> all_sections(const FinMorphism& f);

// All sections of the square viewed as a morphism a -> b in the arrow
// category: pairs of component sections that commute with the verticals.
std::vector<SquareArrow> all_sections_square(const SquareArrow& s);

// Whether the square is a split epimorphism of split epimorphisms: sections
// of (f1, f0) commuting with the verticals, sections of (a, b) commuting
// with the horizontals, and the two pairs commuting with each other.
bool has_double_split_structure(const SquareArrow& s);

// Degreewise pullback of two squares with a common codomain arrow,
// with the two projection squares and the induced comparison for a cone.
struct SquarePullback {
    FinMorphism vertex;       // the pullback object (an arrow P1 -> P0)
    SquareArrow to_f;         // projection onto dom f
    SquareArrow to_g;         // projection onto dom g
    Cone top;                 // pullback cone of (f.f1, g.f1)
    Cone bottom;              // pullback cone of (f.f0, g.f0)
};

SquarePullback pullback_squares(const SquareArrow& f, const SquareArrow& g,
                                const Caps& caps = default_caps());

// Mediating square into pullback_squares(f,g) for legs u: w -> dom f,
// v: w -> dom g with f o u = g o v; absent when a component fails to factor.
std::optional<SquareArrow> mediate_squares(const SquarePullback& pb,
                                           const SquareArrow& u, const SquareArrow& v);

// ---- axiom (E5+) -----------------------------------------------------------

// Data of the (E5+) shape: two short exact rows over the same base,
//
//   0 -> K[a] -> A1 --a--> A0 -> 0
//         |k     |f        ||
//   0 -> K[b] -> B  --b--> A0 -> 0
//
// with a, b in E and k the restriction of f to the kernels.
// Returns whether the implication "k in E  =>  f in E" holds.
// Preconditions (pointed algebras, b o f = a, k = f restricted) are checked.
bool check_e5_plus(const ExtensionClass& E, const FinMorphism& a, const FinMorphism& b,
                   const FinMorphism& f, const FinMorphism& k);

std::string describe(const SquareArrow& s);
std::string canonical_key(const SquareArrow& s);

} // namespace cubex
