#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubex/fin_morphism.hpp"

namespace cubex {

struct Caps {
    std::size_t apex_cap = 1'000'000;        // max tuples in a limit apex
    std::size_t contraction_cap = 100'000;   // candidate tables per contraction level
    std::size_t universe_cap = 20'000;       // closure size bound for audits
    int cube_dim_cap = 6;
};

const Caps& default_caps();

// A cone over a diagram: the apex together with one leg per node.
// `order` records the tuple coordinate order of the apex labels.
struct Cone {
    FinObject apex;
    std::vector<std::string> order;
    std::map<std::string, FinMorphism> legs;

    const FinMorphism& leg(const std::string& node) const;
};

// A finite diagram: named objects and morphism-labelled edges.
struct FinDiagram {
    std::map<std::string, FinObject> nodes;
    struct Edge {
        std::string id;
        std::string src;
        std::string dst;
        FinMorphism morphism;
    };
    std::vector<Edge> edges;

    void validate() const;
};

// An equation between two coordinates of a tuple: m_left(x_left) = m_right(x_right).
// Both morphisms must share their codomain.
struct TupleEquation {
    std::size_t left;
    FinMorphism m_left;
    std::size_t right;
    FinMorphism m_right;
};

// Computes { (x_0,...,x_{k-1}) in prod objects : all equations hold }.
// Tuples are enumerated backtracking in coordinate order, elements in index
// order, which yields the lexicographic enumeration the callers rely on.
// Elements are labelled "(l_0,...,l_{k-1})". The apex inherits the pointwise
// structure iff every object carries the same signature.
// Legs are the coordinate projections, named by position via `leg_names`.
Cone tuple_limit(const std::vector<FinObject>& objects,
                 const std::vector<TupleEquation>& equations,
                 const std::vector<std::string>& leg_names,
                 const Caps& caps = default_caps());

// Limit of a general diagram; tuples run over all nodes in node-id order.
Cone compute_limit(const FinDiagram& d, const Caps& caps = default_caps());

// Pullback of a cospan: apex of pairs {(x,y) : f(x) = g(y)} with legs
// "p0" (towards dom f) and "p1" (towards dom g).
Cone compute_pullback(const FinMorphism& f, const FinMorphism& g,
                      const Caps& caps = default_caps());

// Kernel pair: the pullback of f with itself, legs "pi0" and "pi1".
Cone compute_kernel_pair(const FinMorphism& f, const Caps& caps = default_caps());

// The mediating morphism into a tuple-limit apex for the cone given by
// `legs` (one morphism per coordinate, in the cone's leg order, all with a
// common domain). Absent when some image tuple is not in the apex — for
// well-formed cones it always factors.
std::optional<FinMorphism> mediate(const Cone& cone,
                                   const std::vector<const FinMorphism*>& legs);

} // namespace cubex
