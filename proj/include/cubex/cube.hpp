#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubex/extension_class.hpp"

namespace cubex {

// Subsets of {0,...,dim-1} are bitmasks. Serialized as the sorted index
// list, e.g. "[0,2]".
using SubsetMask = std::uint32_t;

std::string subset_key(SubsetMask s);
std::optional<SubsetMask> parse_subset_key(const std::string& key, int dim);

// An n-dimensional arrow: one object per subset S of n and one generator
// morphism A_{S u {i}} -> A_S per i not in S. Composites are derived.
// Validation checks every square of generators commutes; `unchecked`
// skips that (used to exercise the checkers on broken data).
class Cube {
public:
    // generators[(S, i)] with i not in S: morphism A_{S|1<<i} -> A_S
    using GeneratorMap = std::map<std::pair<SubsetMask, int>, FinMorphism>;

    Cube() = default;
    Cube(int dim, std::vector<FinObject> objects, GeneratorMap generators);
    static Cube unchecked(int dim, std::vector<FinObject> objects,
                          GeneratorMap generators);

    int dim() const { return dim_; }
    SubsetMask full() const { return static_cast<SubsetMask>((1u << dim_) - 1u); }
    const FinObject& object(SubsetMask s) const { return objects_[s]; }
    const FinMorphism& generator(SubsetMask s, int i) const;

    // The composite A_T -> A_S for S subset of T (identity when S = T).
    FinMorphism composite(SubsetMask t, SubsetMask s) const;

    friend bool operator==(const Cube&, const Cube&) = default;

private:
    void validate() const;

    int dim_ = 0;
    std::vector<FinObject> objects_; // indexed by mask, size 2^dim
    GeneratorMap generators_;
};

// A 0-cube.
Cube point_cube(FinObject x);
// A 1-cube.
Cube arrow_cube(const FinMorphism& f);
// The 2-cube of a square (A_{0,1} = dom a, A_{1} = cod a, A_{0} = dom b, A_{} = cod b).
Cube square_cube(const SquareArrow& s);
SquareArrow cube_to_square(const Cube& c);

// One of the dim ways of reading an (n)-cube as an arrow between
// (n-1)-cubes: `direction` is the omitted index; subsets of the remaining
// indices are reindexed order-preservingly.
struct ArrowView {
    int direction = 0;
    Cube domain;    // restriction to subsets containing `direction`
    Cube codomain;  // restriction to subsets avoiding `direction`
    // component[S] : domain object at S  ->  codomain object at S
    std::vector<FinMorphism> components;
};

std::vector<ArrowView> arrow_views(const Cube& c);

// Inverse of arrow_views: rebuilds the cube from one view.
Cube reassemble(const ArrowView& v);

// The limit lim_{J proper subset of I} A_J, computed over the initial
// sub-diagram of subsets of size |I|-1 and |I|-2, and the induced
// comparison A_I -> lim. The comparison is absent when the cube does not
// commute (unchecked cubes).
struct SublimitComparison {
    Cone cone;
    std::optional<FinMorphism> comparison;
};

// The limit alone; needs only the generators strictly below I.
Cone sublimit_cone(const Cube& c, SubsetMask I, const Caps& caps = default_caps());

SublimitComparison sublimit_comparison(const Cube& c, SubsetMask I,
                                       const Caps& caps = default_caps());

// Condition (ii): for every nonempty I the comparison into lim_{J < I} A_J
// is a member of E. Dimension 0 is an extension by convention.
bool is_extension_limitwise(const Cube& c, const ExtensionClass& E,
                            const Caps& caps = default_caps());

// The inductive description: every arrow-view codomain is an extension of
// dimension n-1 and the top comparison is in E.
bool is_extension_inductive(const Cube& c, const ExtensionClass& E,
                            const Caps& caps = default_caps());

// Relabels the cube along a permutation of the directions.
Cube permute_cube(const Cube& c, const std::vector<int>& perm);

std::string describe(const Cube& c);

} // namespace cubex
