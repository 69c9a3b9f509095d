#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubex/simplicial.hpp"

namespace cubex {

using Rng = std::mt19937_64;

// ---- group catalog ----------------------------------------------------------

Signature group_signature();

FinObject cyclic_group(int n);
FinObject klein_four_group();
FinObject symmetric_group_3();
FinObject dihedral_group_4();
FinObject quaternion_group();
FinObject direct_product_group(const FinObject& g, const FinObject& h);

struct NamedObject {
    std::string name;
    FinObject object;
};

// All groups of order <= max_order up to isomorphism, for max_order <= 8
// (complete through order 6; through 8 the catalog carries the standard
// candidates Z7, Z8, Z4xZ2, Z2^3, D4, Q8).
std::vector<NamedObject> group_catalog(int max_order);

// ---- morphism enumeration ---------------------------------------------------

// All maps dom -> cod as plain tables (dom and cod must be plain sets).
std::vector<FinMorphism> all_maps(const FinObject& dom, const FinObject& cod);

// All homomorphisms dom -> cod, backtracking in lexicographic table order.
std::vector<FinMorphism> all_homs(const FinObject& dom, const FinObject& cod);

std::vector<FinMorphism> surjective_homs(const FinObject& dom, const FinObject& cod);

// ---- random generation ------------------------------------------------------

// A random cube built limit-first: objects are chosen per subset together
// with a random map into the sublimit of the already-built part, so every
// composition square commutes by construction. `surjective_bias` is the
// probability that a chosen map is forced to be surjective (when possible).
Cube random_set_cube(Rng& rng, int dim, int max_carrier, double surjective_bias);

// A random commuting square of finite sets with no structure.
SquareArrow random_set_square(Rng& rng, int max_carrier);

// A random commuting square of groups with all four maps surjective,
// drawn from the catalog of order <= max_order.
SquareArrow random_surjective_group_square(Rng& rng, int max_order);

// A split epimorphism of split epimorphisms in groups (the E5 shape),
// drawn from the catalog; absent when the sampled configuration admits none.
std::vector<SquareArrow> split_epi_of_split_epi_group_squares(int max_order,
                                                              std::size_t limit);

// A random truncated simplicial group: a Tierney-Vogel resolution with
// split product covers, twisted levelwise by random automorphisms, with
// the augmentation optionally replaced by a random quotient of the base.
TruncatedSimplicial random_simplicial_group(Rng& rng, int level, int max_order);

// A random contractible Kan instance in groups: the shift of a Tierney-Vogel
// resolution, or a constant object, twisted by automorphisms.
TruncatedSimplicial random_contractible_group_instance(Rng& rng, int level,
                                                       int max_order);

// The nerve of the ordinal {0 < 1}, truncated at `level` (a full simplicial
// set; not augmented). Elements at level n are the monotone 0/1-words of
// length n+1.
TruncatedSimplicial nerve_of_ordinal2(int level);

// The constant simplicial object on X (full flavor, with contraction).
TruncatedSimplicial constant_simplicial(const FinObject& x, int level);

// All surjections between plain sets of size 0..max_size (canonical carriers).
std::vector<FinMorphism> all_set_surjections(int max_size);

// All surjective homomorphisms between catalog groups of order <= max_order.
std::vector<FinMorphism> all_group_surjections(int max_order);

// All commuting squares whose four sides are drawn from `sides`.
std::vector<SquareArrow> all_squares_from(const std::vector<FinMorphism>& sides);

} // namespace cubex
