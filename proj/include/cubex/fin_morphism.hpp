#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubex/fin_algebra.hpp"

namespace cubex {

// A morphism of the working category: a total function table between
// carriers. When both ends carry the same signature the table must be a
// homomorphism; morphisms between differently-structured objects are
// rejected at construction.
class FinMorphism {
public:
    FinMorphism() = default;
    FinMorphism(FinObject dom, FinObject cod, std::vector<int> table);

    const FinObject& dom() const { return dom_; }
    const FinObject& cod() const { return cod_; }
    const std::vector<int>& table() const { return table_; }
    int operator()(int i) const { return table_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const FinMorphism&, const FinMorphism&) = default;

private:
    FinObject dom_;
    FinObject cod_;
    std::vector<int> table_;
};

FinMorphism identity(const FinObject& x);

// f after g: (f*g)(x) = f(g(x)); requires cod(g) = dom(f).
FinMorphism compose(const FinMorphism& f, const FinMorphism& g);

bool is_surjective(const FinMorphism& f);
bool is_injective(const FinMorphism& f);
bool is_iso(const FinMorphism& f);

// Whether `table` would be a homomorphism dom -> cod (both must share a
// signature for the question to make sense; plain sets always pass).
bool is_homomorphism(const FinObject& dom, const FinObject& cod,
                     const std::vector<int>& table);

// Lexicographically first section s (f o s = id) that is a morphism of
// the category, i.e. a homomorphism when the objects are algebras.
// With structure_free = true the structure check is skipped (the
// "split in sets" search); absent when no section exists.
std::optional<FinMorphism> find_section(const FinMorphism& f, bool structure_free = false);

inline std::optional<FinMorphism> is_split_epi(const FinMorphism& f) {
    return find_section(f);
}

struct KernelInclusion {
    FinObject object;     // sub-object of dom f on the fibre over the constant
    FinMorphism inclusion;
};

// Fibre of f over the designated constant of cod f, with its inclusion.
// Requires pointed algebras on both sides; the fibre must be closed
// under the operations (it is for group-like signatures).
KernelInclusion compute_kernel(const FinMorphism& f);

// Restriction K[a] -> K[b] of f: A1 -> B1 to kernels, for b o f = a' o ...
// callers pass the two kernels; the table is f restricted, which must land
// in the target fibre.
FinMorphism restrict_to_kernels(const FinMorphism& f, const KernelInclusion& ka,
                                const KernelInclusion& kb);

std::string describe(const FinMorphism& f);
std::string canonical_key(const FinMorphism& f);

} // namespace cubex
