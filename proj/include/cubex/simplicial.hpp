#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubex/cube.hpp"

namespace cubex {

enum class Flavor { Semi, Quasi, Full };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& name);

// An augmented (or plain) semi-/quasi-/full simplicial object truncated at
// level N: objects A_{-1}..A_N (A_{-1} only when augmented), faces
// d_i : A_n -> A_{n-1}, degeneracies s_i : A_n -> A_{n+1} for quasi/full,
// and an optional contraction witness s_{-1} : A_{n-1} -> A_n per level.
class TruncatedSimplicial {
public:
    TruncatedSimplicial() = default;

    struct Data {
        Flavor flavor = Flavor::Semi;
        int level = 0;
        bool augmented = true;
        // objects[k] is A_{k-1} when augmented, A_k otherwise
        std::vector<FinObject> objects;
        // faces[n][i] = d_i : A_n -> A_{n-1}; n from (augmented ? 0 : 1) to level
        std::map<int, std::vector<FinMorphism>> faces;
        // degeneracies[n][i] = s_i : A_n -> A_{n+1}; 0 <= i <= n < level
        std::map<int, std::vector<FinMorphism>> degeneracies;
        // contraction[n] = s_{-1} : A_{n-1} -> A_n for 0 <= n <= level
        std::map<int, FinMorphism> contraction;

        friend bool operator==(const Data&, const Data&) = default;
    };

    // Validating constructor: throws on the first identity violation.
    explicit TruncatedSimplicial(Data data);
    static TruncatedSimplicial unchecked(Data data);

    Flavor flavor() const { return data_.flavor; }
    int level() const { return data_.level; }
    bool augmented() const { return data_.augmented; }
    int lowest_level() const { return data_.augmented ? -1 : 0; }

    const FinObject& object(int n) const;
    const FinMorphism& face(int n, int i) const;
    const FinMorphism& degeneracy(int n, int i) const;
    bool has_contraction() const { return !data_.contraction.empty(); }
    const std::map<int, FinMorphism>& contraction() const { return data_.contraction; }
    const Data& data() const { return data_; }

    friend bool operator==(const TruncatedSimplicial&, const TruncatedSimplicial&) = default;

private:
    Data data_;
};

// A violated identity, with enough indices to locate it.
struct IdentityViolation {
    std::string identity; // human-readable, names the law and the indices
};

// Exhaustive check of all identities of the declared flavor (and the
// contraction identities when a witness is stored). Empty result = valid.
std::vector<IdentityViolation> validate(const TruncatedSimplicial& ss);

// ---- simplicial kernels and exactness --------------------------------------

// K_n: the universal family k_0..k_n with d_i k_j = d_{j-1} k_i, i.e. the
// simplicial kernel of the n faces A_{n-1} -> A_{n-2}. K_0 is A_{-1} with
// no legs. Legs are the cone legs named "k0".."kn".
struct KernelObject {
    int n = 0;
    Cone cone;

    const FinObject& apex() const { return cone.apex; }
    const FinMorphism& leg(int i) const { return cone.leg("k" + std::to_string(i)); }
};

KernelObject simplicial_kernel(const TruncatedSimplicial& ss, int n,
                               const Caps& caps = default_caps());

// The factorisation <d_0,...,d_n> : A_n -> K_n; absent when the faces do
// not satisfy the kernel relations (mutated objects).
std::optional<FinMorphism> kernel_comparison_opt(const TruncatedSimplicial& ss, int n,
                                                 const Caps& caps = default_caps());
FinMorphism kernel_comparison(const TruncatedSimplicial& ss, int n,
                              const Caps& caps = default_caps());

// E-exactness at A_{n-1}: the comparison A_n -> K_n is a member of E.
bool is_exact_at(const TruncatedSimplicial& ss, int n, const ExtensionClass& E,
                 const Caps& caps = default_caps());

// E-resolution up to the truncation level: exact at A_{-1}..A_{N-1}.
bool is_resolution(const TruncatedSimplicial& ss, const ExtensionClass& E,
                   const Caps& caps = default_caps());
// Smallest n in 0..N at which exactness fails; absent when a resolution.
std::optional<int> first_exactness_failure(const TruncatedSimplicial& ss,
                                           const ExtensionClass& E,
                                           const Caps& caps = default_caps());

// ---- horns and the Kan property --------------------------------------------

// The object of (n,k)-horns: tuples (x_i)_{i != k} with d_i x_j = d_{j-1} x_i
// for i < j, both != k. Legs named "a<i>". For n = 1 this is A_0 itself and
// the comparison is d_k.
struct HornObject {
    int n = 0;
    int k = 0;
    Cone cone;

    const FinObject& apex() const { return cone.apex; }
};

HornObject horn_object(const TruncatedSimplicial& ss, int n, int k,
                       const Caps& caps = default_caps());
std::optional<FinMorphism> horn_comparison_opt(const TruncatedSimplicial& ss, int n,
                                               int k, const Caps& caps = default_caps());
FinMorphism horn_comparison(const TruncatedSimplicial& ss, int n, int k,
                            const Caps& caps = default_caps());

struct KanReport {
    struct Entry {
        int n;
        int k;
        bool in_class;
    };
    std::vector<Entry> entries; // all (n,k), 1 <= n <= N, 0 <= k <= n
    bool kan = true;
};

KanReport kan_report(const TruncatedSimplicial& ss, const ExtensionClass& E,
                     const Caps& caps = default_caps());
bool is_kan(const TruncatedSimplicial& ss, const ExtensionClass& E,
            const Caps& caps = default_caps());

// All faces in E (an "E-semi-simplicial object").
bool faces_in_class(const TruncatedSimplicial& ss, const ExtensionClass& E);

// ---- shift, contraction, truncation functors -------------------------------

// A levelwise morphism of truncated simplicial objects.
struct SimplicialMorphism {
    TruncatedSimplicial dom;
    TruncatedSimplicial cod;
    std::map<int, FinMorphism> components; // per level of cod
};

// A^- (drop A_{-1} and all d_0, shift the rest down) plus the morphism
// (d_0)_n : A^- -> A. The result has level N-1.
struct Shifted {
    TruncatedSimplicial shifted;
    SimplicialMorphism projection;
};

Shifted shift(const TruncatedSimplicial& ss);

enum class ContractibleStatus { Witness, Absent, ExceededCap };

struct ContractionSearch {
    ContractibleStatus status = ContractibleStatus::Absent;
    std::map<int, FinMorphism> witness;
};

// Returns the stored witness when valid, otherwise searches level by level
// for the lexicographically first contraction (per-level candidate count
// bounded by caps.contraction_cap; cap overrun is reported distinctly).
ContractionSearch is_contractible(const TruncatedSimplicial& ss,
                                  const Caps& caps = default_caps());

// The n-cube of the truncation: A_S = object at level |S|-1, generator
// A_{S u {i}} -> A_S the face indexed by the position of i in S u {i}.
// Requires an augmented object and n <= N+1.
Cube arr_n(const TruncatedSimplicial& ss, int n);

// Augments a plain simplicial object over the one-point object of its
// signature. Rejects already-augmented input.
TruncatedSimplicial canonical_augmentation(const TruncatedSimplicial& ss);
// Drops the augmentation level.
TruncatedSimplicial strip_augmentation(const TruncatedSimplicial& ss);

// ---- Tierney-Vogel ----------------------------------------------------------

// Chooses an E-cover of each object from a projective; identity_cover is
// the default chooser (every object is projective for the surjections).
using CoverChooser = std::function<FinMorphism(const FinObject&)>;
CoverChooser identity_cover();

// Builds the level-N augmented quasi-simplicial resolution of X: cover,
// simplicial kernel, cover, ... Degeneracies are induced through the
// lexicographically first homomorphic sections of the covers.
TruncatedSimplicial tv_resolution(const FinObject& X, const ExtensionClass& E,
                                  const CoverChooser& chooser, int N,
                                  const Caps& caps = default_caps());

// Whether the degeneracies also satisfy the full simplicial identities
// (reported for quasi-simplicial constructions, never assumed).
bool satisfies_full_identities(const TruncatedSimplicial& ss);

// ---- helpers shared with the theorem suite ----------------------------------

// The squares-object of d : A^- -> A: level n holds the arrow
// (d_0)_{n+1} : A_{n+1} -> A_n, faces are the squares (d_{i+1}, d_i).
// E^1-exactness of that object, per level; used for the corollary checks.
struct SquaresObjectLevel {
    FinMorphism object;      // B_n
    SquareArrow exactness;   // comparison square B_{n+1} -> K_{n+1} of squares
};

// For n in 0..N-1 the exactness square of the squares-object at level n-1,
// i.e. the square whose horizontal components are the kernel comparisons of
// A^- and A at level n. Index 0 gives the square (d_1, d_0) itself.
std::vector<SquareArrow> squares_object_exactness(const TruncatedSimplicial& ss,
                                                  const Caps& caps = default_caps());

std::string describe(const TruncatedSimplicial& ss);

} // namespace cubex
