// Regenerates the fixture corpus under fixtures/. Deterministic: rerunning
// produces byte-identical files.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cubex/format.hpp"
#include "cubex/generators.hpp"

using namespace cubex;
namespace fs = std::filesystem;

namespace {

std::string ensure_object(Document& d, const FinObject& o, const std::string& hint) {
    for (const auto& [n, eo] : d.objects)
        if (eo == o) return n;
    std::string name = hint;
    int k = 2;
    while (d.objects.count(name) || d.morphisms.count(name) || d.cubes.count(name) ||
           d.simplicials.count(name))
        name = hint + "_" + std::to_string(k++);
    d.objects.emplace(name, o);
    return name;
}

void add_cube(Document& d, const std::string& name, const Cube& c) {
    for (SubsetMask s = 0; s < (1u << c.dim()); ++s)
        ensure_object(d, c.object(s), name + "_o" + std::to_string(s));
    if (c.dim() == 0) ensure_object(d, c.object(0), name + "_o0");
    d.cubes.emplace(name, c);
}

void add_simplicial(Document& d, const std::string& name, const TruncatedSimplicial& ss) {
    for (int n = ss.lowest_level(); n <= ss.level(); ++n)
        ensure_object(d, ss.object(n),
                      name + "_L" + (n < 0 ? "m1" : std::to_string(n)));
    d.simplicials.emplace(name, ss);
}

void write(const fs::path& dir, const std::string& file, const Document& d) {
    save_document(d, (dir / file).string());
    std::cout << "wrote " << file << "\n";
}

void write_raw(const fs::path& dir, const std::string& file, const std::string& text) {
    std::ofstream out(dir / file);
    out << text;
    std::cout << "wrote " << file << "\n";
}

SquareArrow corner_square() {
    const auto a1 = FinObject({"00", "01", "10"});
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    return SquareArrow(FinMorphism(a1, two, {0, 0, 1}), FinMorphism(two, one, {0, 0}),
                       FinMorphism(a1, two, {0, 1, 0}), FinMorphism(two, one, {0, 0}));
}

} // namespace

int main(int argc, char** argv) {
    const fs::path dir = argc > 1 ? argv[1] : "fixtures";
    fs::create_directories(dir);
    fs::create_directories(dir / "invalid");

    // plain objects
    {
        Document d;
        d.objects.emplace("three", canonical_set(3));
        write(dir, "three.cx", d);
    }
    {
        Document d;
        d.objects.emplace("point", canonical_set(1));
        write(dir, "point.cx", d);
    }
    {
        Document d;
        d.objects.emplace("two", canonical_set(2));
        write(dir, "two.cx", d);
    }
    {
        Document d;
        d.objects.emplace("empty", FinObject(std::vector<std::string>{}));
        write(dir, "empty.cx", d);
    }

    // groups, one file each
    const std::vector<std::pair<std::string, FinObject>> groups = {
        {"z2", cyclic_group(2)},    {"z4", cyclic_group(4)},
        {"z6", cyclic_group(6)},    {"z8", cyclic_group(8)},
        {"v4", klein_four_group()}, {"s3", symmetric_group_3()},
        {"d4", dihedral_group_4()}, {"q8", quaternion_group()},
        {"z4xz2", direct_product_group(cyclic_group(4), cyclic_group(2))},
        {"z2cubed", direct_product_group(klein_four_group(), cyclic_group(2))},
    };
    for (const auto& [name, g] : groups) {
        Document d;
        d.objects.emplace(name, g);
        write(dir, name + ".cx", d);
    }

    // assorted morphisms
    {
        Document d;
        d.metadata["note"] = "assorted morphisms between small sets and groups";
        const auto two = canonical_set(2);
        const auto one = canonical_set(1);
        const auto z4 = cyclic_group(4);
        const auto z2 = cyclic_group(2);
        const auto v4 = klein_four_group();
        ensure_object(d, two, "two");
        ensure_object(d, one, "one");
        ensure_object(d, z4, "z4");
        ensure_object(d, z2, "z2");
        ensure_object(d, v4, "v4");
        d.morphisms.emplace("id_two", identity(two));
        d.morphisms.emplace("swap_two", FinMorphism(two, two, {1, 0}));
        d.morphisms.emplace("collapse", FinMorphism(two, one, {0, 0}));
        d.morphisms.emplace("quot_z4_z2", FinMorphism(z4, z2, {0, 1, 0, 1}));
        d.morphisms.emplace("proj_v4_z2", FinMorphism(v4, z2, {0, 0, 1, 1}));
        d.morphisms.emplace("double_z4", FinMorphism(z4, z4, {0, 2, 0, 2}));
        write(dir, "morphisms.cx", d);
    }

    // audit universes
    {
        Document d;
        d.metadata["note"] = "all maps between sets of size <= 2";
        std::vector<FinObject> sets{canonical_set(0), canonical_set(1), canonical_set(2)};
        for (int i = 0; i < 3; ++i) ensure_object(d, sets[static_cast<std::size_t>(i)],
                                                  "set" + std::to_string(i));
        int k = 0;
        for (const auto& a : sets)
            for (const auto& b : sets)
                for (const auto& m : all_maps(a, b))
                    d.morphisms.emplace("m" + std::to_string(k++), m);
        write(dir, "universe-sets2.cx", d);
    }
    {
        Document d;
        d.metadata["note"] = "all surjective homomorphisms between groups of order <= 4";
        int k = 0;
        for (const auto& m : all_group_surjections(4)) {
            ensure_object(d, m.dom(), "g" + std::to_string(k));
            ensure_object(d, m.cod(), "g" + std::to_string(k));
            d.morphisms.emplace("s" + std::to_string(k++), m);
        }
        write(dir, "universe-groups4.cx", d);
    }

    // squares as 2-cubes
    {
        Document d;
        d.metadata["note"] = "split epi of split epis that is not a double extension";
        add_cube(d, "square_bad", square_cube(corner_square()));
        write(dir, "square-bad.cx", d);
    }
    {
        Document d;
        add_cube(d, "square_id", square_cube(identity_square(identity(cyclic_group(2)))));
        write(dir, "square-id.cx", d);
    }
    {
        Document d;
        const auto q = FinMorphism(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
        const auto kp = compute_kernel_pair(q);
        add_cube(d, "square_kernel_pair",
                 square_cube(SquareArrow(kp.leg("pi0"), q, kp.leg("pi1"), q)));
        write(dir, "square-kernel-pair.cx", d);
    }
    {
        Document d;
        const auto two = canonical_set(2);
        const auto one = canonical_set(1);
        const auto f = FinMorphism(two, one, {0, 0});
        const auto pb = compute_pullback(f, f);
        add_cube(d, "square_pullback",
                 square_cube(SquareArrow(pb.leg("p0"), f, pb.leg("p1"), f)));
        write(dir, "square-pullback.cx", d);
    }
    {
        Document d;
        d.metadata["note"] = "diagonal square: surjective sides, no compatible splitting";
        const auto diag = FinObject({"00", "11"});
        const auto two = canonical_set(2);
        const auto one = canonical_set(1);
        add_cube(d, "square_diagonal",
                 square_cube(SquareArrow(FinMorphism(diag, two, {0, 1}),
                                         FinMorphism(two, one, {0, 0}),
                                         FinMorphism(diag, two, {0, 1}),
                                         FinMorphism(two, one, {0, 0}))));
        write(dir, "square-diagonal.cx", d);
    }
    {
        Document d;
        const auto z2 = cyclic_group(2);
        add_cube(d, "cube3_id",
                 arr_n(constant_simplicial(z2, 2), 3));
        write(dir, "cube3-identity.cx", d);
    }

    // seeded random cubes
    for (const auto& [seed, dim] :
         std::vector<std::pair<unsigned, int>>{{51, 2}, {52, 2}, {53, 3}, {54, 3}}) {
        Rng rng(seed);
        Document d;
        d.metadata["seed"] = std::to_string(seed);
        add_cube(d, "random_cube", random_set_cube(rng, dim, 3, 0.6));
        write(dir, "cube" + std::to_string(dim) + "-random-" + std::to_string(seed) + ".cx",
              d);
    }

    // simplicial objects
    {
        Document d;
        add_simplicial(d, "nerve2", nerve_of_ordinal2(2));
        write(dir, "nerve2.cx", d);
    }
    {
        Document d;
        add_simplicial(d, "nerve2_aug", canonical_augmentation(nerve_of_ordinal2(2)));
        write(dir, "nerve2-augmented.cx", d);
    }
    {
        Document d;
        add_simplicial(d, "constant_z2", constant_simplicial(cyclic_group(2), 2));
        write(dir, "constant-z2.cx", d);
    }
    {
        Document d;
        add_simplicial(d, "constant_three", constant_simplicial(canonical_set(3), 2));
        write(dir, "constant-three.cx", d);
    }
    const ExtensionClass surj{ClassKind::Surjections};
    for (const auto& [base_name, base, level] :
         std::vector<std::tuple<std::string, FinObject, int>>{
             {"three", canonical_set(3), 2},
             {"three", canonical_set(3), 3},
             {"z2", cyclic_group(2), 2},
             {"z2", cyclic_group(2), 3},
             {"v4", klein_four_group(), 2}}) {
        Document d;
        add_simplicial(d, base_name + "_tv",
                       tv_resolution(base, surj, identity_cover(), level));
        write(dir, "tv-" + base_name + "-l" + std::to_string(level) + ".cx", d);
    }
    {
        Document d;
        const auto tv = tv_resolution(cyclic_group(2), surj, identity_cover(), 3);
        add_simplicial(d, "shift_tv_z2", shift(tv).shifted);
        write(dir, "shift-tv-z2.cx", d);
    }
    {
        Rng rng(7);
        Document d;
        d.metadata["seed"] = "7";
        add_simplicial(d, "simplicial_group_7", random_simplicial_group(rng, 2, 8));
        write(dir, "simplicial-group-7.cx", d);
    }

    // invalid inputs for diagnostics (not part of the round-trip corpus)
    write_raw(dir, "invalid/noncommuting-square.cx", R"(cubex-format 1
object two { elements "0" "1" }
cube bad {
  dim 2
  node [] two
  node [0] two
  node [1] two
  node [0,1] two
  edge [0] -> [] ["0" "1"]
  edge [1] -> [] ["0" "1"]
  edge [0,1] -> [0] ["0" "1"]
  edge [0,1] -> [1] ["1" "0"]
}
)");
    write_raw(dir, "invalid/broken-identity.cx", R"(cubex-format 1
object two { elements "0" "1" }
simplicial bad {
  flavor semi
  level 1
  object -1 two
  object 0 two
  object 1 two
  face 0 0 ["0" "1"]
  face 1 0 ["0" "1"]
  face 1 1 ["1" "0"]
}
)");
    write_raw(dir, "invalid/unknown-reference.cx", R"(cubex-format 1
morphism f { dom nowhere cod nowhere map [] }
)");
    write_raw(dir, "invalid/duplicate-name.cx", R"(cubex-format 1
object x { elements "0" }
object x { elements "0" "1" }
)");
    write_raw(dir, "invalid/bad-label.cx", R"(cubex-format 1
object two { elements "0" "1" }
morphism f { dom two cod two map ["0" "7"] }
)");
    write_raw(dir, "invalid/bad-group.cx", R"(cubex-format 1
object notgroup {
  elements "0" "1"
  structure group {
    op e 0 ["0"]
    op inv 1 ["1" "0"]
    op mul 2 ["0" "1" "1" "0"]
  }
}
)");
    return 0;
}
