#include <doctest.h>

#include "cubex/cube.hpp"
#include "cubex/errors.hpp"
#include "cubex/generators.hpp"

using namespace cubex;

namespace {

const ExtensionClass kSurj{ClassKind::Surjections};
const ExtensionClass kSplit{ClassKind::SplitEpis};
const ExtensionClass kAll{ClassKind::AllMorphisms};

SquareArrow corner_square() {
    const auto a1 = FinObject({"00", "01", "10"});
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    return SquareArrow(FinMorphism(a1, two, {0, 0, 1}), FinMorphism(two, one, {0, 0}),
                       FinMorphism(a1, two, {0, 1, 0}), FinMorphism(two, one, {0, 0}));
}

Cube identity_cube_dim2(const FinObject& x) {
    return square_cube(identity_square(identity(x)));
}

} // namespace

TEST_CASE("subset keys") {
    CHECK(subset_key(0) == "[]");
    CHECK(subset_key(0b101) == "[0,2]");
    CHECK(parse_subset_key("[0,2]", 3) == SubsetMask{0b101});
    CHECK(parse_subset_key("[]", 3) == SubsetMask{0});
    CHECK_FALSE(parse_subset_key("[3]", 3));
    CHECK_FALSE(parse_subset_key("0,2", 3));
}

TEST_CASE("cube construction and validation") {
    CHECK(point_cube(canonical_set(2)).dim() == 0);
    const auto f = FinMorphism(canonical_set(2), canonical_set(1), {0, 0});
    CHECK(arrow_cube(f).dim() == 1);
    CHECK_NOTHROW(identity_cube_dim2(canonical_set(2)));

    // a non-commuting square is rejected with the violating triple named
    const auto two = canonical_set(2);
    std::vector<FinObject> objs{two, two, two, two};
    Cube::GeneratorMap gen;
    gen.emplace(std::make_pair(SubsetMask{0b00}, 0), identity(two));
    gen.emplace(std::make_pair(SubsetMask{0b00}, 1), identity(two));
    gen.emplace(std::make_pair(SubsetMask{0b10}, 0), identity(two));
    gen.emplace(std::make_pair(SubsetMask{0b01}, 1), FinMorphism(two, two, {1, 0}));
    try {
        Cube c(2, objs, gen);
        FAIL("expected a commutativity error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("(S=[], i=0, j=1)") != std::string::npos);
    }

    // missing generator
    gen.erase({SubsetMask{0b01}, 1});
    CHECK_THROWS_AS(Cube(2, objs, gen), validation_error);
}

TEST_CASE("square <-> cube round trip") {
    const auto s = corner_square();
    const auto c = square_cube(s);
    CHECK(cube_to_square(c) == s);
}

TEST_CASE("arrow views and reassembly") {
    const auto f = FinMorphism(canonical_set(3), canonical_set(2), {0, 1, 1});
    const auto one_cube = arrow_cube(f);
    const auto views1 = arrow_views(one_cube);
    REQUIRE(views1.size() == 1);
    CHECK(views1[0].domain.object(0) == f.dom());
    CHECK(views1[0].codomain.object(0) == f.cod());
    CHECK(reassemble(views1[0]) == one_cube);

    const auto sq = square_cube(corner_square());
    const auto views2 = arrow_views(sq);
    REQUIRE(views2.size() == 2);
    for (const auto& v : views2) CHECK(reassemble(v) == sq);
    CHECK(arrow_views(point_cube(canonical_set(1))).empty());

    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        const auto c3 = random_set_cube(rng, 3, 3, 0.5);
        for (const auto& v : arrow_views(c3)) CHECK(reassemble(v) == c3);
    }
}

TEST_CASE("sublimit comparisons") {
    // |I| = 1: the limit is A_{} and the comparison is the generator
    const auto f = FinMorphism(canonical_set(3), canonical_set(2), {0, 1, 1});
    const auto c1 = arrow_cube(f);
    const auto sub1 = sublimit_comparison(c1, 0b1);
    CHECK(sub1.cone.apex.size() == 2);
    REQUIRE(sub1.comparison);
    CHECK(sub1.comparison->table() == f.table());

    // identity square: the top comparison is an iso
    const auto idsq = identity_cube_dim2(canonical_set(2));
    const auto sub2 = sublimit_comparison(idsq, 0b11);
    REQUIRE(sub2.comparison);
    CHECK(is_iso(*sub2.comparison));

    // the corner square: comparison hits 3 of 4
    const auto bad = square_cube(corner_square());
    const auto sub3 = sublimit_comparison(bad, 0b11);
    REQUIRE(sub3.comparison);
    CHECK(sub3.cone.apex.size() == 4);
    CHECK_FALSE(is_surjective(*sub3.comparison));
}

TEST_CASE("extension checkers on the canonical examples") {
    const auto surj = FinMorphism(canonical_set(3), canonical_set(2), {0, 1, 1});
    CHECK(is_extension_limitwise(arrow_cube(surj), kSurj));
    CHECK(is_extension_inductive(arrow_cube(surj), kSurj));

    CHECK(is_extension_limitwise(point_cube(canonical_set(2)), kSurj));

    const auto idcube = identity_cube_dim2(cyclic_group(2));
    CHECK(is_extension_limitwise(idcube, kSurj));
    CHECK(is_extension_inductive(idcube, kSurj));

    const auto bad = square_cube(corner_square());
    CHECK_FALSE(is_extension_limitwise(bad, kSurj));
    CHECK_FALSE(is_extension_inductive(bad, kSurj));

    // kernel-pair square of a surjection is an extension
    const auto q = FinMorphism(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
    const auto kp = compute_kernel_pair(q);
    const auto kpsq = square_cube(SquareArrow(kp.leg("pi0"), q, kp.leg("pi1"), q));
    CHECK(is_extension_limitwise(kpsq, kSurj));
    CHECK(is_extension_inductive(kpsq, kSurj));
}

TEST_CASE("checker equivalence, exhaustive on squares with carriers <= 2") {
    std::size_t squares = 0;
    for (int t = 0; t <= 2; ++t)
        for (int l = 0; l <= 2; ++l)
            for (int r = 0; r <= 2; ++r)
                for (int b = 0; b <= 2; ++b) {
                    const auto T = canonical_set(t), L = canonical_set(l),
                               R = canonical_set(r), B = canonical_set(b);
                    for (const auto& a : all_maps(T, L))
                        for (const auto& f1 : all_maps(T, R))
                            for (const auto& f0 : all_maps(L, B))
                                for (const auto& bb : all_maps(R, B)) {
                                    if (!(compose(f0, a) == compose(bb, f1))) continue;
                                    ++squares;
                                    const auto c =
                                        square_cube(SquareArrow(a, bb, f1, f0));
                                    for (const auto* cls : {&kSurj, &kSplit, &kAll})
                                        CHECK(is_extension_limitwise(c, *cls) ==
                                              is_extension_inductive(c, *cls));
                                }
                }
    CHECK(squares == 249); // frozen: independently enumerated
}

TEST_CASE("checker equivalence on seeded random cubes") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        const auto c2 = random_set_cube(rng, 2, 3, 0.6);
        CHECK(is_extension_limitwise(c2, kSurj) == is_extension_inductive(c2, kSurj));
        const auto c3 = random_set_cube(rng, 3, 3, 0.6);
        CHECK(is_extension_limitwise(c3, kSurj) == is_extension_inductive(c3, kSurj));
    }
}

TEST_CASE("checker equivalence on seeded random 4-cubes") {
    Rng rng(101);
    for (int i = 0; i < 5; ++i) {
        const auto c4 = random_set_cube(rng, 4, 2, 0.7);
        CHECK(is_extension_limitwise(c4, kSurj) == is_extension_inductive(c4, kSurj));
    }
}

TEST_CASE("monotonicity of extension verdicts across classes") {
    Rng rng(9);
    for (int i = 0; i < 25; ++i) {
        const auto c = random_set_cube(rng, 2, 3, 0.7);
        if (is_extension_limitwise(c, kSplit)) CHECK(is_extension_limitwise(c, kSurj));
        if (is_extension_limitwise(c, kSurj)) CHECK(is_extension_limitwise(c, kAll));
    }
}

TEST_CASE("permutation invariance of extension verdicts") {
    Rng rng(17);
    const std::vector<std::vector<int>> perms3{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                               {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    for (int i = 0; i < 8; ++i) {
        const auto c = random_set_cube(rng, 3, 3, 0.6);
        const bool base = is_extension_limitwise(c, kSurj);
        for (const auto& p : perms3) {
            const auto pc = permute_cube(c, p);
            CHECK(is_extension_limitwise(pc, kSurj) == base);
            CHECK(is_extension_inductive(pc, kSurj) == base);
        }
    }
    const auto sq = square_cube(corner_square());
    CHECK(permute_cube(sq, {0, 1}) == sq);
    const auto t = permute_cube(sq, {1, 0});
    CHECK(t.object(0b01) == sq.object(0b10));
    CHECK_FALSE(is_extension_limitwise(t, kSurj));
}

TEST_CASE("composites respect generator factorization") {
    Rng rng(23);
    const auto c = random_set_cube(rng, 3, 3, 0.5);
    const auto full = c.full();
    // removing indices one at a time in any order gives the same composite
    const auto direct = c.composite(full, 0);
    const auto step =
        compose(c.generator(0, 0),
                compose(c.generator(0b001, 1), c.generator(0b011, 2)));
    CHECK(direct == step);
    CHECK(c.composite(full, full) == identity(c.object(full)));
}

TEST_CASE("degenerate dimensions") {
    CHECK(is_extension_limitwise(point_cube(canonical_set(3)), kSurj));
    CHECK(is_extension_inductive(point_cube(canonical_set(3)), kSurj));
    const auto not_surj = FinMorphism(canonical_set(1), canonical_set(2), {0});
    CHECK_FALSE(is_extension_limitwise(arrow_cube(not_surj), kSurj));
    CHECK_FALSE(is_extension_inductive(arrow_cube(not_surj), kSurj));
}
