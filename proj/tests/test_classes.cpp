#include <doctest.h>

#include "cubex/errors.hpp"
#include "cubex/extension_class.hpp"
#include "cubex/generators.hpp"

using namespace cubex;

namespace {

const ExtensionClass kSurj{ClassKind::Surjections};
const ExtensionClass kSplit{ClassKind::SplitEpis};
const ExtensionClass kIso{ClassKind::Isomorphisms};
const ExtensionClass kAll{ClassKind::AllMorphisms};
const ExtensionClass kSetSplit{ClassKind::SetSplit};

FinMorphism quotient_z4_z2() {
    return FinMorphism(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
}

// A1 = {00,01,10} inside {0,1}x{0,1} with the two projections; the
// split epimorphism of split epimorphisms that is not a double extension.
SquareArrow corner_square() {
    const auto a1 = FinObject({"00", "01", "10"});
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    const FinMorphism a(a1, two, {0, 0, 1});   // first coordinate
    const FinMorphism f1(a1, two, {0, 1, 0});  // second coordinate
    const FinMorphism b(two, one, {0, 0});
    const FinMorphism f0(two, one, {0, 0});
    return SquareArrow(a, b, f1, f0);
}

} // namespace

TEST_CASE("class membership on the canonical examples") {
    const auto constmap = FinMorphism(canonical_set(2), canonical_set(1), {0, 0});
    CHECK(member(kSurj, constmap));
    CHECK_FALSE(member(kIso, constmap));
    CHECK(member(kAll, constmap));

    const auto q = quotient_z4_z2();
    CHECK(member(kSurj, q));
    CHECK_FALSE(member(kSplit, q));
    CHECK(member(kSetSplit, q));
}

TEST_CASE("class name parsing") {
    CHECK(ExtensionClass::parse("surjections").kind == ClassKind::Surjections);
    CHECK(ExtensionClass::parse("all").kind == ClassKind::AllMorphisms);
    CHECK(ExtensionClass::parse("all-morphisms").kind == ClassKind::AllMorphisms);
    CHECK(ExtensionClass::parse("set-split").kind == ClassKind::SetSplit);
    CHECK_THROWS_AS(ExtensionClass::parse("nope"), validation_error);
}

TEST_CASE("membership monotonicity across the classes") {
    std::vector<FinMorphism> samples;
    samples.push_back(quotient_z4_z2());
    samples.push_back(identity(cyclic_group(4)));
    samples.push_back(FinMorphism(klein_four_group(), cyclic_group(2), {0, 0, 1, 1}));
    samples.push_back(FinMorphism(canonical_set(3), canonical_set(2), {0, 1, 1}));
    samples.push_back(FinMorphism(canonical_set(2), canonical_set(2), {0, 0}));
    Rng rng(11);
    for (int i = 0; i < 10; ++i)
        samples.push_back(cube_to_square(random_set_cube(rng, 2, 3, 0.5)).a);

    for (const auto& f : samples) {
        if (member(kIso, f)) CHECK(member(kSplit, f));
        if (member(kSplit, f)) {
            CHECK(member(kSurj, f));
            CHECK(member(kSetSplit, f));
        }
        if (member(kSurj, f)) CHECK(member(kAll, f));
    }
}

TEST_CASE("double extensions: identity square and pullback squares") {
    const auto z2 = cyclic_group(2);
    CHECK(is_double_extension(kSurj, identity_square(identity(z2))));

    // a downward pullback square of surjections is a double extension
    const auto q = quotient_z4_z2();
    const auto kp = compute_kernel_pair(q);
    const SquareArrow kp_square(kp.leg("pi0"), q, kp.leg("pi1"), q);
    CHECK(is_double_extension(kSurj, kp_square));
}

TEST_CASE("the corner square is not a double extension") {
    const auto s = corner_square();
    CHECK(member(kSurj, s.a));
    CHECK(member(kSurj, s.b));
    CHECK(member(kSurj, s.f1));
    CHECK(member(kSurj, s.f0));
    CHECK_FALSE(is_double_extension(kSurj, s));
    CHECK(has_double_split_structure(s));

    // the comparison misses exactly one of the four pullback elements
    const auto pb = compute_pullback(s.b, s.f0);
    CHECK(pb.apex.size() == 4);
    auto cmp = mediate(pb, {&s.f1, &s.a});
    REQUIRE(cmp);
    std::vector<char> hit(4, 0);
    for (int v : cmp->table()) hit[static_cast<std::size_t>(v)] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == 3);

    // with all morphisms as the class it is a double extension
    CHECK(is_double_extension(kAll, s));
}

TEST_CASE("downward pullback squares of surjections are double extensions") {
    Rng rng(29);
    int built = 0;
    for (int i = 0; i < 40 && built < 12; ++i) {
        const auto f = cube_to_square(random_set_cube(rng, 2, 3, 0.8)).a;
        const auto g = cube_to_square(random_set_cube(rng, 2, 3, 0.8)).a;
        if (!member(kSurj, f) || !member(kSurj, g)) continue;
        if (!(f.cod() == g.cod())) continue;
        ++built;
        const auto pb = compute_pullback(f, g);
        const SquareArrow s(pb.leg("p0"), g, pb.leg("p1"), f);
        CHECK(is_double_extension(kSurj, s));
    }
    CHECK(built > 0);

    const auto q = quotient_z4_z2();
    const auto pb = compute_pullback(q, q);
    CHECK(is_double_extension(kSurj, SquareArrow(pb.leg("p0"), q, pb.leg("p1"), q)));
}

TEST_CASE("the diagonal square is not even a split epi of split epis") {
    const auto d = FinObject({"00", "11"});
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    const SquareArrow s(FinMorphism(d, two, {0, 1}), FinMorphism(two, one, {0, 0}),
                        FinMorphism(d, two, {0, 1}), FinMorphism(two, one, {0, 0}));
    CHECK_FALSE(is_double_extension(kSurj, s));
    CHECK(all_sections_square(s).empty());
    CHECK_FALSE(has_double_split_structure(s));
}

TEST_CASE("lift_class wraps double extensions") {
    const auto L = lift_class(kSurj);
    CHECK(L.name() == "surjections^1");
    CHECK(L.member(identity_square(identity(canonical_set(2)))));
    CHECK_FALSE(L.member(corner_square()));
    const auto anything = cube_to_square(square_cube(corner_square()));
    CHECK(lift_class(kAll).member(anything));
}

TEST_CASE("double extension membership is transposition invariant") {
    std::vector<SquareArrow> squares{corner_square(),
                                     identity_square(quotient_z4_z2())};
    Rng rng(5);
    for (int i = 0; i < 15; ++i) squares.push_back(random_set_square(rng, 3));
    for (const auto& s : squares)
        for (const auto* cls : {&kSurj, &kAll, &kSetSplit})
            CHECK(is_double_extension(*cls, s) ==
                  is_double_extension(*cls, transpose(s)));
}

TEST_CASE("double extension agrees with the cube characterization") {
    // the five-membership definition and the comparison conditions coincide
    // for classes closed under pullback, composition and right cancellation
    Rng rng(77);
    std::vector<SquareArrow> squares{corner_square(),
                                     identity_square(quotient_z4_z2())};
    for (int i = 0; i < 30; ++i) squares.push_back(random_set_square(rng, 3));
    for (int i = 0; i < 8; ++i)
        squares.push_back(random_surjective_group_square(rng, 6));
    for (const auto& s : squares)
        for (const auto* cls : {&kSurj, &kSplit, &kAll, &kSetSplit}) {
            const auto cube = square_cube(s);
            CHECK(is_double_extension(*cls, s) ==
                  is_extension_limitwise(cube, *cls));
        }
}

TEST_CASE("square commutativity is validated") {
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    const FinMorphism swap(two, two, {1, 0});
    const FinMorphism bang(two, one, {0, 0});
    CHECK_THROWS_AS(SquareArrow(swap, identity(two), identity(two), identity(two)),
                    validation_error);
    CHECK_NOTHROW(SquareArrow(swap, bang, swap, bang));
}

TEST_CASE("audit: surjections on small sets verify E1-E4") {
    std::vector<FinMorphism> universe;
    for (int d = 0; d <= 2; ++d)
        for (int c = 0; c <= 2; ++c)
            for (const auto& m : all_maps(canonical_set(d), canonical_set(c)))
                universe.push_back(m);
    const auto report = audit_axioms(kSurj, universe);
    CHECK(report.finding("E1").status == AxiomStatus::VerifiedOnUniverse);
    CHECK(report.finding("E2").status == AxiomStatus::VerifiedOnUniverse);
    CHECK(report.finding("E3").status == AxiomStatus::VerifiedOnUniverse);
    CHECK(report.finding("E4").status == AxiomStatus::VerifiedOnUniverse);
    CHECK(report.finding("E1").instances > 0);
}

TEST_CASE("audit: the corner square witnesses an E5 violation") {
    const auto s = corner_square();
    std::vector<FinMorphism> universe{s.a, s.b, s.f1, s.f0,
                                      identity(s.a.dom()), identity(s.a.cod()),
                                      identity(s.b.dom()), identity(s.b.cod())};
    const auto report = audit_axioms(kSurj, universe);
    CHECK(report.finding("E5").status == AxiomStatus::Violated);
    CHECK_FALSE(report.finding("E5").witness.empty());
}

TEST_CASE("audit: surjections on groups of order <= 4 verify E1-E5") {
    const auto universe = all_group_surjections(4);
    const auto report = audit_axioms(kSurj, universe);
    for (const char* ax : {"E1", "E2", "E3", "E4", "E5"}) {
        INFO(ax);
        CHECK(report.finding(ax).status == AxiomStatus::VerifiedOnUniverse);
    }
    CHECK(report.finding("E5").instances > 0);
    CHECK(report.all_verified());
}

TEST_CASE("audit: isomorphisms fail E4 on sets") {
    std::vector<FinMorphism> universe;
    for (int d = 1; d <= 2; ++d)
        for (int c = 1; c <= 2; ++c)
            for (const auto& m : all_maps(canonical_set(d), canonical_set(c)))
                universe.push_back(m);
    const auto report = audit_axioms(kIso, universe);
    CHECK(report.finding("E1").status == AxiomStatus::VerifiedOnUniverse);
    CHECK(report.finding("E4").status == AxiomStatus::Violated);
}

TEST_CASE("e5+ instances") {
    const auto z2 = cyclic_group(2);
    const auto idmap = identity(z2);
    const auto k_id = restrict_to_kernels(idmap, compute_kernel(idmap),
                                          compute_kernel(idmap));
    CHECK(check_e5_plus(kSurj, idmap, idmap, idmap, k_id));

    // rows built from Z4 -> Z2: k surjective forces f surjective, and the
    // set-split instance has the section promised by the product formula
    const auto z4 = cyclic_group(4);
    const auto a = FinMorphism(z4, z2, {0, 1, 0, 1});
    const auto b = FinMorphism(z2, z2, {0, 1});
    const auto f = FinMorphism(z4, z2, {0, 1, 0, 1});
    const auto k = restrict_to_kernels(f, compute_kernel(a), compute_kernel(b));
    CHECK(check_e5_plus(kSurj, a, b, f, k));
    CHECK(check_e5_plus(kSetSplit, a, b, f, k));
    // for isomorphisms the hypothesis k iso fails here, so the implication
    // holds vacuously; a group instance with k iso forces f iso
    CHECK_FALSE(member(kIso, k));
    CHECK(check_e5_plus(kIso, a, b, f, k));

    CHECK_THROWS_AS(check_e5_plus(kSurj, a, b, f, k_id), validation_error);
}

TEST_CASE("square category plumbing") {
    const auto q = quotient_z4_z2();
    const auto idq = identity_square(q);
    CHECK(is_iso_square(idq));
    CHECK(compose_squares(idq, idq) == idq);

    const auto pb = pullback_squares(idq, idq);
    CHECK(pb.vertex.dom().size() == q.dom().size());
    auto med = mediate_squares(pb, idq, idq);
    REQUIRE(med);
    CHECK(is_iso_square(*med));
}
