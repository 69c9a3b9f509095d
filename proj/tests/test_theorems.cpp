#include <doctest.h>

#include "cubex/errors.hpp"
#include "cubex/theorems.hpp"

using namespace cubex;

namespace {

const ExtensionClass kSurj{ClassKind::Surjections};
const ExtensionClass kAll{ClassKind::AllMorphisms};

SquareArrow corner_square() {
    const auto a1 = FinObject({"00", "01", "10"});
    const auto two = canonical_set(2);
    const auto one = canonical_set(1);
    return SquareArrow(FinMorphism(a1, two, {0, 0, 1}), FinMorphism(two, one, {0, 0}),
                       FinMorphism(a1, two, {0, 1, 0}), FinMorphism(two, one, {0, 0}));
}

} // namespace

TEST_CASE("dip equivalence reports") {
    const auto id2 = square_cube(identity_square(identity(canonical_set(2))));
    CHECK(check_dip_equivalence(id2, kSurj).verdict == Verdict::Holds);
    // both checkers reject the corner square, so the equivalence holds there too
    CHECK(check_dip_equivalence(square_cube(corner_square()), kSurj).verdict ==
          Verdict::Holds);
    Rng rng(13);
    const auto c3 = random_set_cube(rng, 3, 3, 0.5);
    CHECK(check_dip_equivalence(c3, kSurj).verdict == Verdict::Holds);
}

TEST_CASE("e5 equivalences hold for groups and fail for sets") {
    SuiteOptions opts;
    opts.size_cap = 3;
    const auto grp = check_e5_equivalences(kSurj, "groups", {7, 4, {}});
    CHECK(grp.verdict == Verdict::Holds);

    const auto sets = check_e5_equivalences(kSurj, "sets", opts);
    CHECK(sets.verdict == Verdict::Violated);
    CHECK_FALSE(sets.witness.empty());

    const auto all = check_e5_equivalences(kAll, "sets", {7, 2, {}});
    CHECK(all.verdict == Verdict::Holds);
}

TEST_CASE("kernel pair lemma on identity and generated squares") {
    CHECK(check_kernel_pair_lemma(identity_square(identity(cyclic_group(2))), kSurj)
              .verdict == Verdict::Holds);
    Rng rng(21);
    for (int i = 0; i < 12; ++i) {
        const auto s = random_surjective_group_square(rng, 8);
        CHECK(check_kernel_pair_lemma(s, kSurj).verdict == Verdict::Holds);
    }
    // set squares also satisfy the lemma: only (E1)-(E4) are needed
    const auto sets = check_kernel_pair_lemma(corner_square(), kSurj);
    CHECK(sets.verdict == Verdict::Holds);
}

TEST_CASE("axioms go up") {
    SuiteOptions sets;
    sets.size_cap = 2;
    const auto s = check_axioms_go_up(kSurj, "sets", sets);
    CHECK(s.verdict == Verdict::Holds);

    SuiteOptions grp;
    grp.size_cap = 4;
    const auto g = check_axioms_go_up(kSurj, "groups", grp);
    CHECK(g.verdict == Verdict::Holds);
    CHECK(g.instance.find("E5=verified") != std::string::npos);

    // isomorphisms fail (E4) at the base, so the lifted audit is skipped
    const auto iso = check_axioms_go_up(ExtensionClass{ClassKind::Isomorphisms}, "sets",
                                        sets);
    CHECK(iso.verdict == Verdict::Skipped);
}

TEST_CASE("kan theorem checks") {
    Rng rng(3);
    const auto ss = random_simplicial_group(rng, 2, 6);
    CHECK(check_kan_theorem(ss, kSurj).verdict == Verdict::Holds);

    const auto nerve = nerve_of_ordinal2(2);
    const auto r = check_kan_theorem(nerve, kSurj);
    CHECK(r.verdict == Verdict::Violated);
    CHECK(r.witness.find("(2,") != std::string::npos);

    const auto semi = strip_augmentation(constant_simplicial(cyclic_group(2), 1));
    auto d = semi.data();
    d.flavor = Flavor::Semi;
    d.degeneracies.clear();
    CHECK(check_kan_theorem(TruncatedSimplicial(std::move(d)), kSurj).verdict ==
          Verdict::Skipped);
}

TEST_CASE("contractible kan reports") {
    const auto c = constant_simplicial(cyclic_group(2), 2);
    CHECK(check_contractible_kan(c, kSurj).verdict == Verdict::Holds);
    // hypothesis failure: the nerve (augmented) is contractible but not Kan
    const auto nerve = canonical_augmentation(nerve_of_ordinal2(2));
    CHECK(check_contractible_kan(nerve, kSurj).verdict == Verdict::Skipped);
}

TEST_CASE("maltsev counterexample search in sets finds the corner square") {
    SuiteOptions opts;
    opts.size_cap = 3;
    const auto r = search_maltsev_counterexample("sets", opts);
    CHECK(r.verdict == Verdict::Violated);
    CHECK(r.witness.find("pullback size 4") != std::string::npos);
    CHECK(r.witness.find("comparison image size 3") != std::string::npos);

    // identical caps give identical witnesses
    const auto r2 = search_maltsev_counterexample("sets", opts);
    CHECK(r2.witness == r.witness);

    SuiteOptions tiny;
    tiny.size_cap = 1;
    CHECK(search_maltsev_counterexample("sets", tiny).verdict ==
          Verdict::NoneFoundInBounds);
}

TEST_CASE("maltsev counterexample search in small groups finds nothing") {
    SuiteOptions opts;
    opts.size_cap = 4;
    const auto r = search_maltsev_counterexample("groups", opts);
    CHECK(r.verdict == Verdict::NoneFoundInBounds);
    CHECK(r.instance.find("split instances checked") != std::string::npos);
}

TEST_CASE("e5+ suite over small groups") {
    SuiteOptions opts;
    opts.size_cap = 4;
    CHECK(check_e5_plus_suite(kSurj, opts).verdict == Verdict::Holds);
    CHECK(check_e5_plus_suite(ExtensionClass{ClassKind::SetSplit}, opts).verdict ==
          Verdict::Holds);
}

TEST_CASE("resolution-extensions theorem bundle") {
    SuiteOptions opts;
    opts.seed = 7;
    CHECK(check_resolution_extensions(opts).verdict == Verdict::Holds);
}

TEST_CASE("suite runs are reproducible") {
    SuiteOptions opts;
    opts.seed = 7;
    const auto a = run_suite("dip-equivalence", opts);
    const auto b = run_suite("dip-equivalence", opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].instance_hash == b[i].instance_hash);
        CHECK(verdict_name(a[i].verdict) == verdict_name(b[i].verdict));
        CHECK(a[i].witness == b[i].witness);
    }
    CHECK_THROWS_AS(run_suite("no-such-check", opts), validation_error);
}
