#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubex/format.hpp"
#include "cubex/generators.hpp"

using namespace cubex;
namespace fs = std::filesystem;

#ifndef CUBEX_FIXTURE_DIR
#define CUBEX_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("minimal object declaration") {
    const auto doc = parse_document("cubex-format 1\nobject x { elements \"a\" \"b\" }\n");
    REQUIRE(doc.objects.count("x"));
    CHECK(doc.objects.at("x").size() == 2);
    CHECK(doc.objects.at("x").label(0) == "a");
}

TEST_CASE("comments, metadata and escapes") {
    const auto doc = parse_document(
        "cubex-format 1\n# a comment\nmeta \"k\\\"ey\" \"v\\\\alue\"\n"
        "object x { elements \"a\" } # trailing\n");
    CHECK(doc.metadata.at("k\"ey") == "v\\alue");
    // round-trips through the canonical form
    const auto again = parse_document(serialize_document(doc));
    CHECK(again == doc);
}

TEST_CASE("group object with structure round-trips") {
    Document d;
    d.objects.emplace("z4", cyclic_group(4));
    const auto text = serialize_document(d);
    const auto parsed = parse_document(text);
    CHECK(parsed == d);
    CHECK(parsed.objects.at("z4").structure().signature.is_group());
}

TEST_CASE("morphism declarations resolve and validate") {
    const char* text = R"(cubex-format 1
object z2 {
  elements "0" "1"
  structure group {
    op e 0 ["0"]
    op inv 1 ["0" "1"]
    op mul 2 ["0" "1" "1" "0"]
  }
}
morphism id_z2 { dom z2 cod z2 map ["0" "1"] }
)";
    const auto doc = parse_document(text);
    CHECK(doc.morphisms.at("id_z2") == identity(doc.objects.at("z2")));

    // a non-homomorphism is rejected with a position
    const char* bad = R"(cubex-format 1
object z2 {
  elements "0" "1"
  structure group {
    op e 0 ["0"]
    op inv 1 ["0" "1"]
    op mul 2 ["0" "1" "1" "0"]
  }
}
morphism f { dom z2 cod z2 map ["1" "1"] }
)";
    CHECK_THROWS_AS(parse_document(bad), parse_error);
}

TEST_CASE("cube declarations: the bad square parses and the diagnostic names the triple") {
    const auto path = fs::path(CUBEX_FIXTURE_DIR) / "square-bad.cx";
    const auto doc = load_document(path.string());
    REQUIRE(doc.cubes.count("square_bad"));
    CHECK(doc.cubes.at("square_bad").dim() == 2);

    const auto bad = fs::path(CUBEX_FIXTURE_DIR) / "invalid" / "noncommuting-square.cx";
    try {
        load_document(bad.string());
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("(S=[], i=0, j=1)") != std::string::npos);
    }
}

TEST_CASE("simplicial diagnostics name the violated identity") {
    const auto bad = fs::path(CUBEX_FIXTURE_DIR) / "invalid" / "broken-identity.cx";
    try {
        load_document(bad.string());
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("d_i d_j = d_{j-1} d_i") != std::string::npos);
    }
}

TEST_CASE("reference and uniqueness diagnostics") {
    const auto dir = fs::path(CUBEX_FIXTURE_DIR) / "invalid";
    CHECK_THROWS_AS(load_document((dir / "unknown-reference.cx").string()), parse_error);
    CHECK_THROWS_AS(load_document((dir / "duplicate-name.cx").string()), parse_error);
    CHECK_THROWS_AS(load_document((dir / "bad-label.cx").string()), parse_error);
    CHECK_THROWS_AS(load_document((dir / "bad-group.cx").string()), parse_error);
    // positions are carried
    try {
        parse_document("cubex-format 1\nobject x { elements \"a\" \"a\" }\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("unsupported version and syntax errors") {
    CHECK_THROWS_AS(parse_document("cubex-format 2\n"), parse_error);
    CHECK_THROWS_AS(parse_document("nonsense"), parse_error);
    CHECK_THROWS_AS(parse_document("cubex-format 1\nobject { }"), parse_error);
}

TEST_CASE("serialization requires declared objects") {
    Document d;
    d.cubes.emplace("c", point_cube(canonical_set(2)));
    CHECK_THROWS_AS(serialize_document(d), validation_error);
}

TEST_CASE("round-trip on the whole fixture corpus") {
    const fs::path dir(CUBEX_FIXTURE_DIR);
    REQUIRE(fs::exists(dir));
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".cx") continue;
        ++count;
        INFO(entry.path().string());
        const auto original = slurp(entry.path());
        const auto doc = parse_document(original);
        const auto canonical = serialize_document(doc);
        // parse o serialize is the identity on documents
        const auto doc2 = parse_document(canonical);
        CHECK(doc2 == doc);
        // and serialization is byte-stable after one round
        CHECK(serialize_document(doc2) == canonical);
        // the generated corpus is already canonical
        CHECK(canonical == original);
    }
    CHECK(count >= 30);
}

TEST_CASE("empty document") {
    const auto doc = parse_document("cubex-format 1\n");
    CHECK(serialize_document(doc) == "cubex-format 1\n");
}

TEST_CASE("documents preserve simplicial structure through the format") {
    const ExtensionClass surj{ClassKind::Surjections};
    const auto path = fs::path(CUBEX_FIXTURE_DIR) / "tv-z2-l2.cx";
    const auto doc = load_document(path.string());
    REQUIRE(doc.simplicials.count("z2_tv"));
    const auto& ss = doc.simplicials.at("z2_tv");
    CHECK(is_resolution(ss, surj));
    CHECK(is_kan(ss, surj));
}
