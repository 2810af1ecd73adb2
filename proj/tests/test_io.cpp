#include "weakhopf/io.hpp"
#include "weakhopf/weak_bimonoid.hpp"
#include "weakhopf/zoo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace weakhopf;

namespace {

// The test binary receives the repository root as its working directory
// (set by the build harness); fall back to walking up from cwd otherwise.
std::filesystem::path data_dir() {
    std::filesystem::path p = std::filesystem::current_path();
    for (int depth = 0; depth < 5; ++depth) {
        if (std::filesystem::exists(p / "data" / "algebras")) return p / "data";
        p = p.parent_path();
    }
    FAIL("cannot locate the data/ directory from the current working directory");
    return {};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMinimal = R"({
  "tensor_order": "left-major",
  "dim": 1,
  "mu": [["1"]],
  "eta": ["1"],
  "delta": [["1"]],
  "eps": ["1"]
})";

std::string with_field(const std::string& base, const std::string& field,
                       const std::string& value) {
    std::string out = base;
    size_t pos = out.rfind('}');
    out.insert(pos, ",\n  \"" + field + "\": " + value + "\n");
    return out;
}

}  // namespace

TEST_CASE("every shipped algebra file round-trips byte-exactly") {
    for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "algebras")) {
        INFO(entry.path().string());
        std::string text = slurp(entry.path());
        AlgebraSpec spec = parse_algebra_text(text);
        REQUIRE(serialize_algebra_text(spec) == text);
        AlgebraSpec again = parse_algebra_text(serialize_algebra_text(spec));
        REQUIRE(serialize_algebra_text(again) == text);
        REQUIRE(again.name == spec.name);
        REQUIRE(again.dim == spec.dim);
        REQUIRE(again.mu == spec.mu);
        REQUIRE(again.eta == spec.eta);
        REQUIRE(again.delta == spec.delta);
        REQUIRE(again.eps == spec.eps);
        REQUIRE(again.modules.size() == spec.modules.size());
    }
}

TEST_CASE("shipped corpus files reconstruct the in-memory corpus") {
    for (const auto& entry : corpus()) {
        INFO(entry.name);
        AlgebraSpec spec = load_algebra_file((data_dir() / "algebras" / (entry.name + ".json")).string());
        REQUIRE(spec.name == entry.name);
        WeakBimonoid B = spec.to_algebra();
        REQUIRE(B.dim == entry.algebra.dim);
        REQUIRE(B.mu == entry.algebra.mu);
        REQUIRE(B.eta == entry.algebra.eta);
        REQUIRE(B.delta == entry.algebra.delta);
        REQUIRE(B.eps == entry.algebra.eps);
        // the three standard modules are embedded under their names
        for (const auto& [mname, mod] : standard_modules(entry)) {
            RightModule loaded = spec.find_module(mname);
            REQUIRE(loaded.carrier == mod.carrier);
            REQUIRE(loaded.action == mod.action);
        }
    }
}

TEST_CASE("digests are stable and content-sensitive") {
    AlgebraSpec two_points =
        load_algebra_file((data_dir() / "algebras" / "two_points.json").string());
    REQUIRE(algebra_digest(two_points) == "fnv1a64:cfb665f69cb59934");
    AlgebraSpec pair2 = load_algebra_file((data_dir() / "algebras" / "pair2.json").string());
    REQUIRE(algebra_digest(pair2) == "fnv1a64:54dd74b9c2799017");
    // the digest covers the serialized file: meta and matrix edits both count
    AlgebraSpec renamed = two_points;
    for (auto& [key, value] : renamed.meta)
        if (key == "name") value = "other";
    REQUIRE(algebra_digest(renamed) != algebra_digest(two_points));
    AlgebraSpec scaled = two_points;
    scaled.mu.set_entry(0, 0, Rational(2));
    REQUIRE(algebra_digest(scaled) != algebra_digest(two_points));
    // while the derived display name alone is not serialized content
    AlgebraSpec display = two_points;
    display.name = "other";
    REQUIRE(algebra_digest(display) == algebra_digest(two_points));
}

TEST_CASE("invalid inputs are rejected with located diagnostics") {
    SECTION("syntax errors carry the JSON parser position") {
        REQUIRE_THROWS_WITH(
            load_algebra_file((data_dir() / "invalid" / "bad_syntax.json").string()),
            Catch::Matchers::ContainsSubstring("JSON syntax"));
    }
    SECTION("shape errors name the offending field") {
        REQUIRE_THROWS_WITH(
            load_algebra_file((data_dir() / "invalid" / "bad_shape.json").string()),
            Catch::Matchers::ContainsSubstring("mu"));
    }
    SECTION("the tensor convention marker is mandatory") {
        REQUIRE_THROWS_WITH(
            load_algebra_file((data_dir() / "invalid" / "bad_tensor_order.json").string()),
            Catch::Matchers::ContainsSubstring("tensor_order"));
    }
    SECTION("missing files") {
        REQUIRE_THROWS_AS(load_algebra_file("no_such_file.json"), ParseError);
    }
}

TEST_CASE("field-level validation of hand-written input") {
    REQUIRE_NOTHROW(parse_algebra_text(kMinimal));

    SECTION("unknown fields are rejected") {
        REQUIRE_THROWS_WITH(parse_algebra_text(with_field(kMinimal, "bogus", "3")),
                            Catch::Matchers::ContainsSubstring("bogus"));
    }
    SECTION("missing required fields are rejected") {
        REQUIRE_THROWS_WITH(parse_algebra_text(R"({"tensor_order": "left-major", "dim": 1})"),
                            Catch::Matchers::ContainsSubstring("required"));
    }
    SECTION("nonpositive dimension is rejected") {
        std::string text = kMinimal;
        text.replace(text.find("\"dim\": 1"), 8, "\"dim\": 0");
        REQUIRE_THROWS_WITH(parse_algebra_text(text),
                            Catch::Matchers::ContainsSubstring("dim"));
    }
    SECTION("rational grammar is strict") {
        for (const char* bad : {"\"1/0\"", "\"1.5\"", "\"x\"", "\" 1\"", "\"1/\"", "true"}) {
            std::string text = kMinimal;
            text.replace(text.find("\"mu\": [[\"1\"]]"), 13,
                         std::string("\"mu\": [[") + bad + "]]");
            INFO(bad);
            REQUIRE_THROWS_AS(parse_algebra_text(text), ParseError);
        }
    }
    SECTION("integer entries are accepted and normalized to strings") {
        std::string text = kMinimal;
        text.replace(text.find("\"mu\": [[\"1\"]]"), 13, "\"mu\": [[1]]");
        AlgebraSpec spec = parse_algebra_text(text);
        REQUIRE(spec.mu == LinMap::identity(1));
        json reserialized = serialize_algebra(spec);
        REQUIRE(reserialized["mu"][0][0].is_string());
        REQUIRE(reserialized["mu"][0][0] == "1");
    }
    SECTION("negative and reducible fractions normalize") {
        std::string text = kMinimal;
        text.replace(text.find("\"mu\": [[\"1\"]]"), 13, "\"mu\": [[\"-3/6\"]]");
        AlgebraSpec spec = parse_algebra_text(text);
        REQUIRE(spec.mu.entry(0, 0) == Rational(-1, 2));
    }
}

TEST_CASE("custom braids round-trip") {
    AlgebraSpec spec = load_algebra_file((data_dir() / "algebras" / "z2_group.json").string());
    REQUIRE(!spec.braid.has_value());
    spec.braid = swap_map(2, 2);
    std::string text = serialize_algebra_text(spec);
    REQUIRE(text.find("\"braid\"") != std::string::npos);
    AlgebraSpec again = parse_algebra_text(text);
    REQUIRE(again.braid.has_value());
    REQUIRE(*again.braid == swap_map(2, 2));
    REQUIRE(again.to_algebra().has_custom_braid());
    // a braid that is not invertible is rejected at algebra construction
    spec.braid = LinMap::zero(4, 4);
    REQUIRE_THROWS_AS(parse_algebra_text(serialize_algebra_text(spec)).to_algebra(),
                      InvalidBraid);
}

TEST_CASE("module blocks are validated structurally") {
    std::string text = with_field(kMinimal, "modules",
                                  R"({"m": {"carrier": 1, "action": [["1"]]}})");
    AlgebraSpec spec = parse_algebra_text(text);
    RightModule m = spec.find_module("m");
    REQUIRE(m.carrier == 1);
    REQUIRE_THROWS_AS(spec.find_module("absent"), ParseError);

    REQUIRE_THROWS_WITH(
        parse_algebra_text(with_field(kMinimal, "modules", R"({"m": {"carrier": 1}})")),
        Catch::Matchers::ContainsSubstring("carrier"));
    REQUIRE_THROWS_WITH(
        parse_algebra_text(with_field(kMinimal, "modules",
                                      R"({"m": {"carrier": -1, "action": [["1"]]}})")),
        Catch::Matchers::ContainsSubstring("nonnegative"));
}

TEST_CASE("meta entries survive the round trip and set the display name") {
    std::string text = with_field(kMinimal, "meta", R"({"name": "demo", "note": "hi"})");
    AlgebraSpec spec = parse_algebra_text(text);
    REQUIRE(spec.name == "demo");
    AlgebraSpec again = parse_algebra_text(serialize_algebra_text(spec));
    REQUIRE(again.name == "demo");
    bool found_note = false;
    for (const auto& [k, v] : again.meta)
        if (k == "note" && v == "hi") found_note = true;
    REQUIRE(found_note);
}
