#include <matchdeg/profile.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <variant>

using namespace matchdeg;

namespace {

const NumericRange& range_of(const StencilItem& item) {
    return std::get<NumericRange>(item.value);
}

const DiscreteSet& set_of(const StencilItem& item) {
    return std::get<DiscreteSet>(item.value);
}

}  // namespace

TEST_CASE("owner ids are trimmed and never empty", "[profile]") {
    CHECK(OwnerId{"Alice"}.value() == "Alice");
    CHECK(OwnerId{"  Alice\t"}.value() == "Alice");
    CHECK(OwnerId{"Alice"} == OwnerId{" Alice "});
    CHECK(OwnerId{"alice"} != OwnerId{"Alice"});
    CHECK_THROWS_AS(OwnerId{""}, std::invalid_argument);
    CHECK_THROWS_AS(OwnerId{" \t "}, std::invalid_argument);
}

TEST_CASE("numeric ranges hold ordered, NaN-free endpoints", "[profile]") {
    const auto inf = std::numeric_limits<double>::infinity();

    const NumericRange closed = NumericRange::closed(20.0, 40.0);
    CHECK(closed.lower() == 20.0);
    CHECK(closed.upper() == 40.0);
    CHECK_FALSE(closed.is_empty());

    CHECK(NumericRange::singleton(25.0) == NumericRange::closed(25.0, 25.0));
    CHECK(NumericRange::at_least(180.0).upper() == inf);
    CHECK(NumericRange::at_most(3.6).lower() == -inf);
    CHECK(NumericRange::all().lower() == -inf);
    CHECK(NumericRange::all().upper() == inf);

    CHECK_THROWS_AS(NumericRange::closed(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NumericRange::closed(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NumericRange::closed(1.0, std::nan("")), std::invalid_argument);
}

TEST_CASE("the empty range is a distinguished value", "[profile]") {
    const NumericRange empty = NumericRange::empty();
    CHECK(empty.is_empty());
    CHECK(empty == NumericRange{});
    CHECK_THROWS_AS(empty.lower(), std::logic_error);
    CHECK_THROWS_AS(empty.upper(), std::logic_error);
    CHECK_FALSE(empty.contains(0.0));
    CHECK(empty != NumericRange::closed(0.0, 0.0));
}

TEST_CASE("closed containment includes both endpoints", "[profile]") {
    const NumericRange range = NumericRange::closed(20.0, 40.0);
    CHECK(range.contains(20.0));
    CHECK(range.contains(40.0));
    CHECK(range.contains(30.0));
    CHECK_FALSE(range.contains(19.999));
    CHECK_FALSE(range.contains(40.001));
    CHECK(NumericRange::at_least(180.0).contains(1e300));
}

TEST_CASE("discrete sets deduplicate and reject empty values", "[profile]") {
    const DiscreteSet set{"Smith", "Taylor", "Smith"};
    CHECK(set.size() == 2);
    CHECK(set.contains("Taylor"));
    CHECK_FALSE(set.contains("Tailor"));
    CHECK_FALSE(set.single_value().has_value());
    CHECK(DiscreteSet{"blue"}.single_value() == "blue");
    CHECK(DiscreteSet{}.empty());
    CHECK_THROWS_AS(DiscreteSet{""}, std::invalid_argument);
}

TEST_CASE("interest levels live in [-1, 1]", "[profile]") {
    CHECK(InterestLevel{}.value() == 0.0);
    CHECK(InterestLevel{1.0}.value() == 1.0);
    CHECK(InterestLevel{-1.0}.value() == -1.0);
    CHECK_THROWS_AS(InterestLevel{1.0001}, std::invalid_argument);
    CHECK_THROWS_AS(InterestLevel{-1.0001}, std::invalid_argument);
    CHECK_THROWS_AS(InterestLevel{std::nan("")}, std::invalid_argument);
}

TEST_CASE("roles convert to and from text", "[profile]") {
    CHECK(to_string(Role::search) == "search");
    CHECK(to_string(Role::advertising) == "advertising");
    CHECK(role_from_string("search") == Role::search);
    CHECK(role_from_string("advertising") == Role::advertising);
    CHECK_FALSE(role_from_string("both").has_value());
    CHECK_FALSE(role_from_string("Search").has_value());
}

TEST_CASE("validation accepts a well-formed profile", "[profile]") {
    const Profile profile{OwnerId{"Alice"},
                          {{"age", NumericRange::closed(20.0, 40.0)}},
                          {{"eye_color", DiscreteSet{"blue", "green"}}},
                          {{"tennis", InterestLevel{1.0}}}};
    CHECK(validate_profile(profile).ok());
    CHECK(validate_profile(profile, Role::search).ok());
    CHECK(profile.item_count() == 3);
}

TEST_CASE("validation flags bad item names", "[profile]") {
    Profile profile{OwnerId{"Alice"}, {}, {}, {}};
    profile.numeric.emplace(" age", NumericRange::singleton(25.0));

    const ValidationReport report = validate_profile(profile);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].path == "numeric. age");
    CHECK(report.issues[0].message == "item name must not have surrounding whitespace");

    Profile unnamed{OwnerId{"Alice"}, {}, {}, {}};
    unnamed.interests.emplace("", InterestLevel{0.5});
    const ValidationReport empty_name = validate_profile(unnamed);
    REQUIRE(empty_name.issues.size() == 1);
    CHECK(empty_name.issues[0].message == "item name must be non-empty");
}

TEST_CASE("validation flags a name appearing under two kinds", "[profile]") {
    Profile profile{OwnerId{"Alice"}, {}, {}, {}};
    profile.numeric.emplace("age", NumericRange::singleton(25.0));
    profile.interests.emplace("age", InterestLevel{0.5});

    const ValidationReport report = validate_profile(profile);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].path == "interests.age");
    CHECK(report.issues[0].message == "item name also appears in numeric");
}

TEST_CASE("advertised discrete attributes must be single values", "[profile]") {
    Profile profile{OwnerId{"Alice"}, {}, {}, {}};
    profile.discrete.emplace("eye_color", DiscreteSet{"blue", "green"});

    CHECK(validate_profile(profile).ok());
    CHECK(validate_profile(profile, Role::search).ok());

    const ValidationReport report = validate_profile(profile, Role::advertising);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].path == "discrete.eye_color");
    CHECK(report.issues[0].message ==
          "advertised discrete attribute must be a single value");
}

TEST_CASE("validation errors carry the full report", "[profile]") {
    Profile profile{OwnerId{"Alice"}, {}, {}, {}};
    profile.discrete.emplace("eye_color", DiscreteSet{"blue", "green"});

    const ValidationError error{validate_profile(profile, Role::advertising)};
    REQUIRE(error.report().issues.size() == 1);
    CHECK_THAT(error.what(),
               Catch::Matchers::ContainsSubstring("discrete.eye_color"));
}

TEST_CASE("stencil shorthand covers the documented forms", "[profile]") {
    const auto inf = std::numeric_limits<double>::infinity();

    SECTION("equality with a number is a singleton range") {
        const StencilItem item = parse_stencil_shorthand("age = 25");
        CHECK(item.name == "age");
        CHECK(range_of(item) == NumericRange::singleton(25.0));
    }
    SECTION("equality with text is a one-element set") {
        const StencilItem item = parse_stencil_shorthand("name = Tailor");
        CHECK(item.name == "name");
        CHECK(set_of(item) == DiscreteSet{"Tailor"});
    }
    SECTION("greater-than is inclusive and unbounded above") {
        for (const char* text : {"height > 180", "height >= 180", "height>180"}) {
            const StencilItem item = parse_stencil_shorthand(text);
            CHECK(item.name == "height");
            CHECK(range_of(item) == NumericRange::closed(180.0, inf));
        }
    }
    SECTION("less-than is inclusive and unbounded below") {
        for (const char* text : {"age < 40", "age <= 40"}) {
            const StencilItem item = parse_stencil_shorthand(text);
            CHECK(range_of(item) == NumericRange::closed(-inf, 40.0));
        }
    }
    SECTION("interval membership") {
        const StencilItem item = parse_stencil_shorthand("age in [20, 40]");
        CHECK(range_of(item) == NumericRange::closed(20.0, 40.0));
    }
    SECTION("set membership") {
        const StencilItem item = parse_stencil_shorthand("eye_color in {blue, green}");
        CHECK(set_of(item) == DiscreteSet{"blue", "green"});
    }
    SECTION("values with internal spaces survive") {
        const StencilItem item = parse_stencil_shorthand("title = senior engineer");
        CHECK(set_of(item) == DiscreteSet{"senior engineer"});
    }
}

TEST_CASE("stencil errors carry the byte offset", "[profile]") {
    SECTION("missing name") {
        try {
            parse_stencil_shorthand("= 25");
            FAIL("expected StencilParseError");
        } catch (const StencilParseError& e) {
            CHECK(e.position() == 0);
        }
    }
    SECTION("missing operator") {
        try {
            parse_stencil_shorthand("age 25");
            FAIL("expected StencilParseError");
        } catch (const StencilParseError& e) {
            CHECK(e.position() == 4);
        }
    }
    SECTION("descending interval") {
        try {
            parse_stencil_shorthand("age in [20, 10]");
            FAIL("expected StencilParseError");
        } catch (const StencilParseError& e) {
            CHECK(e.position() == 7);
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("exceeds"));
        }
    }
    SECTION("other malformed inputs") {
        CHECK_THROWS_AS(parse_stencil_shorthand(""), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("age >"), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("age > x"), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("age in [20 40]"), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("age in [20, 40"), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("tags in {}"), StencilParseError);
        CHECK_THROWS_AS(parse_stencil_shorthand("x in [1,2] extra"), StencilParseError);
    }
}
