#include "pathbij/errors.hpp"
#include "pathbij/path.hpp"
#include "oracle/brute_force.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace pathbij;
using test_support::P;
using test_support::S;

TEST_SUITE("path-core") {

TEST_CASE("parse_path builds steps and heights") {
    const Path empty = P("");
    CHECK(empty.empty());
    CHECK(empty.size() == 0);
    CHECK(empty.heights().size() == 1);

    const Path ufd = P("UFD");
    CHECK(std::vector<int>(ufd.heights().begin(), ufd.heights().end()) == std::vector<int>{0, 1, 1, 0});
    CHECK(ufd.size() == 2);
    CHECK(ufd.length() == 3);

    const Path size8_a = P("DUUDDDUUUUUDFDD");
    CHECK(size8_a.size() == 8);
    CHECK(size8_a.end_height() == 0);
}

TEST_CASE("parse_path reports the offending position") {
    try {
        (void)parse_path("UDxU");
        FAIL("expected InvalidCharacter");
    } catch (const InvalidCharacter& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS((void)parse_path("ud"), InvalidCharacter);
    CHECK_THROWS_AS((void)parse_path("U D"), InvalidCharacter);
}

TEST_CASE("classify") {
    const auto du = classify(P("DU"));
    CHECK(du.is_grand_schroeder);
    CHECK_FALSE(du.is_schroeder);
    CHECK(du.min_height == -1);

    const auto size8_b = classify(P("FUDUFDUUFUDDD"));
    CHECK(size8_b.is_schroeder);
    CHECK(size8_b.flat_heights == std::vector<int>{0, 1, 2});
    CHECK(size8_b.max_height == 3);

    CHECK_FALSE(classify(P("UU")).is_grand_schroeder);
}

TEST_CASE("class A membership with a configurable flat line") {
    CHECK(in_class_a(P("DUUDDDUUUUUDFDD")));
    CHECK_FALSE(in_class_a(P("F")));
    CHECK(in_class_a(P("F"), 0));
    CHECK(in_class_a(P("UFD"), 1));
    CHECK_FALSE(in_class_a(P("UFD")));
    CHECK(in_class_a(P("")));
    CHECK_FALSE(in_class_a(P("UUFD")));
}

TEST_CASE("class B membership") {
    CHECK(in_class_b(P("FUDUFDUUFUDDD")));
    CHECK_FALSE(in_class_b(P("UUDUDD")));
    CHECK(in_class_b(P("UDUD")));
    CHECK(in_class_b(P("")));
    CHECK_FALSE(in_class_b(P("DU")));
    CHECK_FALSE(in_class_b(P("UFDD")));
}

TEST_CASE("components") {
    auto names = [](const ComponentView& v) {
        std::vector<std::string> out;
        for (const auto& c : v.components) out.push_back(S(c.path));
        return out;
    };
    const auto size8_b = components(P("FUDUFDUUFUDDD"));
    CHECK(names(size8_b) == std::vector<std::string>{"F", "UD", "UFD", "UUFUDDD"});
    CHECK(size8_b.components[2].start == 3);

    const auto size8_a = components(P("DUUDDDUUUUUDFDD"));
    CHECK(names(size8_a) == std::vector<std::string>{"DU", "UD", "DDUU", "UUUDFDD"});
    CHECK(size8_a.components[3].start == 8);

    CHECK(components(P("")).count() == 0);
    CHECK_THROWS_AS(components(P("UUD")), NotGroundTerminated);
}

TEST_CASE("is_indecomposable") {
    CHECK(is_indecomposable(P("F")));
    CHECK(is_indecomposable(P("UUFUDDD")));
    CHECK_FALSE(is_indecomposable(P("")));
    CHECK_FALSE(is_indecomposable(P("UDUD")));
    CHECK_FALSE(is_indecomposable(P("UUD")));
}

TEST_CASE("peak_apexes") {
    CHECK(peak_apexes(P("UUDUDD")) == std::vector<std::size_t>{2, 4});
    CHECK(peak_apexes(P("UFD")).empty());
    CHECK(peak_apexes(P("UD")) == std::vector<std::size_t>{1});
}

TEST_CASE("reflect") {
    CHECK(S(reflect(P("DDUDDUUU"))) == "UUDUUDDD");
    CHECK(S(reflect(P("F"))) == "F");
    CHECK(S(reflect(P(""))) == "");
}

TEST_CASE("render_ascii") {
    CHECK(render_ascii(P("UD")) == "/\\");
    CHECK(render_ascii(P("UFD")) == " __\n/  \\");
    CHECK(render_ascii(P("")) == "");
    CHECK(render_ascii(P("DU")) == "\\/");
    CHECK(render_ascii(P("F")) == "__");
    // Two flats, at heights 1 and 2.
    CHECK(render_ascii(P("UFUFDD")) == "    __\n __/  \\\n/      \\");
}

TEST_CASE("MarkedPath mark validity") {
    CHECK(MarkedPath{P("UUDDUD"), {4}}.marks_valid());
    CHECK_FALSE(MarkedPath{P("UUDDUD"), {0}}.marks_valid());
    CHECK_FALSE(MarkedPath{P("UUDDUD"), {6}}.marks_valid());
    CHECK_FALSE(MarkedPath{P("UUDDUD"), {3}}.marks_valid());
}

TEST_CASE("property: text format roundtrip, reflection and components") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string s = test_support::random_steps(rng, 24);
        const Path p = P(s);
        REQUIRE(S(p) == s);
        CHECK(P(S(p)) == p);

        const Path r = reflect(p);
        CHECK(reflect(r) == p);
        for (std::size_t i = 0; i < p.heights().size(); ++i) {
            CHECK(r.heights()[i] == -p.heights()[i]);
        }

        const auto apexes = peak_apexes(p);
        for (std::size_t i = 1; i < apexes.size(); ++i) {
            CHECK(apexes[i] - apexes[i - 1] >= 2);
        }
        CHECK(p.heights().size() == p.length() + 1);
        CHECK(oracle::heights(s) == std::vector<int>(p.heights().begin(), p.heights().end()));
    }
}

TEST_CASE("property: components concatenate back and preserve class B") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        const Path p = P(test_support::random_grand(rng, 20));
        const auto view = components(p);
        Path joined;
        std::size_t size_sum = 0;
        bool every_b = true;
        for (const auto& c : view.components) {
            CHECK(is_indecomposable(c.path));
            CHECK(p.heights()[c.start] == 0);
            joined = joined + c.path;
            size_sum += c.path.size();
            every_b = every_b && in_class_b(c.path);
        }
        CHECK(joined == p);
        CHECK(size_sum == p.size());
        CHECK(in_class_b(p) == every_b);
        CHECK(in_class_b(p) == oracle::is_b(S(p)));
        CHECK(in_class_a(p) == oracle::is_a(S(p)));
    }
}

}
