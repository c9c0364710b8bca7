#include "pathbij/errors.hpp"
#include "pathbij/families.hpp"
#include "oracle/brute_force.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pathbij;
using test_support::P;
using test_support::S;

namespace {

std::vector<std::string> names(const std::vector<Path>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) out.push_back(S(p));
    return out;
}

// Frozen from oracle::class_a / oracle::class_b (filtering all step strings), n = 0..6.
const std::vector<unsigned> frozen_counts{1, 2, 6, 21, 79, 309, 1237};

} // namespace

TEST_SUITE("families") {

TEST_CASE("frozen small counts agree with the brute-force oracle") {
    for (std::size_t n = 0; n < frozen_counts.size(); ++n) {
        CHECK(oracle::class_a(n).size() == frozen_counts[n]);
        CHECK(oracle::class_b(n).size() == frozen_counts[n]);
    }
}

TEST_CASE("enumerate_class_a examples") {
    CHECK(names(enumerate_class_a(0)) == std::vector<std::string>{""});
    CHECK(names(enumerate_class_a(1)) == std::vector<std::string>{"DU", "UD"});
    CHECK(names(enumerate_class_a(2)) ==
          std::vector<std::string>{"DDUU", "DUDU", "DUUD", "UDDU", "UDUD", "UUDD"});
}

TEST_CASE("enumerate_class_b examples") {
    CHECK(names(enumerate_class_b(1)) == std::vector<std::string>{"F", "UD"});
    CHECK(enumerate_class_b(2).size() == 6);
    const auto b3 = names(enumerate_class_b(3));
    CHECK(b3.size() == 21);
    CHECK(std::find(b3.begin(), b3.end(), "UUDUDD") == b3.end());
}

TEST_CASE("enumerators match the oracle exactly, including order") {
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(names(enumerate_class_a(n)) == oracle::class_a(n));
        CHECK(names(enumerate_class_b(n)) == oracle::class_b(n));
        for (int line : {0, 1, 3}) {
            CHECK(names(enumerate_class_a(n, line)) == oracle::class_a(n, line));
        }
    }
}

TEST_CASE("enumerations are strictly sorted and class A paths are balanced") {
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto a = enumerate_class_a(n);
        const auto b = enumerate_class_b(n);
        CHECK(std::adjacent_find(a.begin(), a.end(), std::greater_equal<>()) == a.end());
        CHECK(std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) == b.end());
        for (const Path& p : a) {
            const auto c = classify(p);
            CHECK(p.size() == n);
            CHECK(std::count(p.steps().begin(), p.steps().end(), Step::Up) ==
                  std::count(p.steps().begin(), p.steps().end(), Step::Down));
            CHECK(std::all_of(c.flat_heights.begin(), c.flat_heights.end(), [](int h) { return h == 2; }));
        }
    }
}

TEST_CASE("counters") {
    CHECK(count_class_a(0) == 1);
    CHECK(count_class_a(2) == 6);
    CHECK(count_class_a(3) == 21);
    CHECK(count_class_b(0) == 1);
    CHECK(count_class_b(1) == 2);
    CHECK(count_class_b(3) == 21);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(count_class_a(n) == enumerate_class_a(n).size());
        CHECK(count_class_b(n) == enumerate_class_b(n).size());
    }
    for (std::size_t n = 0; n <= 6; ++n) {
        for (int line : {-1, 0, 1, 3}) {
            CHECK(count_class_a(n, line) == oracle::class_a(n, line).size());
        }
    }
}

TEST_CASE("counters agree far beyond 64-bit range") {
    for (std::size_t n = 0; n <= 60; ++n) {
        CHECK(count_class_a(n) == count_class_b(n));
    }
    CHECK(count_class_a(60) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("indec_census") {
    CHECK(indec_census(1) == Census{1, 1, 1, 1});
    const auto c2 = indec_census(2);
    CHECK(c2.below_a == c2.nopeak_b);
    CHECK(c2.above_a == c2.onepeak_b);

    bool found_below = false;
    for (const Path& p : enumerate_class_a(4)) found_below |= S(p) == "DDUDDUUU";
    bool found_nopeak = false;
    for (const Path& q : enumerate_class_b(4)) found_nopeak |= S(q) == "UFUFDD";
    CHECK(found_below);
    CHECK(found_nopeak);

    for (std::size_t n = 1; n <= 6; ++n) {
        Census expect;
        for (const auto& s : oracle::class_a(n)) {
            if (oracle::split_components(s).size() != 1) continue;
            ++(s[0] == 'D' ? expect.below_a : expect.above_a);
        }
        for (const auto& s : oracle::class_b(n)) {
            if (oracle::split_components(s).size() != 1) continue;
            ++(oracle::count_peaks(s) == 0 ? expect.nopeak_b : expect.onepeak_b);
        }
        CHECK(indec_census(n) == expect);
    }
    CHECK_THROWS_AS(indec_census(0), PreconditionViolated);
}

}
