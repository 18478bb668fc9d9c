#include <doctest.h>

#include <algorithm>

#include "toricbv/corpus.hpp"
#include "toricbv/fan.hpp"

using namespace toricbv;

TEST_SUITE_BEGIN("fan");

namespace {

Fan p2_fan() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("projective plane validates") {
    const FanReport report = validate(p2_fan());
    CHECK(report.primitive);
    CHECK(report.simplicial_smooth);
    CHECK(report.complete);
    CHECK(report.valid());
    CHECK(report.messages.empty());
}

TEST_CASE("missing cone breaks completeness") {
    const Fan fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {2, 0}});
    const FanReport report = validate(fan);
    CHECK(report.primitive);
    CHECK(report.simplicial_smooth);
    CHECK(!report.complete);
}

TEST_CASE("non-primitive ray is flagged") {
    const Fan fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
    const FanReport report = validate(fan);
    CHECK(!report.primitive);
    bool mentions_gcd = false;
    for (const auto& m : report.messages)
        if (m.find("gcd 2") != std::string::npos) mentions_gcd = true;
    CHECK(mentions_gcd);
}

TEST_CASE("non-unimodular cone is flagged") {
    // rays (1,0) and (1,2) span a cone of determinant 2
    const Fan fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!validate(fan).simplicial_smooth);
}

TEST_CASE("overlapping cones are not complete") {
    // two copies of the positive quadrant plus a genuine complement
    const Fan fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                  {{0, 1}, {0, 3}, {1, 2}, {2, 0}});
    const FanReport report = validate(fan);
    CHECK(!report.complete);
}

TEST_CASE("out-of-range cone index is a structural error") {
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{0, 7}}), input_error);
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{0}}), input_error);
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Fan(0, {}, {}), input_error);
    CHECK_THROWS_AS(Fan(2, {{1, 0, 0}}, {}), input_error);
}

TEST_CASE("cone counts") {
    const Fan fan = p2_fan();
    CHECK(cone_count(fan, 0) == 1);
    CHECK(cone_count(fan, 1) == 3);
    CHECK(cone_count(fan, 2) == 3);
    CHECK_THROWS_AS(cone_count(fan, 3), input_error);
    CHECK_THROWS_AS(cone_count(fan, -1), input_error);
}

TEST_CASE("validation is order independent") {
    const FanReport base = validate(p2_fan());
    // permute rays (2,0,1) and cones, remapping indices
    const Fan permuted(2, {{-1, -1}, {1, 0}, {0, 1}}, {{2, 0}, {1, 2}, {0, 1}});
    const FanReport perm = validate(permuted);
    CHECK(base.primitive == perm.primitive);
    CHECK(base.simplicial_smooth == perm.simplicial_smooth);
    CHECK(base.complete == perm.complete);
}

TEST_CASE("the projective line validates, its walls are the origin") {
    const Fan fan(1, {{1}, {-1}}, {{0}, {1}});
    CHECK(validate(fan).valid());
    CHECK(cone_count(fan, 1) == 2);
    // a 1-dimensional fan missing one half line is incomplete
    const Fan half(1, {{1}}, {{0}});
    CHECK(!validate(half).complete);
}

TEST_CASE("every bundled fan validates") {
    for (const auto& named : corpus::standard()) {
        const FanReport report = validate(named.fan);
        CAPTURE(named.name);
        CHECK(report.valid());
    }
    CHECK(corpus::standard().size() == 10);
}

TEST_CASE("bundled fan lookup") {
    CHECK(corpus::find("p2").has_value());
    CHECK(corpus::find("blowup16").has_value());
    CHECK(!corpus::find("nonexistent").has_value());
}

TEST_SUITE_END();
