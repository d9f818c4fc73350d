#include <doctest.h>

#include <stdexcept>

#include "bilat/table.hpp"
#include "support/fixtures.hpp"

using namespace bilat;

TEST_CASE("OME table derived sums") {
    const auto t = fixtures::ome();
    CHECK(t.m_plus0() == 4);
    CHECK(t.m_plus1() == 7);
    CHECK(t.m_1plus() == 1);
    CHECK(t.m_2plus() == 9);
    CHECK(t.m00 == 0);
    CHECK(t.m21 == 6);
}

TEST_CASE("scleroderma table derived sums and ratio") {
    const auto t = fixtures::scleroderma();
    CHECK(t.m_plus0() == 61);
    CHECK(t.m_plus1() == 46);
    CHECK(t.ratio() == doctest::Approx(46.0 / 61.0).epsilon(1e-15));
}

TEST_CASE("empty group is rejected") {
    CHECK_THROWS_WITH_AS(validate_table(GroupCounts{0, 0, 0}, GroupCounts{1, 2, 3}),
                         doctest::Contains("empty group"), std::invalid_argument);
    CHECK_THROWS_AS(validate_table(GroupCounts{1, 2, 3}, GroupCounts{0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("negative counts are rejected with the field named") {
    CHECK_THROWS_WITH_AS(validate_table(GroupCounts{1, -2, 3}, GroupCounts{1, 2, 3}),
                         doctest::Contains("control.cured1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_table(GroupCounts{1, 2, 3}, GroupCounts{1, 2, -1}),
                         doctest::Contains("treatment.cured2"), std::invalid_argument);
}

TEST_CASE("adjusted cells add the amount to every cell") {
    const auto c = fixtures::ome().adjusted(0.5);
    CHECK(c.m00 == 0.5);
    CHECK(c.m10 == 1.5);
    CHECK(c.m_plus0() == doctest::Approx(5.5));
    CHECK(c.m_plus1() == doctest::Approx(8.5));
}
