// The two case-study tables used throughout the tests.
#pragma once

#include "bilat/table.hpp"

namespace fixtures {

// Otitis media with effusion: control = Cefaclor (0,1,3), treatment =
// Amoxicillin (1,0,6).
inline bilat::BilateralTable ome() {
    return bilat::validate_table(bilat::GroupCounts{0, 1, 3}, bilat::GroupCounts{1, 0, 6});
}

// Scleroderma forearm improvement: control = Placebo (55,3,3), treatment =
// Collagen (36,4,6).
inline bilat::BilateralTable scleroderma() {
    return bilat::validate_table(bilat::GroupCounts{55, 3, 3}, bilat::GroupCounts{36, 4, 6});
}

}  // namespace fixtures
