#include "bilat/table.hpp"

#include <stdexcept>

namespace bilat {

namespace {

void check_nonnegative(std::int64_t value, const char* field) {
    if (value < 0) {
        throw std::invalid_argument(std::string("negative count in field ") + field);
    }
}

}  // namespace

Cells BilateralTable::adjusted(double amount) const {
    Cells c = cells();
    c.m00 += amount;
    c.m10 += amount;
    c.m20 += amount;
    c.m01 += amount;
    c.m11 += amount;
    c.m21 += amount;
    return c;
}

BilateralTable validate_table(const GroupCounts& control, const GroupCounts& treatment) {
    check_nonnegative(control.cured0, "control.cured0");
    check_nonnegative(control.cured1, "control.cured1");
    check_nonnegative(control.cured2, "control.cured2");
    check_nonnegative(treatment.cured0, "treatment.cured0");
    check_nonnegative(treatment.cured1, "treatment.cured1");
    check_nonnegative(treatment.cured2, "treatment.cured2");

    BilateralTable t;
    t.m00 = control.cured0;
    t.m10 = control.cured1;
    t.m20 = control.cured2;
    t.m01 = treatment.cured0;
    t.m11 = treatment.cured1;
    t.m21 = treatment.cured2;

    if (t.m_plus0() == 0) throw std::invalid_argument("empty group: control total is zero");
    if (t.m_plus1() == 0) throw std::invalid_argument("empty group: treatment total is zero");
    return t;
}

}  // namespace bilat
