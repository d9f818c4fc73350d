#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace bilat {

/// One group's column of a 3x2 bilateral table: subjects with 0, 1, or 2
/// cured sites.
struct GroupCounts {
    std::int64_t cured0 = 0;
    std::int64_t cured1 = 0;
    std::int64_t cured2 = 0;
};

/// Real-valued cell counts. Identical layout to BilateralTable but allows
/// fractional cells, so the +1/2 ad-hoc adjustment flows through the same
/// likelihood code.
struct Cells {
    double m00 = 0, m10 = 0, m20 = 0;  // control
    double m01 = 0, m11 = 0, m21 = 0;  // treatment

    double m_plus0() const { return m00 + m10 + m20; }
    double m_plus1() const { return m01 + m11 + m21; }
    double m_1plus() const { return m10 + m11; }
    double m_2plus() const { return m20 + m21; }
    double m_0plus() const { return m00 + m01; }
    double ratio() const { return m_plus1() / m_plus0(); }
};

/// A validated 3x2 bilateral contingency table. m_h0 counts control-group
/// subjects with h cured sites, m_h1 the treatment group. Immutable after
/// construction via validate_table().
struct BilateralTable {
    std::int64_t m00 = 0, m10 = 0, m20 = 0;
    std::int64_t m01 = 0, m11 = 0, m21 = 0;

    std::int64_t m_plus0() const { return m00 + m10 + m20; }
    std::int64_t m_plus1() const { return m01 + m11 + m21; }
    std::int64_t m_1plus() const { return m10 + m11; }
    std::int64_t m_2plus() const { return m20 + m21; }
    std::int64_t m_0plus() const { return m00 + m01; }

    /// Sample-size ratio r = m_{+1}/m_{+0}.
    double ratio() const {
        return static_cast<double>(m_plus1()) / static_cast<double>(m_plus0());
    }

    Cells cells() const {
        return Cells{static_cast<double>(m00), static_cast<double>(m10),
                     static_cast<double>(m20), static_cast<double>(m01),
                     static_cast<double>(m11), static_cast<double>(m21)};
    }

    /// Cells with `amount` added to each of the six entries.
    Cells adjusted(double amount) const;
};

/// Builds a table from explicit control/treatment columns. The caller states
/// which column is control; roles are fixed thereafter.
///
/// Throws std::invalid_argument naming the offending field on a negative
/// count, or "empty group" when a group total is zero.
BilateralTable validate_table(const GroupCounts& control, const GroupCounts& treatment);

}  // namespace bilat
