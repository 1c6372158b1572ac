#pragma once

#include "spinwhit/numeric.hpp"

#include <string>
#include <vector>

namespace spinwhit {

/// Highest weight of Spin(r), r >= 1, with floor(r/2) half-integer entries.
/// Dominance: for odd r all entries decrease and the last is >= 0; for even
/// r the last entry may be negative but |last| is bounded by the previous
/// entry.  Spin(2) weights are single unconstrained half-integers (characters)
/// and Spin(1) weights are empty.
struct SpinWeight {
    int rank = 1;                  // the r of Spin(r)
    std::vector<HalfInt> entries;  // floor(r/2) values

    SpinWeight() = default;
    SpinWeight(int r, std::vector<HalfInt> e) : rank(r), entries(std::move(e)) {}

    int num_entries() const { return rank / 2; }

    /// Shape, common integrality of entries, and dominance.
    bool is_valid() const;
    void require_valid() const;  // throws std::invalid_argument with the reason

    /// True when all entries are whole; weights with no entries count as integral.
    bool integral_class() const;

    /// Highest weight of the contragredient representation: for r = 2n the last
    /// entry flips by (-1)^n, for odd r the weight is self-dual.
    SpinWeight dual() const;

    bool operator==(const SpinWeight&) const = default;
    bool operator<(const SpinWeight& o) const;

    std::string str() const;
};

}  // namespace spinwhit
