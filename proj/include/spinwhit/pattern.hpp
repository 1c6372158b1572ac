#pragma once

#include "spinwhit/weight.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spinwhit {

/// Triangle of rows q_1, ..., q_{r-1} where row a holds floor((a+1)/2)
/// half-integers, all of one integrality class, subject to the interlacing
/// conditions below, with top row q_{r-1} equal to the highest weight.
struct GTPattern {
    int rank = 3;                             // the r of Spin(r)
    std::vector<std::vector<HalfInt>> rows;   // rows[a-1] is q_a

    const std::vector<HalfInt>* row_or_null(int a) const {
        if (a < 1 || a > rank - 1) return nullptr;
        return &rows[static_cast<std::size_t>(a) - 1];
    }

    SpinWeight top_weight() const { return SpinWeight(rank, rows.back()); }

    bool operator==(const GTPattern&) const = default;
    bool operator<(const GTPattern& o) const { return rows < o.rows; }
    std::string str() const;
};

/// The top three rows (q_{r-3}, q_{r-2}, q_{r-1}) = (gamma*, middle, lambda*)
/// of a pattern, indexing a basis of the invariant pairing space between a
/// Spin(r) type lambda and a Spin(r-2) type gamma.  For r = 3 the bottom row
/// is empty.
struct PartialGTPattern {
    int rank = 3;
    std::array<std::vector<HalfInt>, 3> rows;  // [0]=q_{r-3}, [1]=q_{r-2}, [2]=q_{r-1}

    const std::vector<HalfInt>* row_or_null(int a) const {
        int base = rank - 3;
        if (a < base || a > rank - 1) return nullptr;
        if (a == 0) return nullptr;  // r = 3: there is no row 0
        return &rows[static_cast<std::size_t>(a - base)];
    }

    const std::vector<HalfInt>& middle() const { return rows[1]; }
    const std::vector<HalfInt>& top() const { return rows[2]; }

    bool operator==(const PartialGTPattern&) const = default;
    bool operator<(const PartialGTPattern& o) const { return rows < o.rows; }
    std::string str() const;
};

/// Expected length of row a: floor((a+1)/2).
int gt_row_length(int a);

/// Interlacing between a row at index `upper_index` and the row below it.
/// For odd upper rows the lower entries sit between consecutive upper entries
/// with the last bounded by |up.back()|; for even upper rows the last lower
/// entry is bounded by +-up.back().
bool rows_interlace(const std::vector<HalfInt>& upper, const std::vector<HalfInt>& lower,
                    int upper_index);

/// All rows that can sit directly below `upper` (row index `upper_index`),
/// in ascending lexicographic order.
std::vector<std::vector<HalfInt>> rows_below(const std::vector<HalfInt>& upper, int upper_index);

/// Shape check throws std::invalid_argument; the return value reports the
/// interlacing and integrality conditions.
bool validate_pattern(int rank, const std::vector<std::vector<HalfInt>>& rows);

bool is_valid_pattern(const GTPattern& p);
bool is_valid_partial(const PartialGTPattern& p);

/// All patterns with top row lambda, sorted lexicographically on the
/// concatenation bottom row first.
std::vector<GTPattern> enumerate_patterns(const SpinWeight& lambda);

/// Number of patterns = dimension of the representation.
Int dimension(const SpinWeight& lambda);

/// Restriction to Spin(r-1): the multiplicity-free list of interlacing
/// weights, ascending.
std::vector<SpinWeight> branch(const SpinWeight& lambda);
bool branch_contains(const SpinWeight& lambda, const SpinWeight& mu);

/// Pattern dual: odd rows kept, even row 2i flips its last entry by (-1)^i.
GTPattern dualize(const GTPattern& p);

/// All partial patterns (gamma*, t, lambda*), ordered by the middle row.
std::vector<PartialGTPattern> enumerate_partial(const SpinWeight& lambda, const SpinWeight& gamma);

/// In-place row shift by +-1 at position |j| of row a (1-based); j != 0.
/// j = 0 is the identity shift.
GTPattern shifted(const GTPattern& p, int a, int j);
PartialGTPattern shifted(const PartialGTPattern& p, int a, int j);

}  // namespace spinwhit
