#include "spinwhit/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spinwhit {

int gt_row_length(int a) { return (a + 1) / 2; }

std::string GTPattern::str() const {
    std::string out;
    for (const auto& row : rows) {
        out += format_half_int_list(row);
    }
    return out;
}

std::string PartialGTPattern::str() const {
    std::string out;
    for (const auto& row : rows) out += format_half_int_list(row);
    return out;
}

bool rows_interlace(const std::vector<HalfInt>& upper, const std::vector<HalfInt>& lower,
                    int upper_index) {
    const int i = upper_index / 2;  // lower row length in both parities
    if (static_cast<int>(lower.size()) != i) {
        throw std::invalid_argument("row below row " + std::to_string(upper_index) + " must have " +
                                    std::to_string(i) + " entries");
    }
    if (i == 0) return true;
    for (int j = 0; j + 1 < i; ++j) {
        if (!(upper[j] >= lower[j] && lower[j] >= upper[j + 1])) return false;
    }
    if (upper_index % 2 == 1) {
        // odd upper row: up[i] >= lo[i] >= |up[i+1]|
        if (!(upper[i - 1] >= lower[i - 1] && lower[i - 1] >= upper[i].abs())) return false;
    } else {
        // even upper row: up[i] >= lo[i] >= -up[i]
        if (!(upper[i - 1] >= lower[i - 1] && lower[i - 1] >= -upper[i - 1])) return false;
    }
    if (!lower.empty() && !upper.empty() && !same_integrality(lower[0], upper[0])) return false;
    return true;
}

std::vector<std::vector<HalfInt>> rows_below(const std::vector<HalfInt>& upper, int upper_index) {
    const int i = upper_index / 2;
    std::vector<std::vector<HalfInt>> out;
    std::vector<HalfInt> cur(i, HalfInt(0));
    // per-coordinate closed bounds
    std::vector<HalfInt> lo(i), hi(i);
    for (int j = 0; j < i; ++j) {
        hi[j] = upper[j];
        if (j + 1 < i) {
            lo[j] = upper[j + 1];
        } else {
            lo[j] = (upper_index % 2 == 1) ? upper[i].abs() : -upper[i - 1];
        }
        if (lo[j] > hi[j]) return out;
    }
    // depth-first walk in ascending order
    std::vector<HalfInt> stack;
    std::function<void(int)> rec = [&](int j) {
        if (j == i) {
            out.push_back(cur);
            return;
        }
        for (HalfInt v = lo[j]; v <= hi[j]; v += HalfInt::whole(1)) {
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

bool validate_pattern(int rank, const std::vector<std::vector<HalfInt>>& rows) {
    if (static_cast<int>(rows.size()) != rank - 1) {
        throw std::invalid_argument("pattern for Spin(" + std::to_string(rank) + ") needs " +
                                    std::to_string(rank - 1) + " rows");
    }
    for (int a = 1; a <= rank - 1; ++a) {
        if (static_cast<int>(rows[a - 1].size()) != gt_row_length(a)) {
            throw std::invalid_argument("row " + std::to_string(a) + " must have " +
                                        std::to_string(gt_row_length(a)) + " entries");
        }
    }
    for (int a = rank - 1; a >= 2; --a) {
        if (!rows_interlace(rows[a - 1], rows[a - 2], a)) return false;
    }
    return true;
}

bool is_valid_pattern(const GTPattern& p) { return validate_pattern(p.rank, p.rows); }

bool is_valid_partial(const PartialGTPattern& p) {
    const int r = p.rank;
    for (int idx = 0; idx < 3; ++idx) {
        int a = r - 3 + idx;
        int want = a == 0 ? 0 : gt_row_length(a);
        if (static_cast<int>(p.rows[idx].size()) != want) {
            throw std::invalid_argument("partial pattern row " + std::to_string(a) + " must have " +
                                        std::to_string(want) + " entries");
        }
    }
    if (!rows_interlace(p.rows[2], p.rows[1], r - 1)) return false;
    if (r > 3 && !rows_interlace(p.rows[1], p.rows[0], r - 2)) return false;
    return true;
}

std::vector<GTPattern> enumerate_patterns(const SpinWeight& lambda) {
    lambda.require_valid();
    const int r = lambda.rank;
    std::vector<GTPattern> out;
    GTPattern cur;
    cur.rank = r;
    cur.rows.assign(static_cast<std::size_t>(r - 1), {});
    cur.rows[static_cast<std::size_t>(r - 2)] = lambda.entries;
    std::function<void(int)> rec = [&](int a) {
        if (a == 0) {
            out.push_back(cur);
            return;
        }
        for (auto& lower : rows_below(cur.rows[a], a + 1)) {
            cur.rows[a - 1] = std::move(lower);
            rec(a - 1);
        }
    };
    if (r == 2) {
        out.push_back(cur);
    } else {
        rec(r - 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int dimension(const SpinWeight& lambda) {
    return Int(enumerate_patterns(lambda).size());
}

std::vector<SpinWeight> branch(const SpinWeight& lambda) {
    lambda.require_valid();
    if (lambda.rank < 3) throw std::invalid_argument("branching needs rank >= 3");
    std::vector<SpinWeight> out;
    for (auto& row : rows_below(lambda.entries, lambda.rank - 1)) {
        out.emplace_back(lambda.rank - 1, std::move(row));
    }
    return out;
}

bool branch_contains(const SpinWeight& lambda, const SpinWeight& mu) {
    if (mu.rank != lambda.rank - 1) return false;
    if (static_cast<int>(mu.entries.size()) != mu.rank / 2) return false;
    return rows_interlace(lambda.entries, mu.entries, lambda.rank - 1);
}

GTPattern dualize(const GTPattern& p) {
    GTPattern out = p;
    for (int a = 2; a <= p.rank - 1; a += 2) {
        if ((a / 2) % 2 == 1) {
            auto& row = out.rows[static_cast<std::size_t>(a) - 1];
            row.back() = -row.back();
        }
    }
    return out;
}

std::vector<PartialGTPattern> enumerate_partial(const SpinWeight& lambda,
                                                const SpinWeight& gamma) {
    lambda.require_valid();
    gamma.require_valid();
    const int r = lambda.rank;
    if (gamma.rank != r - 2) {
        throw std::invalid_argument("partial patterns pair Spin(r) with Spin(r-2) weights");
    }
    std::vector<PartialGTPattern> out;
    SpinWeight lam_dual = lambda.dual();
    SpinWeight gam_dual = gamma.dual();
    for (auto& middle : rows_below(lam_dual.entries, r - 1)) {
        if (r > 3 && !rows_interlace(middle, gam_dual.entries, r - 2)) continue;
        PartialGTPattern p;
        p.rank = r;
        p.rows[0] = gam_dual.entries;
        p.rows[1] = std::move(middle);
        p.rows[2] = lam_dual.entries;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const PartialGTPattern& a, const PartialGTPattern& b) { return a.rows[1] < b.rows[1]; });
    return out;
}

GTPattern shifted(const GTPattern& p, int a, int j) {
    GTPattern out = p;
    if (j == 0) return out;
    auto& row = out.rows.at(static_cast<std::size_t>(a) - 1);
    row.at(static_cast<std::size_t>(std::abs(j)) - 1) += HalfInt::whole(j > 0 ? 1 : -1);
    return out;
}

PartialGTPattern shifted(const PartialGTPattern& p, int a, int j) {
    PartialGTPattern out = p;
    if (j == 0) return out;
    auto& row = out.rows.at(static_cast<std::size_t>(a - (p.rank - 3)));
    row.at(static_cast<std::size_t>(std::abs(j)) - 1) += HalfInt::whole(j > 0 ? 1 : -1);
    return out;
}

}  // namespace spinwhit
