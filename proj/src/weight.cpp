#include "spinwhit/weight.hpp"

#include <stdexcept>

namespace spinwhit {

bool SpinWeight::is_valid() const {
    if (rank < 1) return false;
    if (static_cast<int>(entries.size()) != rank / 2) return false;
    if (entries.empty()) return true;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (!same_integrality(entries[0], entries[i])) return false;
    }
    if (rank == 2) return true;  // characters, no dominance constraint
    std::size_t m = entries.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        HalfInt next = (i + 2 == m && rank % 2 == 0) ? entries[i + 1].abs() : entries[i + 1];
        if (entries[i] < next) return false;
    }
    if (rank % 2 == 1 && entries[m - 1] < HalfInt(0)) return false;
    return true;
}

void SpinWeight::require_valid() const {
    if (static_cast<int>(entries.size()) != rank / 2) {
        throw std::invalid_argument("weight of Spin(" + std::to_string(rank) + ") needs " +
                                    std::to_string(rank / 2) + " entries, got " +
                                    std::to_string(entries.size()));
    }
    if (!is_valid()) {
        throw std::invalid_argument("not a dominant Spin(" + std::to_string(rank) +
                                    ") weight: " + str());
    }
}

bool SpinWeight::integral_class() const {
    return entries.empty() || entries[0].is_integer();
}

SpinWeight SpinWeight::dual() const {
    SpinWeight out = *this;
    if (rank % 2 == 0 && !entries.empty() && (rank / 2) % 2 == 1) {
        out.entries.back() = -out.entries.back();
    }
    return out;
}

bool SpinWeight::operator<(const SpinWeight& o) const {
    if (rank != o.rank) return rank < o.rank;
    return entries < o.entries;
}

std::string SpinWeight::str() const {
    return format_half_int_list(entries);
}

}  // namespace spinwhit
